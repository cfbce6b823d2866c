// Copyright 2026 The qid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qid/measurement.hpp"

#include "qid/errors.hpp"
#include "qid/random.hpp"

#include <cmath>
#include <utility>

namespace qid {

namespace {

bool is_unitary(const Matrix& u, double tol = kTolAlgebra) {
    if (u.rows() != u.cols()) {
        return false;
    }
    const Matrix gram = u.adjoint() * u;
    return (gram - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

} // namespace

PureInstrument::PureInstrument(std::vector<Contraction> outcomes,
                               std::vector<std::string> labels)
    : outcomes_(std::move(outcomes)), labels_(std::move(labels)) {
    if (outcomes_.empty()) {
        throw InvalidInstrument("PureInstrument: no outcomes");
    }
    const int d = outcomes_.front().dim();
    Matrix total = Matrix::Zero(d, d);
    for (const auto& m : outcomes_) {
        if (m.dim() != d) {
            throw InvalidInstrument("PureInstrument: outcomes have mixed dimensions");
        }
        total += m.effect();
    }
    if ((total - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > kTolCompleteness) {
        throw InvalidInstrument("PureInstrument: effects do not sum to the identity");
    }
    if (labels_.empty()) {
        for (std::size_t i = 0; i < outcomes_.size(); ++i) {
            labels_.push_back(std::to_string(i));
        }
    } else if (labels_.size() != outcomes_.size()) {
        throw InvalidInstrument("PureInstrument: one label per outcome required");
    }
}

double ensemble_probability(const Ensemble& e, const Contraction& m) {
    if (e.dim() != m.dim()) {
        throw InvalidInput("ensemble_probability: dimension mismatch");
    }
    double p = 0.0;
    for (int j = 0; j < e.size(); ++j) {
        p += e.prior(j) * (m.matrix() * e.state(j)).squaredNorm();
    }
    return p;
}

Ensemble posterior(const Ensemble& e, const Contraction& m) {
    const double p = ensemble_probability(e, m);
    if (p <= kTolProbability) {
        throw OutcomeImpossible("posterior: outcome cannot occur on this ensemble");
    }
    RealVector updated(e.size());
    for (int j = 0; j < e.size(); ++j) {
        updated(j) = e.prior(j) * (m.matrix() * e.state(j)).squaredNorm() / p;
    }
    return Ensemble(e.states(), std::move(updated));
}

Ensemble evolve(const Ensemble& e, const Contraction& m) {
    const double p = ensemble_probability(e, m);
    if (p <= kTolProbability) {
        throw OutcomeImpossible("evolve: outcome cannot occur on this ensemble");
    }
    std::vector<Vector> states;
    std::vector<double> priors;
    for (int j = 0; j < e.size(); ++j) {
        const Vector out = m.matrix() * e.state(j);
        const double pj = out.squaredNorm();
        if (e.prior(j) * pj <= kTolProbability) {
            continue;
        }
        states.push_back(out / std::sqrt(pj));
        priors.push_back(e.prior(j) * pj / p);
    }
    RealVector pv = Eigen::Map<RealVector>(priors.data(), static_cast<Eigen::Index>(priors.size()));
    return Ensemble(std::move(states), std::move(pv));
}

double information_gain(const Ensemble& e, const Contraction& m) {
    return prior_entropy(e) - prior_entropy(posterior(e, m));
}

double average_information(const Ensemble& e, const PureInstrument& inst) {
    double avg = 0.0;
    for (const auto& m : inst.outcomes()) {
        const double p = ensemble_probability(e, m);
        if (p <= kTolProbability) {
            continue;
        }
        avg += p * information_gain(e, m);
    }
    return avg;
}

double holevo_chi(const Ensemble& e) {
    return von_neumann_entropy(density_operator(e));
}

Matrix ObservableSpec::basis_or_identity() const {
    return basis.size() ? basis : Matrix::Identity(dim(), dim());
}

Matrix ObservableSpec::backaction_or_identity(int y) const {
    if (backactions.empty()) {
        return Matrix::Identity(dim(), dim());
    }
    return backactions[static_cast<std::size_t>(y)];
}

void validate(const ObservableSpec& spec) {
    const int d = spec.dim();
    const int n = spec.n_outcomes();
    if (d < 1 || n < 1) {
        throw InvalidSpec("ObservableSpec: empty conditional probability matrix");
    }
    if (spec.cond_prob.minCoeff() < -kTolSupport) {
        throw InvalidSpec("ObservableSpec: negative conditional probability");
    }
    for (int x = 0; x < d; ++x) {
        if (std::abs(spec.cond_prob.col(x).sum() - 1.0) > kTolAlgebra) {
            throw InvalidSpec("ObservableSpec: column sums must equal 1");
        }
    }
    if (spec.basis.size() && !is_unitary(spec.basis)) {
        throw InvalidSpec("ObservableSpec: basis is not orthonormal");
    }
    if (!spec.backactions.empty()) {
        if (static_cast<int>(spec.backactions.size()) != n) {
            throw InvalidSpec("ObservableSpec: one back-action per outcome required");
        }
        for (const auto& w : spec.backactions) {
            if (!is_unitary(w)) {
                throw InvalidSpec("ObservableSpec: back-action is not unitary");
            }
        }
    }
}

PureInstrument observable_instrument(const ObservableSpec& spec) {
    validate(spec);
    const int d = spec.dim();
    const Matrix basis = spec.basis_or_identity();
    std::vector<Contraction> outcomes;
    outcomes.reserve(static_cast<std::size_t>(spec.n_outcomes()));
    for (int y = 0; y < spec.n_outcomes(); ++y) {
        RealVector roots(d);
        for (int x = 0; x < d; ++x) {
            roots(x) = std::sqrt(std::max(0.0, spec.cond_prob(y, x)));
        }
        const Matrix diagonal = basis * roots.asDiagonal() * basis.adjoint();
        outcomes.emplace_back(spec.backaction_or_identity(y) * diagonal);
    }
    return PureInstrument(std::move(outcomes));
}

ScanReport scan_report(const ObservableSpec& spec) {
    const PureInstrument inst = observable_instrument(spec);
    ScanReport report;
    report.complete = true;
    report.nondegenerate = true;
    Matrix total = Matrix::Zero(inst.dim(), inst.dim());
    for (const auto& m : inst.outcomes()) {
        report.outcome_ranks.push_back(m.rank());
        report.complete = report.complete && m.full_rank();
        const RealVector& sigma = m.factors().singular_values;
        if (sigma.size() > 1 && sigma(0) <= sigma(1) + kTolAlgebra) {
            report.nondegenerate = false;
        }
        total += m.effect();
    }
    report.effect_sum_rank = svd(total).rank;
    return report;
}

bool is_complete_scan(const ObservableSpec& spec) {
    return scan_report(spec).complete;
}

bool is_nondegenerate(const ObservableSpec& spec) {
    return scan_report(spec).nondegenerate;
}

double bhattacharyya_overlap(const ObservableSpec& spec) {
    validate(spec);
    const int d = spec.dim();
    double overlap = 0.0;
    for (int y = 0; y < spec.n_outcomes(); ++y) {
        double product = 1.0;
        for (int x = 0; x < d; ++x) {
            product *= std::max(0.0, spec.cond_prob(y, x));
        }
        overlap += std::pow(product, 1.0 / d);
    }
    return overlap;
}

CascadeTrace cascade(const ObservableSpec& spec, int true_index, int n_steps,
                     bool compensate, std::uint64_t seed) {
    validate(spec);
    const int d = spec.dim();
    if (true_index < 0 || true_index >= d) {
        throw InvalidInput("cascade: true_index out of range");
    }
    if (n_steps < 1) {
        throw InvalidInput("cascade: need at least one step");
    }
    const PureInstrument inst = observable_instrument(spec);

    CascadeTrace trace;
    trace.true_index = true_index;
    trace.compensated = compensate;
    trace.nondegenerate = is_nondegenerate(spec);

    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const Matrix basis = spec.basis_or_identity();
    const Vector reference = basis.col(true_index);
    Matrix product = Matrix::Identity(d, d);
    Vector state = reference;
    RealVector log_likelihood = RealVector::Zero(d);

    trace.steps.reserve(static_cast<std::size_t>(n_steps));
    for (int t = 0; t < n_steps; ++t) {
        // Inverse-CDF sample of the outcome under the true value.
        const double u = unit(rng);
        int y = spec.n_outcomes() - 1;
        double acc = 0.0;
        for (int cand = 0; cand < spec.n_outcomes(); ++cand) {
            acc += spec.cond_prob(cand, true_index);
            if (u < acc) {
                y = cand;
                break;
            }
        }

        Matrix op = inst.outcome(y).matrix();
        if (compensate) {
            op = spec.backaction_or_identity(y).adjoint() * op;
        }
        product = op * product;

        for (int x = 0; x < d; ++x) {
            const double p = spec.cond_prob(y, x);
            log_likelihood(x) += (p > 0.0) ? std::log(p) : -1e30;
        }
        RealVector post(d);
        const double shift = log_likelihood.maxCoeff();
        for (int x = 0; x < d; ++x) {
            post(x) = std::exp(log_likelihood(x) - shift);
        }
        post /= post.sum();

        const Vector next = op * state;
        const double norm_sq = next.squaredNorm();
        double fidelity = 0.0;
        if (norm_sq > kTolProbability) {
            state = next / std::sqrt(norm_sq);
            fidelity = std::norm(reference.dot(state));
        } else {
            state = Vector::Zero(d);
        }

        const RealVector sigma = svd(product).singular_values;
        trace.steps.push_back({y, std::move(post), sigma(d - 1) * sigma(d - 1), fidelity});
    }
    return trace;
}

} // namespace qid
