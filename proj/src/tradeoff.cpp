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

#include "qid/tradeoff.hpp"

#include "qid/errors.hpp"
#include "qid/random.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace qid {

namespace {

RealVector padded_sorted(const RealVector& v, int length) {
    RealVector out = RealVector::Zero(length);
    out.head(v.size()) = v;
    std::sort(out.data(), out.data() + out.size(), std::greater<double>());
    return out;
}

int sign_with_tolerance(double x, double tol = 1e-12) {
    if (x > tol) {
        return 1;
    }
    if (x < -tol) {
        return -1;
    }
    return 0;
}

bool pairwise_orthogonal(const Ensemble& e) {
    for (int i = 0; i < e.size(); ++i) {
        for (int j = i + 1; j < e.size(); ++j) {
            if (std::abs(e.state(i).dot(e.state(j))) > kTolAlgebra) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

MajorizationVerdict weak_majorizes(const RealVector& x, const RealVector& y, double tol) {
    const int n = static_cast<int>(std::max(x.size(), y.size()));
    const RealVector xs = padded_sorted(x, n);
    const RealVector ys = padded_sorted(y, n);
    MajorizationVerdict v;
    v.padded_length = n;
    double px = 0.0;
    double py = 0.0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        px += xs(k);
        py += ys(k);
        worst = std::max(worst, px - py);
    }
    v.worst_partial_sum_gap = worst;
    v.holds = worst <= tol;
    return v;
}

MajorizationVerdict majorizes(const RealVector& x, const RealVector& y, double tol) {
    MajorizationVerdict v = weak_majorizes(x, y, tol);
    v.holds = v.holds && std::abs(x.sum() - y.sum()) <= tol;
    return v;
}

RealVector joint_probability_vector(const Ensemble& e, const Contraction& m) {
    if (e.dim() != m.dim()) {
        throw InvalidInput("joint_probability_vector: dimension mismatch");
    }
    RealVector joint(e.size());
    for (int j = 0; j < e.size(); ++j) {
        joint(j) = e.prior(j) * (m.matrix() * e.state(j)).squaredNorm();
    }
    return joint;
}

TradeoffVector tradeoff_vector(const Matrix& rho, const Contraction& m) {
    if (rho.rows() != m.dim() || rho.cols() != m.dim()) {
        throw InvalidInput("tradeoff_vector: dimension mismatch");
    }
    const SvdFactors f = svd_aligned(m.matrix(), rho, m.factors().tol_rank);
    const Matrix projected = f.right.adjoint() * rho * f.right;

    TradeoffVector t;
    t.ensemble_weights.resize(m.dim());
    double p = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        t.ensemble_weights(i) = std::max(0.0, projected(i, i).real());
        p += t.ensemble_weights(i) * f.singular_values(i) * f.singular_values(i);
    }
    if (p <= kTolProbability) {
        throw OutcomeImpossible("tradeoff_vector: outcome probability vanishes");
    }
    t.outcome_prob = p;

    std::vector<double> entries;
    for (int i = 0; i < m.dim(); ++i) {
        if (t.ensemble_weights(i) > kTolSupport) {
            entries.push_back(t.ensemble_weights(i) * f.singular_values(i) *
                              f.singular_values(i) / p);
        }
    }
    t.support_size = static_cast<int>(entries.size());
    t.spectrum =
        Eigen::Map<RealVector>(entries.data(), static_cast<Eigen::Index>(entries.size()));
    return t;
}

TradeoffVector tradeoff_vector(const Ensemble& e, const Contraction& m) {
    return tradeoff_vector(density_operator(e), m);
}

StochasticCertificate stochastic_certificate(const Ensemble& e, const Contraction& m) {
    if (e.dim() != m.dim()) {
        throw InvalidInput("stochastic_certificate: dimension mismatch");
    }
    const Matrix rho = density_operator(e);
    const SvdFactors f = svd_aligned(m.matrix(), rho, m.factors().tol_rank);
    const Matrix projected = f.right.adjoint() * rho * f.right;

    std::vector<int> support;
    for (int i = 0; i < m.dim(); ++i) {
        if (projected(i, i).real() > kTolSupport) {
            support.push_back(i);
        }
    }
    const int n = e.size();
    const int r = static_cast<int>(support.size());

    StochasticCertificate cert;
    cert.mixing.resize(n, r);
    for (int c = 0; c < r; ++c) {
        const int i = support[static_cast<std::size_t>(c)];
        const double weight = projected(i, i).real();
        for (int j = 0; j < n; ++j) {
            const double overlap = std::norm(e.state(j).dot(f.right.col(i)));
            cert.mixing(j, c) = e.prior(j) * overlap / weight;
        }
    }
    cert.row_sums = cert.mixing.rowwise().sum();
    cert.quasi_parallel =
        (r == 0) || (cert.row_sums.maxCoeff() <= 1.0 + kTolAlgebra);
    if (cert.quasi_parallel) {
        cert.augmented = RealMatrix::Zero(n + r, n + r);
        cert.augmented.topLeftCorner(n, r) = cert.mixing;
        for (int j = 0; j < n; ++j) {
            cert.augmented(j, r + j) = std::max(0.0, 1.0 - cert.row_sums(j));
        }
        cert.augmented.bottomRightCorner(r, n) = cert.mixing.transpose();
    }
    return cert;
}

MajorizationVerdict verify_weak_majorization(const Ensemble& e, const Contraction& m) {
    const RealVector joint = joint_probability_vector(e, m);
    const RealVector sigma_sq = m.factors().singular_values.array().square();
    return weak_majorizes(joint, sigma_sq);
}

MajorizationVerdict verify_majorization(const Ensemble& e, const Contraction& m) {
    const ParallelismVerdict parallelism = classify_parallelism(e, m);
    if (!parallelism.quasi_parallel()) {
        throw PreconditionViolated(
            "verify_majorization: ensemble is not quasi-parallel; squash first");
    }
    const Ensemble post = posterior(e, m);
    const TradeoffVector t = tradeoff_vector(e, m);
    return majorizes(post.priors(), t.spectrum);
}

double disturbance(const Ensemble& e, const Contraction& m) {
    const TradeoffVector t = tradeoff_vector(e, m);
    const double value = -entropy_bits(t.spectrum);
    const double floor = -std::log2(static_cast<double>(m.rank()));
    if (value < floor - kTolAlgebra || value > kTolAlgebra) {
        throw Error("disturbance: value escaped its [-log2 r(M), 0] range");
    }
    return value;
}

BoundReport tradeoff_bound(const Ensemble& e, const Contraction& m) {
    const ParallelismVerdict parallelism = classify_parallelism(e, m);
    if (!parallelism.quasi_parallel()) {
        throw PreconditionViolated(
            "tradeoff_bound: ensemble is not quasi-parallel; squash first");
    }
    BoundReport report;
    report.info_gain_bits = information_gain(e, m);
    report.prior_entropy_bits = prior_entropy(e);
    report.spectrum_entropy_bits = entropy_bits(tradeoff_vector(e, m).spectrum);
    report.bound_bits = report.prior_entropy_bits - report.spectrum_entropy_bits;
    report.slack_bits = report.bound_bits - report.info_gain_bits;
    return report;
}

SquashedTradeoffReport squashed_tradeoff(const Ensemble& e, const Contraction& m) {
    SquashedTradeoffReport report;
    const SquashResult sq = squash(e, m);
    report.already_quasi_parallel = !sq.changed;
    report.copy_counts = sq.copy_counts;
    report.info_gain_bits = information_gain(e, m);
    report.prior_entropy_bits = prior_entropy(e);
    const TradeoffVector t = tradeoff_vector(e, m);
    report.spectrum_entropy_bits = entropy_bits(t.spectrum);

    double correction = 0.0;
    if (sq.changed) {
        const Ensemble post = posterior(e, m);
        for (int j = 0; j < e.size(); ++j) {
            const int copies = sq.copy_counts[static_cast<std::size_t>(j)];
            if (copies > 1) {
                correction += (e.prior(j) - post.prior(j)) *
                              std::log2(static_cast<double>(copies));
            }
        }
    }
    report.correction_bits = correction;
    report.correction_sign = sign_with_tolerance(correction);
    report.rhs_bits =
        report.prior_entropy_bits - report.spectrum_entropy_bits - correction;
    report.slack_bits = report.rhs_bits - report.info_gain_bits;

    report.squashed_info_gain_bits = information_gain(sq.ensemble, m);
    const double squashed_bound =
        prior_entropy(sq.ensemble) - report.spectrum_entropy_bits;
    report.squashed_bound_slack_bits = squashed_bound - report.squashed_info_gain_bits;
    return report;
}

AveragedTradeoffReport averaged_tradeoff(const Ensemble& e, const PureInstrument& inst) {
    if (e.dim() != inst.dim()) {
        throw InvalidInput("averaged_tradeoff: dimension mismatch");
    }
    AveragedTradeoffReport report;
    report.prior_entropy_bits = prior_entropy(e);
    const Matrix rho = density_operator(e);
    report.von_neumann_bits = von_neumann_entropy(rho);
    report.holevo_bits = report.von_neumann_bits; // pure-state ensemble
    report.orthogonal_ensemble = pairwise_orthogonal(e);
    report.all_quasi_parallel = true;

    for (int i = 0; i < inst.size(); ++i) {
        const Contraction& m = inst.outcome(i);
        OutcomeTradeoff entry;
        entry.label = inst.label(i);
        entry.probability = ensemble_probability(e, m);
        if (entry.probability <= kTolProbability) {
            entry.skipped = true;
            report.outcomes.push_back(std::move(entry));
            continue;
        }
        const ParallelismVerdict parallelism = classify_parallelism(e, m);
        entry.parallelism = parallelism.kind;
        entry.squashed = !parallelism.quasi_parallel();
        report.all_quasi_parallel = report.all_quasi_parallel && !entry.squashed;
        entry.info_gain_bits = information_gain(e, m);
        entry.spectrum_entropy_bits = entropy_bits(tradeoff_vector(e, m).spectrum);
        report.average_info_bits += entry.probability * entry.info_gain_bits;
        report.mean_spectrum_entropy_bits +=
            entry.probability * entry.spectrum_entropy_bits;
        report.outcomes.push_back(std::move(entry));
    }

    report.bound_bits = report.prior_entropy_bits - report.mean_spectrum_entropy_bits;
    report.slack_bits = report.bound_bits - report.average_info_bits;
    report.holevo_bound_bits = report.von_neumann_bits - report.mean_spectrum_entropy_bits;
    report.holevo_slack_bits = report.holevo_bound_bits - report.average_info_bits;

    if (report.all_quasi_parallel && report.slack_bits < -kTolCompleteness) {
        throw Error("averaged_tradeoff: averaged bound violated on quasi-parallel input");
    }
    return report;
}

double unitary_correlation(const Contraction& m) {
    const RealVector& sigma = m.factors().singular_values;
    const double trace_norm = sigma.sum();
    const double frobenius_sq = sigma.squaredNorm();
    const double d = static_cast<double>(m.dim());
    return (trace_norm * trace_norm + frobenius_sq) / (d * (d + 1.0));
}

MonteCarloEstimate monte_carlo_unitary_correlation(const Contraction& m, int n_samples,
                                                   std::uint64_t seed) {
    if (n_samples < 2) {
        throw InvalidInput("monte_carlo_unitary_correlation: need at least 2 samples");
    }
    // With the polar unitary V = X Y^dag, V^dag M = Y Sigma Y^dag.
    const SvdFactors& f = m.factors();
    const Matrix a = f.right * f.singular_values.asDiagonal() * f.right.adjoint();

    Rng rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    Vector psi(m.dim());
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < n_samples; ++s) {
        for (int i = 0; i < m.dim(); ++i) {
            psi(i) = Complex(gauss(rng), gauss(rng));
        }
        psi /= psi.norm();
        const double value = std::norm(psi.dot(a * psi));
        sum += value;
        sum_sq += value * value;
    }
    MonteCarloEstimate est;
    est.n_samples = n_samples;
    est.mean = sum / n_samples;
    const double variance =
        std::max(0.0, sum_sq / n_samples - est.mean * est.mean);
    est.std_error = std::sqrt(variance / n_samples);
    return est;
}

EntanglementReductionReport entanglement_reduction_check(const Contraction& m,
                                                         const Matrix& rho) {
    if (rho.rows() != m.dim() || rho.cols() != m.dim()) {
        throw InvalidInput("entanglement_reduction_check: dimension mismatch");
    }
    if (!is_density_operator(rho)) {
        throw InvalidInput("entanglement_reduction_check: rho is not a density operator");
    }
    if (commutator_norm(rho, m.effect()) > kTolAlgebra) {
        throw PreconditionViolated(
            "entanglement_reduction_check: rho does not commute with the effect");
    }
    EntanglementReductionReport report;

    const TradeoffVector t = tradeoff_vector(rho, m);
    report.spectrum_route_bits = -entropy_bits(t.spectrum);

    Matrix reduced = m.matrix() * rho * m.matrix().adjoint();
    const double occurrence = reduced.trace().real();
    if (occurrence <= kTolProbability) {
        throw OutcomeImpossible("entanglement_reduction_check: outcome cannot occur");
    }
    reduced /= occurrence;
    report.reduced_state_route_bits = -von_neumann_entropy(reduced);

    // Purification |Psi> = sum_k sqrt(e_k) |v_k>|v_k>, then (M x I) and Tr_2.
    const int d = m.dim();
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
    Vector purification = Vector::Zero(d * d);
    for (int k = 0; k < d; ++k) {
        const double weight = std::max(0.0, es.eigenvalues()(k));
        const Vector component = std::sqrt(weight) * es.eigenvectors().col(k);
        const Vector image = m.matrix() * component;
        for (int a_idx = 0; a_idx < d; ++a_idx) {
            for (int b_idx = 0; b_idx < d; ++b_idx) {
                purification(static_cast<Eigen::Index>(a_idx) * d + b_idx) +=
                    image(a_idx) * es.eigenvectors()(b_idx, k);
            }
        }
    }
    purification /= purification.norm();
    const Matrix measured = purification * purification.adjoint();
    report.purification_route_bits =
        -von_neumann_entropy(partial_trace_second(measured, d, d));

    if (std::abs(report.spectrum_route_bits - report.reduced_state_route_bits) >
            kTolCompleteness ||
        std::abs(report.reduced_state_route_bits - report.purification_route_bits) >
            kTolCompleteness) {
        throw Error("entanglement_reduction_check: the three routes disagree");
    }
    return report;
}

double chaotic_disturbance(const Contraction& m) {
    if (m.rank() < 1) {
        throw InvalidInput("chaotic_disturbance: zero contraction");
    }
    const RealVector sigma_sq = m.factors().singular_values.array().square();
    const RealVector flattened = sigma_sq / sigma_sq.sum();
    return -entropy_bits(flattened);
}

double ozawa_disturbance(const Contraction& m) {
    if (m.rank() < 1) {
        throw InvalidInput("ozawa_disturbance: zero contraction");
    }
    return -std::log2(static_cast<double>(m.rank()));
}

} // namespace qid
