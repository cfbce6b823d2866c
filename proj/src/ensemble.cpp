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

#include "qid/ensemble.hpp"

#include "qid/errors.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qid {

Ensemble::Ensemble(std::vector<Vector> states, RealVector priors)
    : states_(std::move(states)), priors_(std::move(priors)) {
    if (states_.empty() || priors_.size() != static_cast<Eigen::Index>(states_.size())) {
        throw InvalidInput("Ensemble: need one prior per state");
    }
    const Eigen::Index dim = states_.front().size();
    if (dim < 1) {
        throw InvalidInput("Ensemble: empty state vector");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < states_.size(); ++j) {
        if (states_[j].size() != dim) {
            throw InvalidInput("Ensemble: states have mixed dimensions");
        }
        if (std::abs(states_[j].norm() - 1.0) > kTolAlgebra) {
            throw InvalidInput("Ensemble: state is not normalized");
        }
        if (priors_(static_cast<Eigen::Index>(j)) < -kTolSupport) {
            throw InvalidInput("Ensemble: negative prior");
        }
        total += priors_(static_cast<Eigen::Index>(j));
    }
    if (std::abs(total - 1.0) > kTolAlgebra) {
        throw InvalidInput("Ensemble: priors do not sum to 1");
    }
}

Matrix density_operator(const Ensemble& e) {
    Matrix rho = Matrix::Zero(e.dim(), e.dim());
    for (int j = 0; j < e.size(); ++j) {
        rho.noalias() += e.prior(j) * (e.state(j) * e.state(j).adjoint());
    }
    return rho;
}

double prior_entropy(const Ensemble& e) {
    return shannon_entropy(e.priors());
}

ParallelismVerdict classify_parallelism(const Ensemble& e, const Contraction& m) {
    if (e.dim() != m.dim()) {
        throw InvalidInput("classify_parallelism: dimension mismatch");
    }
    const Matrix rho = density_operator(e);
    ParallelismVerdict v;
    v.commutator_norm = commutator_norm(rho, m.effect());

    const SvdFactors f = svd_aligned(m.matrix(), rho);
    const Matrix projected = f.right.adjoint() * rho * f.right;
    RealVector inv_weight = RealVector::Zero(e.dim());
    for (int i = 0; i < e.dim(); ++i) {
        const double w = projected(i, i).real();
        if (w > kTolSupport) {
            inv_weight(i) = 1.0 / w;
        }
    }
    const Matrix zeta_pinv = f.right * inv_weight.asDiagonal() * f.right.adjoint();

    v.row_sums.resize(e.size());
    bool all_below_one = true;
    for (int j = 0; j < e.size(); ++j) {
        const double s = e.prior(j) * e.state(j).dot(zeta_pinv * e.state(j)).real();
        v.row_sums(j) = s;
        all_below_one = all_below_one && s <= 1.0 + kTolAlgebra;
    }
    if (v.commutator_norm <= kTolAlgebra) {
        v.kind = Parallelism::Parallel;
    } else if (all_below_one) {
        v.kind = Parallelism::QuasiParallel;
    } else {
        v.kind = Parallelism::NotQuasiParallel;
    }
    return v;
}

SquashResult squash(const Ensemble& e, const Contraction& m) {
    const ParallelismVerdict v = classify_parallelism(e, m);
    if (v.quasi_parallel()) {
        return {e, std::vector<int>(static_cast<std::size_t>(e.size()), 1), false};
    }
    std::vector<Vector> states;
    std::vector<int> counts(static_cast<std::size_t>(e.size()), 1);
    std::vector<double> priors;
    for (int j = 0; j < e.size(); ++j) {
        int copies = 1;
        if (v.row_sums(j) > 1.0 + kTolAlgebra) {
            copies = static_cast<int>(std::ceil(v.row_sums(j) * (1.0 + 1e-9)));
        }
        counts[static_cast<std::size_t>(j)] = copies;
        for (int l = 0; l < copies; ++l) {
            states.push_back(e.state(j));
            priors.push_back(e.prior(j) / copies);
        }
    }
    RealVector pv = Eigen::Map<RealVector>(priors.data(), static_cast<Eigen::Index>(priors.size()));
    return {Ensemble(std::move(states), std::move(pv)), std::move(counts), true};
}

Ensemble basis_ensemble(int dim) {
    if (dim < 1) {
        throw InvalidInput("basis_ensemble: dim must be positive");
    }
    std::vector<Vector> states;
    states.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        Vector v = Vector::Zero(dim);
        v(k) = Complex(1.0, 0.0);
        states.push_back(std::move(v));
    }
    return Ensemble(std::move(states), RealVector::Constant(dim, 1.0 / dim));
}

Ensemble conjugate_basis_ensemble(int dim) {
    if (dim < 2) {
        throw InvalidInput("conjugate_basis_ensemble: dim must be at least 2");
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Vector> states;
    states.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        Vector v(dim);
        for (int l = 0; l < dim; ++l) {
            const double phase = 2.0 * std::numbers::pi * k * l / dim;
            v(l) = norm * Complex(std::cos(phase), std::sin(phase));
        }
        states.push_back(std::move(v));
    }
    return Ensemble(std::move(states), RealVector::Constant(dim, 1.0 / dim));
}

} // namespace qid
