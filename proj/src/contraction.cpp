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

#include "qid/contraction.hpp"

#include "qid/errors.hpp"

#include <cmath>

namespace qid {

Contraction::Contraction(Matrix m, double tol_rank) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw InvalidInput("Contraction: matrix must be square and non-empty");
    }
    if (!is_finite(matrix_)) {
        throw InvalidInput("Contraction: matrix has non-finite entries");
    }
    svd_ = svd(matrix_, tol_rank);
    if (svd_.sigma_max() > 1.0 + kTolAlgebra) {
        throw InvalidInput("Contraction: operator norm exceeds 1");
    }
}

MeasurementResult apply(const Contraction& m, const Vector& psi) {
    if (psi.size() != m.dim()) {
        throw InvalidInput("apply: state dimension mismatch");
    }
    if (std::abs(psi.norm() - 1.0) > kTolAlgebra) {
        throw InvalidInput("apply: input state is not normalized");
    }
    const Vector out = m.matrix() * psi;
    const double p = out.squaredNorm();
    if (p <= kTolProbability) {
        throw OutcomeImpossible("apply: outcome probability vanishes");
    }
    return {out / std::sqrt(p), p};
}

double outcome_probability(const Contraction& m, const Matrix& rho) {
    if (rho.rows() != m.dim() || rho.cols() != m.dim()) {
        throw InvalidInput("outcome_probability: dimension mismatch");
    }
    return (m.matrix() * rho * m.matrix().adjoint()).trace().real();
}

} // namespace qid
