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

#ifndef QID_CONTRACTION_HPP
#define QID_CONTRACTION_HPP

#include "qid/linalg.hpp"

#include <utility>

namespace qid {

/// Below this occurrence probability an outcome counts as impossible.
inline constexpr double kTolProbability = 1e-12;

/// A single measurement outcome: a square operator with operator norm <= 1,
/// carrying its SVD. The state change is psi -> M psi / |M psi| and the
/// occurrence probability is |M psi|^2.
class Contraction {
  public:
    /// Throws InvalidInput unless `m` is square, finite and has
    /// sigma_1 <= 1 + 1e-9.
    explicit Contraction(Matrix m, double tol_rank = kTolRank);

    const Matrix& matrix() const { return matrix_; }
    const SvdFactors& factors() const { return svd_; }
    int dim() const { return static_cast<int>(matrix_.rows()); }
    int rank() const { return svd_.rank; }
    bool full_rank() const { return svd_.rank == dim(); }
    double sigma_max() const { return svd_.sigma_max(); }
    /// Smallest singular value (including zero when rank deficient).
    double sigma_min() const { return svd_.singular_values(dim() - 1); }

    /// Effect operator M^dag M (the POVM element of this outcome).
    Matrix effect() const { return matrix_.adjoint() * matrix_; }

  private:
    Matrix matrix_;
    SvdFactors svd_;
};

struct MeasurementResult {
    Vector post_state;
    double probability = 0.0;
};

/// Born rule plus state reduction. Throws OutcomeImpossible when the
/// occurrence probability is at most 1e-12, and InvalidInput on dimension
/// mismatch or a non-unit input state.
MeasurementResult apply(const Contraction& m, const Vector& psi);

/// Occurrence probability of the outcome on a mixed input, Tr[rho M^dag M].
double outcome_probability(const Contraction& m, const Matrix& rho);

} // namespace qid

#endif // QID_CONTRACTION_HPP
