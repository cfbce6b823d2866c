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

/// Seeded random generators for states, unitaries, contractions and
/// probability vectors. Every generator takes the engine explicitly so runs
/// are reproducible and independent draws can be sharded by seed.

#ifndef QID_RANDOM_HPP
#define QID_RANDOM_HPP

#include "qid/linalg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qid {

using Rng = std::mt19937_64;

/// Default seed used by the CLI and documented in the README.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Matrix with i.i.d. standard complex Gaussian entries.
Matrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed random pure state.
Vector haar_random_state(int dim, Rng& rng);
Vector haar_random_state(int dim, std::uint64_t seed);

/// Haar-distributed random unitary (QR of a Ginibre matrix with the phase
/// convention fixed so the distribution is exactly Haar).
Matrix haar_random_unitary(int dim, Rng& rng);

/// Random point on the probability simplex (uniform via exponential trick).
RealVector random_simplex(int n, Rng& rng);

/// Random full-rank density operator with Haar eigenbasis.
Matrix random_density(int dim, Rng& rng);

/// Random contraction matrix rescaled so sigma_1 = 1. If 0 < rank < dim the
/// trailing singular values are zeroed out first.
Matrix random_contraction_matrix(int dim, Rng& rng, int rank = -1);

/// n_outcomes random matrices A_i normalized as M_i = A_i (sum A_j^dag A_j)^{-1/2}
/// so that sum M_i^dag M_i = I; each M_i is automatically a contraction.
std::vector<Matrix> random_instrument_matrices(int dim, int n_outcomes, Rng& rng);

/// Random column-stochastic conditional-probability matrix p(y|x) with
/// n_outcomes rows and dim columns (columns sum to 1 over outcomes).
RealMatrix random_conditional_probabilities(int n_outcomes, int dim, Rng& rng);

} // namespace qid

#endif // QID_RANDOM_HPP
