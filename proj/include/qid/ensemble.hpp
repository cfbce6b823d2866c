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

/// The which-state hypothesis set: a finite list of pure states with prior
/// probabilities, its density operator, and its relation to a measurement
/// contraction (parallel / quasi-parallel / neither, and the squashing
/// construction that restores quasi-parallelism).

#ifndef QID_ENSEMBLE_HPP
#define QID_ENSEMBLE_HPP

#include "qid/contraction.hpp"
#include "qid/linalg.hpp"
#include "qid/random.hpp"

#include <vector>

namespace qid {

class Ensemble {
  public:
    /// Throws InvalidInput unless all states are unit vectors of one common
    /// dimension and the priors are a probability vector (within 1e-9).
    Ensemble(std::vector<Vector> states, RealVector priors);

    const std::vector<Vector>& states() const { return states_; }
    const RealVector& priors() const { return priors_; }
    const Vector& state(int j) const { return states_[static_cast<std::size_t>(j)]; }
    double prior(int j) const { return priors_(j); }
    int size() const { return static_cast<int>(states_.size()); }
    int dim() const { return static_cast<int>(states_.front().size()); }

  private:
    std::vector<Vector> states_;
    RealVector priors_;
};

/// rho = sum_j a_j |psi_j><psi_j|.
Matrix density_operator(const Ensemble& e);

/// Shannon entropy of the priors, in bits.
double prior_entropy(const Ensemble& e);

enum class Parallelism {
    Parallel,        // rho commutes with M^dag M
    QuasiParallel,   // all row sums s_j <= 1
    NotQuasiParallel
};

struct ParallelismVerdict {
    Parallelism kind = Parallelism::NotQuasiParallel;
    RealVector row_sums;        // s_j, one per ensemble state
    double commutator_norm = 0.0;

    bool quasi_parallel() const { return kind != Parallelism::NotQuasiParallel; }
};

/// Classifies the ensemble against the contraction. The row sums are
/// a_j <psi_j| Y zeta^+ Y^dag |psi_j> with zeta the support-restricted
/// diagonal of Y^dag rho Y in the contraction's (rho-aligned) right basis.
ParallelismVerdict classify_parallelism(const Ensemble& e, const Contraction& m);

struct SquashResult {
    Ensemble ensemble;
    std::vector<int> copy_counts; // copies per original state (1 = untouched)
    bool changed = false;         // false: input was already quasi-parallel
};

/// Splits every state with row sum s_j > 1 into ceil(s_j (1 + 1e-9))
/// identical copies with uniform prior shares. The density operator is
/// unchanged and the result is quasi-parallel to `m`. Quasi-parallel inputs
/// are returned unchanged with `changed = false`.
SquashResult squash(const Ensemble& e, const Contraction& m);

/// Uniform ensemble of the d computational basis states.
Ensemble basis_ensemble(int dim);

/// Uniform ensemble of the discrete-Fourier-conjugate basis
/// |y_k> = d^{-1/2} sum_l exp(i k l 2 pi / d) |x_l>.
Ensemble conjugate_basis_ensemble(int dim);

} // namespace qid

#endif // QID_ENSEMBLE_HPP
