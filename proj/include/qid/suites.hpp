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

/// Randomized verification suites. Each suite draws seeded random instances
/// and checks the inequalities and identities of its subject area; a check
/// records its violation amount (positive = failed) so reports can show the
/// worst margin even when everything passes. Suites are deterministic for a
/// fixed configuration.

#ifndef QID_SUITES_HPP
#define QID_SUITES_HPP

#include "qid/ensemble.hpp"
#include "qid/measurement.hpp"
#include "qid/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qid {

struct SuiteConfig {
    std::uint64_t seed = kDefaultSeed;
    int dim = 4;       // maximum dimension for random draws
    int trials = 500;  // instances per suite
    double tol_rank = kTolRank;
    double tol_major = kTolAlgebra;
    int mc_samples = 100000; // Haar samples per Monte-Carlo estimate
};

struct SuiteResult {
    std::string name;
    int trials = 0;
    int checks = 0;
    int failures = 0; // trials with at least one failed check
    /// max over checks of (amount - tolerance); negative = margin to spare.
    double worst_violation = -1.0;
    /// First offending instance, serialized; empty when everything passed.
    std::string detail;

    bool passed() const { return failures == 0; }
};

SuiteResult suite_moore_penrose(const SuiteConfig& cfg);
SuiteResult suite_weak_majorization(const SuiteConfig& cfg);
SuiteResult suite_majorization_tradeoff(const SuiteConfig& cfg);
SuiteResult suite_holevo_chain(const SuiteConfig& cfg);
SuiteResult suite_reversal(const SuiteConfig& cfg);
SuiteResult suite_unitary_correlation(const SuiteConfig& cfg);
SuiteResult suite_entanglement_reduction(const SuiteConfig& cfg);
SuiteResult suite_observable_bhattacharyya(const SuiteConfig& cfg);
SuiteResult suite_conjugate_zero_information(const SuiteConfig& cfg);
SuiteResult suite_disturbance_bounds(const SuiteConfig& cfg);

std::vector<std::string> suite_names();
std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg);

// Random-instance generators shared by the suites and the test binaries.

/// Haar states with simplex priors; between 2 and max_states states.
Ensemble random_ensemble(int dim, int max_states, Rng& rng);

/// Random subset of a Haar orthonormal basis with simplex priors.
Ensemble random_orthogonal_ensemble(int dim, Rng& rng);

/// Ensemble parallel to `m` by construction: states drawn from the right
/// singular basis, either single basis vectors or balanced two-vector
/// superpositions whose density contributions stay diagonal there.
Ensemble random_parallel_ensemble(const Contraction& m, Rng& rng);

/// Random complete instrument with between 2 and dim + 1 outcomes.
PureInstrument random_instrument(int dim, Rng& rng);

} // namespace qid

#endif // QID_SUITES_HPP
