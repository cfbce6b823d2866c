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

/// Knowingly reversible measurements: classification of when a contraction
/// can be probabilistically undone with certainty of success, the optimal
/// reverser built from the pseudoinverse, bounds on the reversion
/// probability, and the verification that undoing a measurement erases the
/// information it produced.

#ifndef QID_REVERSAL_HPP
#define QID_REVERSAL_HPP

#include "qid/ensemble.hpp"
#include "qid/measurement.hpp"

#include <vector>

namespace qid {

enum class ReversibilityKind {
    FullRank,              // invertible; reversible on any state set
    OrthogonallySplit,     // every state lies in Ker(M) or in Rng(M^dag)
    DegenerateSingleton,   // only one state outside Ker(M); reported, no plan
    NotKnowinglyReversible
};

struct ReversibilityVerdict {
    ReversibilityKind kind = ReversibilityKind::NotKnowinglyReversible;
    std::vector<int> supported;   // indices of states inside Rng(M^dag)
    std::vector<int> annihilated; // indices of states inside Ker(M)
};

ReversibilityVerdict classify_reversibility(const Contraction& m, const Ensemble& e);

enum class ReversionKind { FullRankInverse, PseudoInverseSplit };

struct ReversionPlan {
    Contraction reverser;            // the optimal undoing contraction
    double round_trip_probability;   // p(reverser * M) = sigma_r(M)^2, input independent
    ReversionKind kind;
    bool free_term_included = false; // extra term supported on Rng(M)-complement
};

/// Optimal reverser pinv(M) / |pinv(M)|, with the proportionality constant
/// of reverser * M real positive. Throws InvalidInput for the zero matrix.
ReversionPlan optimal_reversion(const Contraction& m);

/// Same, plus a caller-supplied free term Z acting only on the orthogonal
/// complement of Rng(M); requires |Z (I - P_M)| <= 1 and the total to stay
/// a contraction.
ReversionPlan optimal_reversion(const Contraction& m, const Matrix& free_term);

struct ReversionBounds {
    double lower; // kappa(M)^{-2}
    double upper; // 1
    // Post-measurement states attaining the bounds: the left singular
    // vectors of M for sigma_1 (worst case) and sigma_d (best case).
    Vector worst_case_state;
    Vector best_case_state;
};

/// Bounds on the probability of successfully reverting a full-rank
/// contraction. Throws RankDeficient otherwise.
ReversionBounds reversion_probability_bounds(const Contraction& m);

struct ReversionChain {
    double round_trip_probability; // sigma_d(M)^2
    double geometric_mean_bound;   // [prod_i sigma_i(M)^2]^{1/d}
    double mean_square_bound;      // |M|_2^2 / d
};

/// The state-independent probability of measuring and successfully undoing,
/// with its two-step upper-bound chain. Throws RankDeficient when M is not
/// full rank.
ReversionChain cascade_reversion_probability(const Contraction& m);

struct ErasureReport {
    ReversibilityKind kind;
    double forward_bits;  // information from M on the ensemble
    double reversal_bits; // information from the reverser on the evolved ensemble
    double total_bits;    // sum of the two steps
    double direct_bits;   // information from the composite reverser * M
    double residual_bits; // H(priors) - H(priors restricted to Rng(M^dag))
};

/// Runs the measurement-then-reversal bookkeeping and checks that the two
/// information routes agree: total equals direct, which is zero for
/// full-rank M and equals the split-ensemble residual otherwise. Throws
/// NotReversible when M is not knowingly reversible on the ensemble.
ErasureReport verify_erasure(const Ensemble& e, const Contraction& m);

} // namespace qid

#endif // QID_REVERSAL_HPP
