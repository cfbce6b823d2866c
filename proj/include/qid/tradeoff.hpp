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

/// The majorization engine and the information-disturbance trade-off
/// quantities built on it: the joint probability vector of a measurement
/// outcome against a hypothesis ensemble, the spectrum vector whose entropy
/// defines the disturbance, the stochastic certificate matrices behind the
/// two majorization relations, the per-outcome and outcome-averaged bounds,
/// the input-output unitary correlation, and the entanglement-reduction
/// cross-check.

#ifndef QID_TRADEOFF_HPP
#define QID_TRADEOFF_HPP

#include "qid/ensemble.hpp"
#include "qid/measurement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qid {

struct MajorizationVerdict {
    bool holds = false;
    /// Largest prefix-sum excess of x over y after sorting; positive values
    /// beyond the tolerance are violations.
    double worst_partial_sum_gap = 0.0;
    int padded_length = 0;
};

/// Weak majorization x <_w y: both vectors are zero-padded to a common
/// length, sorted non-increasing, and every prefix sum of x must not exceed
/// the corresponding prefix sum of y by more than `tol`.
MajorizationVerdict weak_majorizes(const RealVector& x, const RealVector& y,
                                   double tol = kTolAlgebra);

/// Majorization x < y: weak majorization plus equal totals within `tol`.
MajorizationVerdict majorizes(const RealVector& x, const RealVector& y,
                              double tol = kTolAlgebra);

/// Joint probabilities a_j * |M psi_j|^2; sums to the overall occurrence
/// probability of the outcome.
RealVector joint_probability_vector(const Ensemble& e, const Contraction& m);

/// The normalized spectrum lambda_i sigma_i^2 / p restricted to the support
/// of the ensemble weights lambda (diagonal of Y^dag rho Y in the aligned
/// right basis of the contraction). Its negative entropy is the
/// disturbance.
struct TradeoffVector {
    RealVector spectrum;         // probability vector on the support
    RealVector ensemble_weights; // lambda_i for all dim indices
    double outcome_prob = 0.0;   // sum_i lambda_i sigma_i^2
    int support_size = 0;        // count of lambda_i above the support cutoff
};

TradeoffVector tradeoff_vector(const Ensemble& e, const Contraction& m);
TradeoffVector tradeoff_vector(const Matrix& rho, const Contraction& m);

/// The column-stochastic mixing matrix relating the joint probabilities to
/// the weighted squared singular values, and, for quasi-parallel ensembles,
/// its doubly stochastic augmentation certifying the majorization.
struct StochasticCertificate {
    RealMatrix mixing;   // |E| x r, column sums 1
    RealVector row_sums; // s_j
    bool quasi_parallel = false;
    RealMatrix augmented; // (|E|+r) x (|E|+r); empty unless quasi_parallel
};

StochasticCertificate stochastic_certificate(const Ensemble& e, const Contraction& m);

/// Checks [a_j |M psi_j|^2] <_w [sigma_i^2]; holds for every ensemble.
MajorizationVerdict verify_weak_majorization(const Ensemble& e, const Contraction& m);

/// Checks posterior < spectrum; requires the ensemble quasi-parallel to the
/// contraction (squash first otherwise). Throws PreconditionViolated.
MajorizationVerdict verify_majorization(const Ensemble& e, const Contraction& m);

/// -H(spectrum) in bits; always within [-log2 rank(M), 0].
double disturbance(const Ensemble& e, const Contraction& m);

struct BoundReport {
    double info_gain_bits = 0.0;
    double prior_entropy_bits = 0.0;
    double spectrum_entropy_bits = 0.0;
    double bound_bits = 0.0; // prior entropy minus spectrum entropy
    double slack_bits = 0.0; // bound minus info gain; never below -1e-9
};

/// Single-outcome trade-off bound for quasi-parallel ensembles.
BoundReport tradeoff_bound(const Ensemble& e, const Contraction& m);

/// Report for ensembles that are not quasi-parallel: squashes, evaluates
/// the squashed-ensemble machinery, and records the copy-count correction
/// term. The corrected right-hand side has no guaranteed sign relative to
/// the information gain, so `slack_bits` is reported without assertion;
/// `squashed_bound_slack_bits` (the bound applied to the squashed ensemble
/// itself) is always nonnegative.
struct SquashedTradeoffReport {
    bool already_quasi_parallel = false;
    std::vector<int> copy_counts;
    double info_gain_bits = 0.0;
    double prior_entropy_bits = 0.0;
    double spectrum_entropy_bits = 0.0;
    double correction_bits = 0.0; // sum_j (a_j - p_j) log2 n_j
    int correction_sign = 0;
    double rhs_bits = 0.0;   // H(priors) - H(spectrum) - correction
    double slack_bits = 0.0; // rhs - info gain (survey value)
    double squashed_info_gain_bits = 0.0;
    double squashed_bound_slack_bits = 0.0;
};

SquashedTradeoffReport squashed_tradeoff(const Ensemble& e, const Contraction& m);

struct OutcomeTradeoff {
    std::string label;
    double probability = 0.0;
    double info_gain_bits = 0.0;
    double spectrum_entropy_bits = 0.0;
    Parallelism parallelism = Parallelism::NotQuasiParallel;
    bool squashed = false; // outcome was not quasi-parallel to the ensemble
    bool skipped = false;  // vanishing occurrence probability
};

struct AveragedTradeoffReport {
    std::vector<OutcomeTradeoff> outcomes;
    double average_info_bits = 0.0;
    double prior_entropy_bits = 0.0;
    double mean_spectrum_entropy_bits = 0.0;
    double bound_bits = 0.0; // H(priors) - <H(spectrum)>
    double slack_bits = 0.0;
    bool all_quasi_parallel = false;
    bool orthogonal_ensemble = false;
    double von_neumann_bits = 0.0;   // S(rho)
    double holevo_bits = 0.0;        // chi = S(rho) for pure-state ensembles
    double holevo_bound_bits = 0.0;  // S(rho) - <H(spectrum)>
    double holevo_slack_bits = 0.0;  // holevo bound minus average info
};

/// Outcome-averaged trade-off. When every outcome is quasi-parallel the
/// averaged bound is checked internally; outcomes that are not are squashed
/// for their per-outcome diagnostics and flagged.
AveragedTradeoffReport averaged_tradeoff(const Ensemble& e, const PureInstrument& inst);

/// Input-output unitary correlation (|M|_1^2 + |M|_2^2) / (d (d + 1)):
/// the occurrence-weighted fidelity between the output and the best fixed
/// unitary image of the input, averaged over Haar inputs.
double unitary_correlation(const Contraction& m);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int n_samples = 0;
};

/// Haar Monte-Carlo estimate of the unitary correlation with the optimal
/// unitary fixed to the polar factor of M. Deterministic for a fixed seed.
MonteCarloEstimate monte_carlo_unitary_correlation(const Contraction& m, int n_samples,
                                                   std::uint64_t seed);

struct EntanglementReductionReport {
    double spectrum_route_bits = 0.0;      // -H(spectrum)
    double reduced_state_route_bits = 0.0; // -S(M rho M^dag / tr)
    double purification_route_bits = 0.0;  // -S(Tr_2 of the measured purification)
};

/// For rho commuting with M^dag M, all three disturbance routes agree; the
/// function evaluates them independently and throws if they disagree beyond
/// 1e-8. Throws PreconditionViolated for non-commuting inputs.
EntanglementReductionReport entanglement_reduction_check(const Contraction& m,
                                                         const Matrix& rho);

/// Disturbance of the maximally chaotic ensemble, directly from the
/// singular values: sum_i (sigma_i^2/|M|_2^2) log2 (sigma_i^2/|M|_2^2).
double chaotic_disturbance(const Contraction& m);

/// -log2 rank(M); the flat lower envelope of the chaotic disturbance.
double ozawa_disturbance(const Contraction& m);

} // namespace qid

#endif // QID_TRADEOFF_HPP
