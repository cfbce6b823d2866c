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

/// Complete pure measurements: Bayesian posterior and single-outcome
/// information, instruments built from commutative (observable-form) POVMs,
/// repeated-measurement cascades with back-action compensation, and the
/// Bhattacharyya overlap bound on reversion probabilities.

#ifndef QID_MEASUREMENT_HPP
#define QID_MEASUREMENT_HPP

#include "qid/contraction.hpp"
#include "qid/ensemble.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qid {

/// A complete pure measurement: contractions whose effects sum to the
/// identity within 1e-8.
class PureInstrument {
  public:
    explicit PureInstrument(std::vector<Contraction> outcomes,
                            std::vector<std::string> labels = {});

    const std::vector<Contraction>& outcomes() const { return outcomes_; }
    const Contraction& outcome(int i) const { return outcomes_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(outcomes_.size()); }
    int dim() const { return outcomes_.front().dim(); }

  private:
    std::vector<Contraction> outcomes_;
    std::vector<std::string> labels_;
};

/// Bayes update of the priors given that the outcome occurred; the states
/// are kept as the original hypotheses. Throws OutcomeImpossible when the
/// overall occurrence probability vanishes.
Ensemble posterior(const Ensemble& e, const Contraction& m);

/// Ensemble after the outcome as physically prepared: states reduced
/// through the contraction and renormalized, priors Bayes-updated, states
/// in the kernel dropped.
Ensemble evolve(const Ensemble& e, const Contraction& m);

/// Overall occurrence probability sum_j a_j |M psi_j|^2.
double ensemble_probability(const Ensemble& e, const Contraction& m);

/// Information (bits) on which-state gained from this outcome,
/// H(priors) - H(posterior). Can be negative for a single outcome.
double information_gain(const Ensemble& e, const Contraction& m);

/// Outcome-averaged information gain (bits); never negative.
double average_information(const Ensemble& e, const PureInstrument& inst);

/// Holevo quantity of a pure-state ensemble: the von Neumann entropy of its
/// density operator, in bits.
double holevo_chi(const Ensemble& e);

/// A measurement of an observable: POVM elements jointly diagonal in
/// `basis` with eigenvalues p(y|x) (rows = outcomes y, columns = values x,
/// columns summing to 1), plus optional unitary back-actions W_y.
struct ObservableSpec {
    RealMatrix cond_prob;
    Matrix basis;                    // empty = computational basis
    std::vector<Matrix> backactions; // empty = identity back-actions

    int dim() const { return static_cast<int>(cond_prob.cols()); }
    int n_outcomes() const { return static_cast<int>(cond_prob.rows()); }
    Matrix basis_or_identity() const;
    Matrix backaction_or_identity(int y) const;
};

/// Throws InvalidSpec when the column sums deviate from 1, the basis is not
/// unitary, a back-action is not unitary, or an entry is negative.
void validate(const ObservableSpec& spec);

/// Builds the instrument M_y = W_y sum_x sqrt(p(y|x)) |x><x|.
PureInstrument observable_instrument(const ObservableSpec& spec);

struct ScanReport {
    bool complete = false;            // every outcome has full rank
    bool nondegenerate = false;       // sigma_1(M_y) > sigma_2(M_y) per outcome
    std::vector<int> outcome_ranks;
    int effect_sum_rank = 0;          // rank of sum_y M_y^dag M_y (= dim)
};

ScanReport scan_report(const ObservableSpec& spec);
bool is_complete_scan(const ObservableSpec& spec);
bool is_nondegenerate(const ObservableSpec& spec);

/// Bhattacharyya overlap B(X:Y) = sum_y [prod_x p(y|x)]^(1/d); bounds the
/// summed optimal reversion probabilities of the outcome contractions.
double bhattacharyya_overlap(const ObservableSpec& spec);

struct CascadeStep {
    int outcome = 0;
    RealVector posterior;      // over the observable values x
    double sigma_min_sq = 0.0; // optimal reversion probability of the running product
    double fidelity = 0.0;     // |<x_true | state after step>|^2
};

struct CascadeTrace {
    std::vector<CascadeStep> steps;
    int true_index = 0;
    bool compensated = false;
    bool nondegenerate = true; // informational; cascades run either way
};

/// Repeated application of the measurement on the same system prepared in
/// basis state `true_index`. Outcomes are sampled i.i.d. from
/// p(. | true_index); the running contraction product is compensated with
/// W_y^dag when `compensate` is set. Deterministic for a fixed seed.
CascadeTrace cascade(const ObservableSpec& spec, int true_index, int n_steps,
                     bool compensate, std::uint64_t seed);

} // namespace qid

#endif // QID_MEASUREMENT_HPP
