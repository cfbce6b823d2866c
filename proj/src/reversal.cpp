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

#include "qid/reversal.hpp"

#include "qid/errors.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace qid {

ReversibilityVerdict classify_reversibility(const Contraction& m, const Ensemble& e) {
    if (m.dim() != e.dim()) {
        throw InvalidInput("classify_reversibility: dimension mismatch");
    }
    ReversibilityVerdict v;
    if (m.full_rank()) {
        v.kind = ReversibilityKind::FullRank;
        for (int j = 0; j < e.size(); ++j) {
            v.supported.push_back(j);
        }
        return v;
    }
    const Matrix row_space = kernel_complement_projector(m.matrix(), m.factors().tol_rank);
    int outside_kernel = 0;
    bool split = true;
    for (int j = 0; j < e.size(); ++j) {
        const Vector projected = row_space * e.state(j);
        const double inside = projected.norm();
        const double leakage = (e.state(j) - projected).norm();
        if (leakage <= kTolAlgebra) {
            v.supported.push_back(j);
            ++outside_kernel;
        } else if (inside <= kTolAlgebra) {
            v.annihilated.push_back(j);
        } else {
            split = false;
            ++outside_kernel;
        }
    }
    if (split) {
        v.kind = ReversibilityKind::OrthogonallySplit;
    } else if (outside_kernel == 1) {
        v.kind = ReversibilityKind::DegenerateSingleton;
        v.supported.clear();
    } else {
        v.kind = ReversibilityKind::NotKnowinglyReversible;
        v.supported.clear();
    }
    return v;
}

ReversionPlan optimal_reversion(const Contraction& m) {
    if (m.rank() < 1) {
        throw InvalidInput("optimal_reversion: zero contraction cannot be reverted");
    }
    const double sigma_r = m.factors().sigma_min_positive();
    // pinv(M)/|pinv(M)| = sigma_r * pinv(M); reverser * M = sigma_r * P_{M^dag}.
    const Matrix reverser = sigma_r * pseudoinverse(m.matrix(), m.factors().tol_rank);
    return {Contraction(reverser), sigma_r * sigma_r,
            m.full_rank() ? ReversionKind::FullRankInverse : ReversionKind::PseudoInverseSplit,
            false};
}

ReversionPlan optimal_reversion(const Contraction& m, const Matrix& free_term) {
    ReversionPlan plan = optimal_reversion(m);
    if (free_term.rows() != m.dim() || free_term.cols() != m.dim()) {
        throw InvalidInput("optimal_reversion: free term dimension mismatch");
    }
    const Matrix outside_range =
        Matrix::Identity(m.dim(), m.dim()) - range_projector(m.matrix(), m.factors().tol_rank);
    const Matrix extra = free_term * outside_range;
    if (schatten_norm(extra, std::numeric_limits<double>::infinity()) > 1.0 + kTolAlgebra) {
        throw InvalidInput("optimal_reversion: free term is not a contraction");
    }
    plan.reverser = Contraction(plan.reverser.matrix() + extra);
    plan.free_term_included = true;
    return plan;
}

ReversionBounds reversion_probability_bounds(const Contraction& m) {
    if (!m.full_rank()) {
        throw RankDeficient("reversion_probability_bounds: contraction is not full rank");
    }
    const double kappa = condition_number(m.matrix(), m.factors().tol_rank);
    return {1.0 / (kappa * kappa), 1.0, m.factors().left.col(0),
            m.factors().left.col(m.dim() - 1)};
}

ReversionChain cascade_reversion_probability(const Contraction& m) {
    if (!m.full_rank()) {
        throw RankDeficient("cascade_reversion_probability: contraction is not full rank");
    }
    const RealVector& sigma = m.factors().singular_values;
    const int d = m.dim();
    double log_product = 0.0;
    for (int i = 0; i < d; ++i) {
        log_product += 2.0 * std::log(sigma(i));
    }
    const double geometric = std::exp(log_product / d);
    const double mean_square = sigma.squaredNorm() / d;
    return {sigma(d - 1) * sigma(d - 1), geometric, mean_square};
}

ErasureReport verify_erasure(const Ensemble& e, const Contraction& m) {
    const ReversibilityVerdict verdict = classify_reversibility(m, e);
    if (verdict.kind != ReversibilityKind::FullRank &&
        verdict.kind != ReversibilityKind::OrthogonallySplit) {
        throw NotReversible("verify_erasure: contraction is not knowingly reversible here");
    }
    const ReversionPlan plan = optimal_reversion(m);

    ErasureReport report;
    report.kind = verdict.kind;
    report.forward_bits = information_gain(e, m);
    const Ensemble after = evolve(e, m);
    report.reversal_bits = information_gain(after, plan.reverser);
    report.total_bits = report.forward_bits + report.reversal_bits;
    report.direct_bits = information_gain(e, Contraction(plan.reverser.matrix() * m.matrix()));

    if (verdict.kind == ReversibilityKind::FullRank) {
        report.residual_bits = 0.0;
    } else {
        double kept = 0.0;
        for (int j : verdict.supported) {
            kept += e.prior(j);
        }
        double h_kept = 0.0;
        for (int j : verdict.supported) {
            const double q = e.prior(j) / kept;
            if (q > 0.0) {
                h_kept -= q * std::log2(q);
            }
        }
        report.residual_bits = prior_entropy(e) - h_kept;
    }

    if (std::abs(report.total_bits - report.direct_bits) > kTolAlgebra ||
        std::abs(report.direct_bits - report.residual_bits) > kTolAlgebra) {
        throw Error("verify_erasure: information bookkeeping failed to cancel");
    }
    return report;
}

} // namespace qid
