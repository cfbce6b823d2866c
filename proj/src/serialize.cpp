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

#include "qid/serialize.hpp"

#include "qid/errors.hpp"

#include <utility>
#include <vector>

namespace qid {

Json complex_to_json(const Complex& z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InvalidInput("complex_from_json: expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(complex_to_json(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput("matrix_from_json: expected nested arrays");
    }
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(j[static_cast<std::size_t>(i)].size()) != cols) {
            throw InvalidInput("matrix_from_json: ragged rows");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            m(i, k) = complex_from_json(
                j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        }
    }
    return m;
}

Json state_to_json(const Vector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v(i)));
    }
    return out;
}

Vector state_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput("state_from_json: expected an array of [re, im]");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    }
    return v;
}

Json ensemble_to_json(const Ensemble& e) {
    Json j;
    j["dim"] = e.dim();
    Json states = Json::array();
    for (const auto& s : e.states()) {
        states.push_back(state_to_json(s));
    }
    j["states"] = std::move(states);
    Json priors = Json::array();
    for (Eigen::Index i = 0; i < e.priors().size(); ++i) {
        priors.push_back(e.priors()(i));
    }
    j["priors"] = std::move(priors);
    return j;
}

Ensemble ensemble_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<Vector> states;
    for (const auto& s : j.at("states")) {
        Vector v = state_from_json(s);
        if (v.size() != dim) {
            throw InvalidInput("ensemble_from_json: state dimension mismatch");
        }
        states.push_back(std::move(v));
    }
    const auto& priors_json = j.at("priors");
    RealVector priors(static_cast<Eigen::Index>(priors_json.size()));
    for (std::size_t i = 0; i < priors_json.size(); ++i) {
        priors(static_cast<Eigen::Index>(i)) = priors_json[i].get<double>();
    }
    return Ensemble(std::move(states), std::move(priors));
}

Json contraction_to_json(const Contraction& m) {
    Json j;
    j["dim"] = m.dim();
    j["matrix"] = matrix_to_json(m.matrix());
    return j;
}

Contraction contraction_from_json(const Json& j) {
    const Matrix m = matrix_from_json(j.at("matrix"));
    if (j.contains("dim") && j.at("dim").get<int>() != m.rows()) {
        throw InvalidInput("contraction_from_json: dim field disagrees with matrix");
    }
    return Contraction(m);
}

Json instrument_to_json(const PureInstrument& inst) {
    Json j;
    j["dim"] = inst.dim();
    Json outcomes = Json::array();
    for (const auto& m : inst.outcomes()) {
        outcomes.push_back(matrix_to_json(m.matrix()));
    }
    j["outcomes"] = std::move(outcomes);
    j["labels"] = inst.labels();
    return j;
}

PureInstrument instrument_from_json(const Json& j) {
    std::vector<Contraction> outcomes;
    for (const auto& m : j.at("outcomes")) {
        outcomes.emplace_back(matrix_from_json(m));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
    }
    return PureInstrument(std::move(outcomes), std::move(labels));
}

Json observable_spec_to_json(const ObservableSpec& spec) {
    Json j;
    j["dim"] = spec.dim();
    Json rows = Json::array();
    for (int y = 0; y < spec.n_outcomes(); ++y) {
        Json row = Json::array();
        for (int x = 0; x < spec.dim(); ++x) {
            row.push_back(spec.cond_prob(y, x));
        }
        rows.push_back(std::move(row));
    }
    j["cond_prob"] = std::move(rows);
    if (spec.basis.size()) {
        j["basis"] = matrix_to_json(spec.basis);
    }
    if (!spec.backactions.empty()) {
        Json w = Json::array();
        for (const auto& u : spec.backactions) {
            w.push_back(matrix_to_json(u));
        }
        j["backactions"] = std::move(w);
    }
    return j;
}

ObservableSpec observable_spec_from_json(const Json& j) {
    ObservableSpec spec;
    const auto& rows = j.at("cond_prob");
    const int n = static_cast<int>(rows.size());
    const int d = static_cast<int>(rows[0].size());
    spec.cond_prob.resize(n, d);
    for (int y = 0; y < n; ++y) {
        if (static_cast<int>(rows[static_cast<std::size_t>(y)].size()) != d) {
            throw InvalidSpec("observable_spec_from_json: ragged cond_prob rows");
        }
        for (int x = 0; x < d; ++x) {
            spec.cond_prob(y, x) =
                rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)].get<double>();
        }
    }
    if (j.contains("basis")) {
        spec.basis = matrix_from_json(j.at("basis"));
    }
    if (j.contains("backactions")) {
        for (const auto& w : j.at("backactions")) {
            spec.backactions.push_back(matrix_from_json(w));
        }
    }
    validate(spec);
    return spec;
}

Json majorization_to_json(const MajorizationVerdict& v) {
    Json j;
    j["holds"] = v.holds;
    j["worst_partial_sum_gap"] = v.worst_partial_sum_gap;
    j["padded_length"] = v.padded_length;
    return j;
}

Json erasure_report_to_json(const ErasureReport& r) {
    Json j;
    switch (r.kind) {
        case ReversibilityKind::FullRank: j["verdict"] = "full_rank"; break;
        case ReversibilityKind::OrthogonallySplit: j["verdict"] = "orthogonally_split"; break;
        case ReversibilityKind::DegenerateSingleton: j["verdict"] = "degenerate_singleton"; break;
        case ReversibilityKind::NotKnowinglyReversible: j["verdict"] = "not_reversible"; break;
    }
    j["forward_bits"] = r.forward_bits;
    j["reversal_bits"] = r.reversal_bits;
    j["total_bits"] = r.total_bits;
    j["direct_bits"] = r.direct_bits;
    j["residual_bits"] = r.residual_bits;
    return j;
}

Json cascade_step_to_json(const CascadeStep& s, int step_index, bool with_fidelity) {
    Json j;
    j["step"] = step_index;
    j["outcome"] = s.outcome;
    Json post = Json::array();
    for (Eigen::Index i = 0; i < s.posterior.size(); ++i) {
        post.push_back(s.posterior(i));
    }
    j["posterior"] = std::move(post);
    j["sigma_min_sq"] = s.sigma_min_sq;
    if (with_fidelity) {
        j["fidelity"] = s.fidelity;
    }
    return j;
}

namespace {

Json real_vector_to_json(const RealVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

} // namespace

Json tradeoff_report_json(const Ensemble& e, const Contraction& m,
                          const std::string& label) {
    const ParallelismVerdict parallelism = classify_parallelism(e, m);
    Json j;
    j["outcome"] = label;
    const TradeoffVector t = tradeoff_vector(e, m);
    j["delta_I_bits"] = information_gain(e, m);
    j["z"] = real_vector_to_json(t.spectrum);
    j["disturbance_bits"] = -entropy_bits(t.spectrum);
    if (parallelism.quasi_parallel()) {
        const BoundReport bound = tradeoff_bound(e, m);
        j["bound_bits"] = bound.bound_bits;
        j["slack"] = bound.slack_bits;
        j["majorization"] = majorization_to_json(verify_majorization(e, m));
        j["parallelism"] =
            parallelism.kind == Parallelism::Parallel ? "parallel" : "quasi";
    } else {
        const SquashedTradeoffReport sq = squashed_tradeoff(e, m);
        j["bound_bits"] = sq.rhs_bits;
        j["slack"] = sq.slack_bits;
        j["correction_bits"] = sq.correction_bits;
        j["copy_counts"] = sq.copy_counts;
        const Ensemble squashed_ensemble = squash(e, m).ensemble;
        j["majorization"] = majorization_to_json(verify_majorization(squashed_ensemble, m));
        j["parallelism"] = "squashed";
    }
    return j;
}

Json averaged_report_to_json(const AveragedTradeoffReport& r) {
    Json j;
    j["average_info_bits"] = r.average_info_bits;
    j["prior_entropy_bits"] = r.prior_entropy_bits;
    j["mean_spectrum_entropy_bits"] = r.mean_spectrum_entropy_bits;
    j["bound_bits"] = r.bound_bits;
    j["slack_bits"] = r.slack_bits;
    j["all_quasi_parallel"] = r.all_quasi_parallel;
    j["orthogonal_ensemble"] = r.orthogonal_ensemble;
    j["von_neumann_bits"] = r.von_neumann_bits;
    j["holevo_bits"] = r.holevo_bits;
    j["holevo_bound_bits"] = r.holevo_bound_bits;
    j["holevo_slack_bits"] = r.holevo_slack_bits;
    Json outcomes = Json::array();
    for (const auto& o : r.outcomes) {
        Json entry;
        entry["outcome"] = o.label;
        entry["probability"] = o.probability;
        entry["delta_I_bits"] = o.info_gain_bits;
        entry["spectrum_entropy_bits"] = o.spectrum_entropy_bits;
        if (o.skipped) {
            entry["parallelism"] = "skipped";
        } else if (o.squashed) {
            entry["parallelism"] = "squashed";
        } else {
            entry["parallelism"] =
                o.parallelism == Parallelism::Parallel ? "parallel" : "quasi";
        }
        outcomes.push_back(std::move(entry));
    }
    j["outcomes"] = std::move(outcomes);
    return j;
}

} // namespace qid
