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

/// JSON wire formats. Complex scalars serialize as two-element arrays
/// [re, im]; matrices as row-major nested arrays. Object keys keep
/// insertion order so identical inputs give byte-identical files.

#ifndef QID_SERIALIZE_HPP
#define QID_SERIALIZE_HPP

#include "qid/ensemble.hpp"
#include "qid/measurement.hpp"
#include "qid/reversal.hpp"
#include "qid/tradeoff.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace qid {

using Json = nlohmann::ordered_json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json state_to_json(const Vector& v);
Vector state_from_json(const Json& j);

/// { "dim": d, "states": [[[re,im],...],...], "priors": [...] }
Json ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const Json& j);

/// { "dim": d, "matrix": [[[re,im],...],...] }
Json contraction_to_json(const Contraction& m);
Contraction contraction_from_json(const Json& j);

/// { "dim": d, "outcomes": [matrix,...], "labels": [...] }
Json instrument_to_json(const PureInstrument& inst);
PureInstrument instrument_from_json(const Json& j);

/// { "dim": d, "cond_prob": [[...]], "basis": optional, "backactions": optional }
Json observable_spec_to_json(const ObservableSpec& spec);
ObservableSpec observable_spec_from_json(const Json& j);

Json majorization_to_json(const MajorizationVerdict& v);
Json erasure_report_to_json(const ErasureReport& r);
Json cascade_step_to_json(const CascadeStep& s, int step_index, bool with_fidelity);

/// Full single-outcome trade-off record: information gain, spectrum,
/// disturbance, bound, slack, majorization verdict and the parallelism
/// label ("parallel" | "quasi" | "squashed"). Non-quasi-parallel ensembles
/// are squashed and the correction term is included.
Json tradeoff_report_json(const Ensemble& e, const Contraction& m,
                          const std::string& label);

Json averaged_report_to_json(const AveragedTradeoffReport& r);

} // namespace qid

#endif // QID_SERIALIZE_HPP
