// Copyright 2026 The qcorr authors
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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qcorr/correlations.hpp"
#include "qcorr/quantum.hpp"

namespace qcorr {

// Operator schema: {"dim": n, "re": [[...]], "im": [[...]]}.
// States and observables both use it; vectors use flat "re"/"im" arrays.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j, const ToleranceProfile& tol = {});

nlohmann::json observable_to_json(const Observable& a);
Observable observable_from_json(const nlohmann::json& j, double cluster_tol = 1e-8,
                                double herm_tol = 1e-9);

// Instrument schema: {"outcomes": [{"label": s, "kraus": [matrix, ...]}]}.
nlohmann::json instrument_to_json(const Instrument& m);
Instrument instrument_from_json(const nlohmann::json& j, const ToleranceProfile& tol = {});

// QjpTable schema: {"rep": tag, "a": [...], "b": [...],
//                   "w_re": [[...]], "w_im": [[...]]}.
nlohmann::json qjp_to_json(const QjpTable& table);
QjpTable qjp_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

/// Locale-independent decimal formatting with 17 significant digits; used
/// for every CSV cell so emitted files are byte-stable across runs.
std::string format_double(double value);

}  // namespace qcorr
