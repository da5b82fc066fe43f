// Copyright 2026 The Interlock Sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTERLOCK_SERIALIZATION_HPP_
#define INTERLOCK_SERIALIZATION_HPP_

#include <optional>
#include <string>

#include "json.hpp"

#include "interlock/core_model.hpp"
#include "interlock/gait.hpp"
#include "interlock/stability.hpp"

namespace interlock {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// On-disk scenario document.
struct ScenarioFile {
  int schema_version = kSchemaVersion;
  Scenario scenario;
  std::optional<Outcome> expected_outcome;
};

/// Scenario fields as a JSON object. Missing fields take their defaults;
/// unknown fields and wrongly typed values are reported per field.
Json ScenarioToJson(const Scenario& scenario);
Scenario ScenarioFromJson(const Json& doc);

Json ScenarioFileToJson(const ScenarioFile& file);
/// Throws InvalidConfig on malformed text, unknown fields, a wrong schema
/// version or violated scenario invariants.
ScenarioFile ParseScenarioFile(const std::string& text);
ScenarioFile LoadScenarioFile(const std::string& path);

Json SoilToJson(const SoilModel& soil);

/// Model assumptions that shape every result, echoed in report headers.
Json AssumptionsToJson(const Scenario& scenario);

Json StabilityToJson(const StabilityReport& report);
Json AnalysisReportToJson(const Scenario& scenario, const StabilityReport& report);
Json TrialReportToJson(const Scenario& scenario, const TrialReport& report);

/// Canonical text form: two-space indentation and a trailing newline.
/// Parsing this text and emitting it again reproduces it byte for byte.
std::string Emit(const Json& doc);

inline constexpr const char* kLogHeader =
    "cycle,phase,spike_id,depth_m,gamma_deg,gamma_eff_deg,draft_N,lift_N,"
    "margin_N,lateral_offset_m";

/// One row per anchored spike per half-cycle attempt.
std::string TrialLogToCsv(const TrialReport& report);

/// Shortest decimal text that reads back to the same double.
std::string FormatNumber(double value);

}  // namespace interlock

#endif  // INTERLOCK_SERIALIZATION_HPP_
