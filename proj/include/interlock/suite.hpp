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

#ifndef INTERLOCK_SUITE_HPP_
#define INTERLOCK_SUITE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "interlock/core_model.hpp"
#include "interlock/gait.hpp"

namespace interlock {

/// One row of the field-trial matrix. A group may bundle several headings
/// that share one observation; it matches only if every member does.
struct SuiteGroup {
  std::string name;
  std::string location;
  std::string path_mode;
  std::string observed_rotation;  // as measured in the field
  int trials = 0;                 // number of field trials behind the row
  Outcome expected_outcome = Outcome::kPathCleared;
  std::optional<EventKind> expected_event;
  std::vector<Scenario> members;
};

/// Ground deviation under `id` that makes that spike reach `gamma_eff_deg`
/// at the scenario's blade draft demand.
double OffsetForEffectiveGamma(const Scenario& scenario, SpikeId id,
                               double gamma_eff_deg);

/// 20-degree uphill run on the compacted fine ramp, 0.07 m/s, even ground.
Scenario QuarryFineUphill(double blade_draft_demand);

/// The same run with the rear-left spike over a hollow deep enough to reach
/// a 25-degree effective thrust angle at 2.5 kN.
Scenario QuarryFineUphillUneven(double blade_draft_demand);

std::vector<SuiteGroup> BundledSuite();

struct SuiteOverrides {
  std::optional<double> center_of_force_fraction;
  std::optional<double> gravity;
};

Scenario ApplyOverrides(Scenario scenario, const SuiteOverrides& overrides);

struct SuiteRow {
  SuiteGroup group;
  std::vector<TrialReport> reports;  // one per member
  double pitch_deg = 0.0;            // first member's vehicle attitude
  double roll_deg = 0.0;
  std::string simulated;
  std::string observed;
  bool match = false;
};

std::vector<SuiteRow> RunSuite(const std::vector<SuiteGroup>& groups,
                               const SuiteOverrides& overrides = {},
                               int max_cycles = 100);

/// Fixed-width table, one line per group, then a match count line.
std::string FormatSuiteTable(const std::vector<SuiteRow>& rows);

}  // namespace interlock

#endif  // INTERLOCK_SUITE_HPP_
