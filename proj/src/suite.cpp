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

#include "interlock/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "interlock/soil.hpp"
#include "interlock/spike.hpp"
#include "interlock/stability.hpp"

namespace interlock {

namespace {

Scenario Make(std::string label, SoilModel soil, double slope_deg,
              HeadingMode heading, std::optional<double> pitch,
              std::optional<double> roll, double draft, double speed) {
  Scenario s = DefaultScenario();
  s.label = std::move(label);
  s.soil = std::move(soil);
  s.terrain.slope_deg = slope_deg;
  s.terrain.heading = heading;
  s.terrain.pitch_override_deg = pitch;
  s.terrain.roll_override_deg = roll;
  s.blade_draft_demand = draft;
  s.vehicle.speed = speed;
  return s;
}

std::string OutcomeText(Outcome outcome, std::optional<EventKind> event) {
  std::string text(ToString(outcome));
  if (event) text += " (" + std::string(ToString(*event)) + ")";
  return text;
}

bool Matches(const SuiteGroup& g, const TrialReport& r) {
  if (r.outcome != g.expected_outcome) return false;
  return !g.expected_event || r.HasEvent(*g.expected_event);
}

std::optional<EventKind> BlockingEvent(const TrialReport& r) {
  if (r.outcome != Outcome::kBlockedByLift) return std::nullopt;
  for (auto it = r.events.rbegin(); it != r.events.rend(); ++it) {
    if (it->kind == EventKind::kLiftOffFront || it->kind == EventKind::kLiftOffRear) {
      return it->kind;
    }
  }
  return std::nullopt;
}

}  // namespace

double OffsetForEffectiveGamma(const Scenario& scenario, SpikeId id,
                               double gamma_eff_deg) {
  const Scenario& s = Validate(scenario);
  const bool rear = id == SpikeId::kRearLeft || id == SpikeId::kRearRight;
  GaitState state;
  state.phase = rear ? Phase::kPushBlade : Phase::kPullFrame;
  Scenario flat = s;
  flat.terrain.surface_offsets.clear();
  flat.vehicle.depth_equalizer = false;
  const PhaseBalance b = PhaseForceBalance(state, flat);
  const SpikeDesign& design = rear ? s.vehicle.rear_spikes : s.vehicle.front_spikes;
  const double cf = s.gait.strict_gamma ? 1.0 : s.soil.center_of_force_fraction;
  const double engagement =
      (design.radius_r * std::sin(DegToRad(gamma_eff_deg)) - design.hinge_height_h) / cf;
  return engagement - b.spikes[0].depth;
}

Scenario QuarryFineUphill(double blade_draft_demand) {
  Scenario s = Make("quarry_fine_20_uphill", QuarryFine(), 20.0,
                    HeadingMode::kUphill, 20.0, 0.0, blade_draft_demand, 0.07);
  return s;
}

Scenario QuarryFineUphillUneven(double blade_draft_demand) {
  Scenario s = QuarryFineUphill(2500.0);
  const double offset = OffsetForEffectiveGamma(s, SpikeId::kRearLeft, 25.0);
  s.label = "quarry_fine_20_uphill_uneven";
  s.terrain.surface_offsets[SpikeId::kRearLeft] = offset;
  s.blade_draft_demand = blade_draft_demand;
  return s;
}

std::vector<SuiteGroup> BundledSuite() {
  std::vector<SuiteGroup> groups;
  const auto group = [&](std::string name, std::string location, std::string mode,
                         std::string rotation, int trials, Outcome outcome,
                         std::optional<EventKind> event,
                         std::vector<Scenario> members) {
    groups.push_back({std::move(name), std::move(location), std::move(mode),
                      std::move(rotation), trials, outcome, event,
                      std::move(members)});
  };
  const auto cleared = Outcome::kPathCleared;

  group("beach_flat", "beach, flat", "flat", "pitch 1, roll 0", 1, cleared,
        std::nullopt,
        {Make("beach_flat", BeachSand(), 0.0, HeadingMode::kUphill, 1.0, 0.0,
              1500.0, 0.10)});
  group("beach_contour_12", "beach, 12 deg", "contour", "pitch 0, roll 12", 3,
        cleared, std::nullopt,
        {Make("beach_contour_12", BeachSand(), 12.0, HeadingMode::kContour, 0.0,
              12.0, 1500.0, 0.10)});
  group("beach_diagonal_12_16", "beach, 12-16 deg", "diagonal",
        "pitch 8, roll ~12", 5, cleared, std::nullopt,
        {Make("beach_diagonal_12_16", BeachSand(), 14.0, HeadingMode::kDiagonal,
              8.0, 12.0, 1500.0, 0.10)});
  group("beach_uphill_16", "beach, 12-16 deg", "uphill", "pitch 12-16, roll 0", 3,
        cleared, std::nullopt,
        {Make("beach_uphill_16", BeachSand(), 16.0, HeadingMode::kUphill, 16.0,
              0.0, 1500.0, 0.10)});
  group("quarry_fine_20_contour_diagonal", "quarry fine, 20 deg",
        "contour+diagonal", "pitch 0, roll 20 / pitch N/A, roll 7", 3, cleared,
        std::nullopt,
        {Make("quarry_fine_20_contour", QuarryFine(), 20.0, HeadingMode::kContour,
              0.0, 20.0, 1500.0, 0.10),
         Make("quarry_fine_20_diagonal", QuarryFine(), 20.0,
              HeadingMode::kDiagonal, std::nullopt, 7.0, 1500.0, 0.10),
         Make("quarry_fine_20_contour_2kN", QuarryFine(), 20.0,
              HeadingMode::kContour, 0.0, 20.0, 2000.0, 0.07),
         Make("quarry_fine_20_diagonal_2kN", QuarryFine(), 20.0,
              HeadingMode::kDiagonal, std::nullopt, 7.0, 2000.0, 0.07)});
  Scenario even = QuarryFineUphill(2000.0);
  even.label = "quarry_fine_20_uphill_2kN";
  Scenario uneven = QuarryFineUphillUneven(2500.0);
  uneven.label = "quarry_fine_20_uphill_uneven_2.5kN";
  group("quarry_fine_20_uphill_2kN", "quarry fine, 20 deg", "uphill",
        "pitch 20, roll 0", 2, cleared, std::nullopt, {even});
  group("quarry_fine_20_uphill_uneven_2.5kN", "quarry fine, 20 deg",
        "uphill, uneven", "pitch 20, roll 0", 2, Outcome::kBlockedByLift,
        EventKind::kLiftOffRear, {uneven});
  Scenario coarse = Make("quarry_coarse_30_contour", QuarryCoarse(), 30.0,
                         HeadingMode::kContour, 0.0, 30.0, 1500.0, 0.10);
  coarse.terrain.surface_offsets = {{SpikeId::kFrontLeft, 0.10},
                                    {SpikeId::kFrontRight, 0.10}};
  group("quarry_coarse_30_contour", "quarry coarse, 30 deg", "contour",
        "pitch 0, roll 30", 2, Outcome::kBlockedByLift, EventKind::kLiftOffFront,
        {coarse});
  group("quarry_fine_40_contour", "quarry fine wall, 40 deg", "contour",
        "pitch 5, roll 40", 1, Outcome::kVeeredOff, std::nullopt,
        {Make("quarry_fine_40_contour", QuarryFineLoose(), 40.0,
              HeadingMode::kContour, 5.0, 40.0, 1500.0, 0.10)});
  return groups;
}

Scenario ApplyOverrides(Scenario scenario, const SuiteOverrides& overrides) {
  if (overrides.center_of_force_fraction) {
    scenario.soil.center_of_force_fraction = *overrides.center_of_force_fraction;
  }
  if (overrides.gravity) scenario.environment.gravity = *overrides.gravity;
  return scenario;
}

std::vector<SuiteRow> RunSuite(const std::vector<SuiteGroup>& groups,
                               const SuiteOverrides& overrides, int max_cycles) {
  std::vector<SuiteRow> rows;
  rows.reserve(groups.size());
  for (const SuiteGroup& g : groups) {
    SuiteRow row;
    row.group = g;
    row.match = true;
    std::vector<std::string> simulated;
    for (const Scenario& member : g.members) {
      const Scenario s = ApplyOverrides(member, overrides);
      TrialReport report = RunScenario(s, max_cycles);
      row.match = row.match && Matches(g, report);
      const std::string text = OutcomeText(report.outcome, BlockingEvent(report));
      if (std::find(simulated.begin(), simulated.end(), text) == simulated.end()) {
        simulated.push_back(text);
      }
      row.reports.push_back(std::move(report));
    }
    if (!g.members.empty()) {
      row.pitch_deg = g.members.front().terrain.pitch_deg();
      row.roll_deg = g.members.front().terrain.roll_deg();
    }
    for (std::size_t i = 0; i < simulated.size(); ++i) {
      row.simulated += (i ? " / " : "") + simulated[i];
    }
    row.observed = OutcomeText(g.expected_outcome, g.expected_event);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatSuiteTable(const std::vector<SuiteRow>& rows) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof(line), "%-36s %-24s %-17s %6s %-7s %7s %-34s %-34s %s\n",
                "group", "location", "path", "trials", "pitch", "roll",
                "simulated", "observed", "match");
  out << line;
  int matches = 0;
  for (const SuiteRow& r : rows) {
    matches += r.match ? 1 : 0;
    std::snprintf(line, sizeof(line),
                  "%-36s %-24s %-17s %6d %7.1f %7.1f %-34s %-34s %s\n",
                  r.group.name.c_str(), r.group.location.c_str(),
                  r.group.path_mode.c_str(), r.group.trials, r.pitch_deg,
                  r.roll_deg, r.simulated.c_str(), r.observed.c_str(),
                  r.match ? "yes" : "NO");
    out << line;
  }
  out << "matches: " << matches << "/" << rows.size() << "\n";
  return out.str();
}

}  // namespace interlock
