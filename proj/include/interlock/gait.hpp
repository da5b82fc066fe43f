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

#ifndef INTERLOCK_GAIT_HPP_
#define INTERLOCK_GAIT_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interlock/core_model.hpp"
#include "interlock/spike.hpp"
#include "interlock/stability.hpp"

namespace interlock {

// PUSH_BLADE: rear (large) spikes anchored, the blade frame is pushed.
// PULL_FRAME: front (small) spikes anchored, the rear frame is pulled up.
enum class Phase { kPushBlade, kPullFrame };

enum class EventKind {
  kLiftOffFront,
  kLiftOffRear,
  kAnchorSaturated,
  kStall,
  kVeerSlow,
  kVeerFast,
  kWindowViolation,
};

enum class Outcome { kPathCleared, kBlockedByLift, kBlockedByStall, kVeeredOff };

std::string_view ToString(Phase phase);
std::string_view ToString(EventKind kind);
std::string_view ToString(Outcome outcome);
std::optional<Outcome> ParseOutcome(std::string_view text);

struct GaitState {
  Phase phase = Phase::kPushBlade;
  double carriage_position = 0.0;  // rear frame along the bar, [0, stroke]
  double vehicle_position = 0.0;   // blade progress along the intended path
  double lateral_offset = 0.0;     // downhill drift
  double heading_error_deg = 0.0;  // drift angle of the last half-cycle
  int cycle_index = 0;             // completed full cycles
};

/// Static force balance of one half-cycle.
struct PhaseBalance {
  Phase phase = Phase::kPushBlade;
  std::array<SpikeState, 2> spikes{};
  double requested_draft = 0.0;  // along-track demand before the motor cap
  double draft_capacity = 0.0;
  double applied_draft = 0.0;    // min(requested, capacity)
  bool stall = false;
  double lateral_load = 0.0;     // cross-slope weight held by the anchors
  double frame_normal_load = 0.0;
  double total_lift = 0.0;
  double lift_margin = 0.0;
  bool lifted = false;
  bool saturated = false;
  // A spike's engagement is outside the reach of its lever, so the pair
  // cannot seat this half-cycle.
  bool unseated = false;
  double anchored_lateral_capacity = 0.0;
};

struct VeerResult {
  double load_ratio = 0.0;  // lateral load / anchored lateral capacity
  double drift = 0.0;
  std::optional<EventKind> classification;  // VEER_SLOW, VEER_FAST or none
};

struct TrialEvent {
  int step = 0;  // half-cycle attempt index
  EventKind kind = EventKind::kStall;
  Phase phase = Phase::kPushBlade;
  std::array<SpikeState, 2> spikes{};
  double applied_draft = 0.0;
  double requested_draft = 0.0;
  double draft_capacity = 0.0;
  double frame_normal_load = 0.0;
  double total_lift = 0.0;
  double load_ratio = 0.0;
};

struct HalfCycleRecord {
  int step = 0;
  int cycle = 0;
  PhaseBalance balance;
  double load_ratio = 0.0;
  double lateral_offset = 0.0;
  double vehicle_position = 0.0;
  bool advanced = false;
};

struct TrialReport {
  Outcome outcome = Outcome::kPathCleared;
  std::string detail;
  double distance_covered = 0.0;
  double lateral_offset = 0.0;
  int half_cycles = 0;
  std::vector<TrialEvent> events;
  std::vector<HalfCycleRecord> log;
  StabilityReport summary;

  bool HasEvent(EventKind kind) const;
};

/// Motor-limited draft, eta * P / v.
double DraftCapacity(double power, double speed, double efficiency);

PhaseBalance PhaseForceBalance(const GaitState& state, const Scenario& scenario);

/// Advances state.lateral_offset by k_v * load_ratio * stroke. A zero
/// capacity under a nonzero lateral load counts as an infinite ratio.
VeerResult VeerUpdate(GaitState& state, const Scenario& scenario,
                      double anchored_capacity);

/// Runs alternating half-cycles until the path is cleared, the vehicle is
/// blocked, it veers off, or max_cycles full cycles have been attempted.
TrialReport RunScenario(const Scenario& scenario, int max_cycles = 100);

}  // namespace interlock

#endif  // INTERLOCK_GAIT_HPP_
