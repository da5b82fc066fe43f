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

#include "interlock/stability.hpp"

#include <algorithm>
#include <limits>

#include "interlock/gait.hpp"

namespace interlock {

double PullWeightRatio(double draft, const VehicleConfig& vehicle,
                       const Environment& env) {
  if (draft < 0.0) throw DomainError("draft must be >= 0");
  return draft / Weight(vehicle, env);
}

double RolloverTipAngle(const VehicleConfig& vehicle) {
  return RolloverTipAngle(vehicle.track_width, vehicle.com_height);
}

LiftOffCheck CheckLiftOff(double frame_normal_load, double total_hinge_lift) {
  const double margin = frame_normal_load - total_hinge_lift;
  return {margin, margin < 0.0};
}

std::string_view ToString(LimitingFactor factor) {
  switch (factor) {
    case LimitingFactor::kNone:
      return "none";
    case LimitingFactor::kLiftOff:
      return "lift_off";
    case LimitingFactor::kRollover:
      return "rollover";
    case LimitingFactor::kAnchorCapacity:
      return "anchor_capacity";
  }
  return "none";
}

namespace {

double SpareCapacity(const PhaseBalance& b) {
  const double per_spike = b.anchored_lateral_capacity / 2.0;
  double spare = std::numeric_limits<double>::infinity();
  for (const SpikeState& s : b.spikes) {
    spare = std::min(spare, per_spike - s.draft_share);
  }
  return spare;
}

}  // namespace

StabilityReport AnalyzeStability(const Scenario& scenario) {
  Validate(scenario);
  StabilityReport r;
  r.weight = Weight(scenario.vehicle, scenario.environment);
  r.pull_weight_ratio = PullWeightRatio(scenario.blade_draft_demand,
                                        scenario.vehicle, scenario.environment);
  r.max_gamma_allowed_deg = r.pull_weight_ratio > 0.0
                                ? MaxThrustAngleForPullWeight(r.pull_weight_ratio)
                                : 90.0;
  r.pitch_deg = scenario.terrain.pitch_deg();
  r.roll_deg = scenario.terrain.roll_deg();
  r.rollover_tip_angle_deg = RolloverTipAngle(scenario.vehicle);
  r.rollover_margin_deg = r.rollover_tip_angle_deg - r.roll_deg;

  GaitState state;
  state.phase = Phase::kPushBlade;
  const PhaseBalance push = PhaseForceBalance(state, scenario);
  state.phase = Phase::kPullFrame;
  const PhaseBalance pull = PhaseForceBalance(state, scenario);
  r.lift_margin_rear = push.lift_margin;
  r.lift_margin_front = pull.lift_margin;
  r.anchor_margin = std::min(SpareCapacity(push), SpareCapacity(pull));

  if (std::min(r.lift_margin_front, r.lift_margin_rear) <= 0.0) {
    r.limiting_factor = LimitingFactor::kLiftOff;
  } else if (r.anchor_margin <= 0.0) {
    r.limiting_factor = LimitingFactor::kAnchorCapacity;
  } else if (r.rollover_margin_deg <= 0.0) {
    r.limiting_factor = LimitingFactor::kRollover;
  } else {
    r.limiting_factor = LimitingFactor::kNone;
  }
  return r;
}

}  // namespace interlock
