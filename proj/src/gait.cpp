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

#include "interlock/gait.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "interlock/soil.hpp"

namespace interlock {

std::string_view ToString(Phase phase) {
  return phase == Phase::kPushBlade ? "PUSH_BLADE" : "PULL_FRAME";
}

std::string_view ToString(EventKind kind) {
  switch (kind) {
    case EventKind::kLiftOffFront:
      return "LIFT_OFF_FRONT";
    case EventKind::kLiftOffRear:
      return "LIFT_OFF_REAR";
    case EventKind::kAnchorSaturated:
      return "ANCHOR_SATURATED";
    case EventKind::kStall:
      return "STALL";
    case EventKind::kVeerSlow:
      return "VEER_SLOW";
    case EventKind::kVeerFast:
      return "VEER_FAST";
    case EventKind::kWindowViolation:
      return "WINDOW_VIOLATION";
  }
  return "STALL";
}

std::string_view ToString(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPathCleared:
      return "PATH_CLEARED";
    case Outcome::kBlockedByLift:
      return "BLOCKED_BY_LIFT";
    case Outcome::kBlockedByStall:
      return "BLOCKED_BY_STALL";
    case Outcome::kVeeredOff:
      return "VEERED_OFF";
  }
  return "PATH_CLEARED";
}

std::optional<Outcome> ParseOutcome(std::string_view text) {
  for (Outcome o : {Outcome::kPathCleared, Outcome::kBlockedByLift,
                    Outcome::kBlockedByStall, Outcome::kVeeredOff}) {
    if (ToString(o) == text) return o;
  }
  return std::nullopt;
}

bool TrialReport::HasEvent(EventKind kind) const {
  return std::any_of(events.begin(), events.end(),
                     [kind](const TrialEvent& e) { return e.kind == kind; });
}

double DraftCapacity(double power, double speed, double efficiency) {
  if (!(speed > 0.0)) throw DomainError("speed must be > 0");
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw DomainError("efficiency must lie in (0, 1]");
  }
  if (power < 0.0) throw DomainError("power must be >= 0");
  return efficiency * power / speed;
}

namespace {

struct PairLayout {
  std::array<SpikeId, 2> ids;
  const SpikeDesign* design;
};

PairLayout AnchoredPair(Phase phase, const VehicleConfig& v) {
  if (phase == Phase::kPushBlade) {
    return {{SpikeId::kRearLeft, SpikeId::kRearRight}, &v.rear_spikes};
  }
  return {{SpikeId::kFrontLeft, SpikeId::kFrontRight}, &v.front_spikes};
}

Vector3<double> WeightComponents(const Scenario& s) {
  return SlopeDecomposition(Weight(s.vehicle, s.environment),
                            s.terrain.pitch_deg(), s.terrain.roll_deg());
}

}  // namespace

PhaseBalance PhaseForceBalance(const GaitState& state, const Scenario& s) {
  const VehicleConfig& v = s.vehicle;
  const Vector3<double> w = WeightComponents(s);
  const double along = w.x();
  const double normal = w.z();
  const double front_share = v.frame1_mass_fraction;
  const double rear_share = 1.0 - front_share;

  PhaseBalance b;
  b.phase = state.phase;
  if (state.phase == Phase::kPushBlade) {
    b.requested_draft = s.blade_draft_demand + along;
    b.frame_normal_load = rear_share * normal;
  } else {
    b.requested_draft =
        s.gait.drag_coefficient * rear_share * normal + rear_share * along;
    b.frame_normal_load = front_share * normal;
  }
  b.requested_draft = std::max(b.requested_draft, 0.0);
  b.draft_capacity = DraftCapacity(v.peak_power, v.speed, v.drivetrain_efficiency);
  b.stall = b.requested_draft > b.draft_capacity;
  b.applied_draft = std::min(b.requested_draft, b.draft_capacity);
  b.lateral_load = std::abs(w.y());

  const PairLayout pair = AnchoredPair(state.phase, v);
  const SpikeDesign& design = *pair.design;
  // Equal split, then each spike carries the resultant of its along-track
  // and cross-slope shares.
  const double share = std::hypot(b.applied_draft / 2.0, b.lateral_load / 2.0);
  b.anchored_lateral_capacity =
      2.0 * LateralResistance(s.soil, design, design.max_depth, s.environment);
  const PenetrationSolution<double> sol =
      PenetrationDepth(s.soil, design, share, s.environment);

  std::array<double, 2> engagement{};
  for (std::size_t i = 0; i < 2; ++i) {
    engagement[i] = sol.depth + s.terrain.offset(pair.ids[i]);
  }
  if (v.depth_equalizer) {
    const double cap =
        std::min(engagement[0], engagement[1]) + s.gait.equalizer_margin;
    for (double& e : engagement) e = std::min(e, cap);
  }

  const double cf = s.gait.strict_gamma ? 1.0 : s.soil.center_of_force_fraction;
  for (std::size_t i = 0; i < 2; ++i) {
    SpikeState& st = b.spikes[i];
    st.id = pair.ids[i];
    st.depth = sol.depth;
    st.engagement = engagement[i];
    st.draft_share = share;
    st.saturated = sol.saturated;
    try {
      st.gamma_deg = ThrustAngle(design.radius_r, design.hinge_height_h,
                                 engagement[i], 0.0);
      st.gamma_eff_deg = EffectiveThrustAngle(
          design.radius_r, design.hinge_height_h, engagement[i], 0.0, cf);
      st.lift = LiftForce(share, st.gamma_eff_deg);
    } catch (const DomainError&) {
      b.unseated = true;
      continue;
    }
    st.window = PenetrationWindow(design.rake_alpha_deg, st.gamma_deg);
    b.total_lift += st.lift;
  }
  const LiftOffCheck check = CheckLiftOff(b.frame_normal_load, b.total_lift);
  b.lift_margin = check.margin;
  b.lifted = check.lifted;
  b.saturated = sol.saturated;
  return b;
}

VeerResult VeerUpdate(GaitState& state, const Scenario& s,
                      double anchored_capacity) {
  const double lateral = std::abs(WeightComponents(s).y());
  const double stroke = s.vehicle.stroke;
  VeerResult r;
  if (lateral <= 0.0) {
    r.load_ratio = 0.0;
  } else if (anchored_capacity <= 0.0) {
    r.load_ratio = std::numeric_limits<double>::infinity();
  } else {
    r.load_ratio = lateral / anchored_capacity;
  }
  // An anchor with no lateral hold lets the frame slide a full stroke.
  r.drift = std::isfinite(r.load_ratio)
                ? s.gait.veer_gain * r.load_ratio * stroke
                : stroke;
  if (r.load_ratio >= 1.0) {
    r.classification = EventKind::kVeerFast;
  } else if (r.load_ratio > 0.0) {
    r.classification = EventKind::kVeerSlow;
  }
  state.lateral_offset += r.drift;
  state.heading_error_deg = RadToDeg(std::atan2(r.drift, stroke));
  return r;
}

namespace {

TrialEvent MakeEvent(int step, EventKind kind, const PhaseBalance& b,
                     double load_ratio) {
  TrialEvent e;
  e.step = step;
  e.kind = kind;
  e.phase = b.phase;
  e.spikes = b.spikes;
  e.applied_draft = b.applied_draft;
  e.requested_draft = b.requested_draft;
  e.draft_capacity = b.draft_capacity;
  e.frame_normal_load = b.frame_normal_load;
  e.total_lift = b.total_lift;
  e.load_ratio = load_ratio;
  return e;
}

EventKind LiftEvent(Phase phase) {
  return phase == Phase::kPushBlade ? EventKind::kLiftOffRear
                                    : EventKind::kLiftOffFront;
}

}  // namespace

TrialReport RunScenario(const Scenario& scenario, int max_cycles) {
  Validate(scenario);
  if (max_cycles < 1) {
    throw InvalidConfig("max_cycles", "must be >= 1");
  }
  const Scenario& s = scenario;
  TrialReport report;
  report.summary = AnalyzeStability(s);

  GaitState state;
  state.carriage_position = s.vehicle.stroke;
  int failures = 0;
  bool finished = false;
  const int max_steps = 2 * max_cycles;
  int step = 0;
  for (; step < max_steps && !finished; ++step) {
    HalfCycleRecord rec;
    rec.step = step;
    rec.cycle = state.cycle_index;

    const PhaseBalance b = PhaseForceBalance(state, s);
    const bool infeasible = b.unseated;

    const VeerResult veer = VeerUpdate(state, s, b.anchored_lateral_capacity);
    if (veer.classification) {
      report.events.push_back(MakeEvent(step, *veer.classification, b, veer.load_ratio));
    }
    if (infeasible) {
      report.events.push_back(
          MakeEvent(step, EventKind::kWindowViolation, b, veer.load_ratio));
    }
    for (const SpikeState& sp : b.spikes) {
      if (!infeasible && sp.window != WindowStatus::kInWindow) {
        report.events.push_back(
            MakeEvent(step, EventKind::kWindowViolation, b, veer.load_ratio));
        break;
      }
    }
    if (b.saturated) {
      report.events.push_back(
          MakeEvent(step, EventKind::kAnchorSaturated, b, veer.load_ratio));
    }
    if (b.stall) {
      report.events.push_back(MakeEvent(step, EventKind::kStall, b, veer.load_ratio));
    }
    if (b.lifted) {
      report.events.push_back(
          MakeEvent(step, LiftEvent(b.phase), b, veer.load_ratio));
    }

    rec.balance = b;
    rec.load_ratio = veer.load_ratio;
    rec.lateral_offset = state.lateral_offset;

    std::ostringstream detail;
    if (state.lateral_offset > s.gait.veer_off_threshold) {
      rec.vehicle_position = state.vehicle_position;
      report.log.push_back(rec);
      report.outcome = Outcome::kVeeredOff;
      detail << "lateral offset " << state.lateral_offset << " m exceeded "
             << s.gait.veer_off_threshold << " m at half-cycle " << step;
      report.detail = detail.str();
      finished = true;
      continue;
    }

    const bool failed = infeasible || b.lifted || b.stall || b.saturated;
    if (failed) {
      ++failures;
      rec.vehicle_position = state.vehicle_position;
      report.log.push_back(rec);
      if (failures >= s.gait.block_attempts) {
        report.outcome =
            b.lifted ? Outcome::kBlockedByLift : Outcome::kBlockedByStall;
        detail << ToString(b.phase) << " failed on " << failures
               << " consecutive attempts ending at half-cycle " << step;
        report.detail = detail.str();
        finished = true;
      }
      continue;
    }

    failures = 0;
    rec.advanced = true;
    if (state.phase == Phase::kPushBlade) {
      state.vehicle_position += s.vehicle.stroke;
      state.carriage_position = 0.0;
      state.phase = Phase::kPullFrame;
    } else {
      state.carriage_position = s.vehicle.stroke;
      state.phase = Phase::kPushBlade;
      ++state.cycle_index;
    }
    rec.vehicle_position = state.vehicle_position;
    report.log.push_back(rec);

    if (state.vehicle_position >= s.terrain.path_length) {
      report.outcome = Outcome::kPathCleared;
      detail << "path of " << s.terrain.path_length << " m cleared after "
             << step + 1 << " half-cycles";
      report.detail = detail.str();
      finished = true;
    }
  }
  if (!finished) {
    report.outcome = Outcome::kBlockedByStall;
    report.detail = "max_cycles exhausted before the path was cleared";
  }
  report.half_cycles = step;
  report.distance_covered = state.vehicle_position;
  report.lateral_offset = state.lateral_offset;
  return report;
}

}  // namespace interlock
