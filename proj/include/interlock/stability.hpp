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

#ifndef INTERLOCK_STABILITY_HPP_
#define INTERLOCK_STABILITY_HPP_

#include <cmath>
#include <string_view>

#include <Eigen/Core>

#include "interlock/angles.hpp"
#include "interlock/core_model.hpp"
#include "interlock/errors.hpp"

namespace interlock {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

/// Weight in vehicle axes: (along-track, cross-track, normal). Along-track is
/// positive downhill-backwards, cross-track positive downhill.
template <typename Scalar>
Vector3<Scalar> SlopeDecomposition(Scalar weight, Scalar pitch_deg,
                                   Scalar roll_deg) {
  using std::abs;
  if (!(abs(pitch_deg) < Scalar(90) && abs(roll_deg) < Scalar(90))) {
    throw DomainError("pitch and roll must lie strictly inside (-90, 90) deg");
  }
  using std::cos;
  using std::sin;
  const Scalar p = DegToRad(pitch_deg);
  const Scalar r = DegToRad(roll_deg);
  return weight * Vector3<Scalar>(sin(p), cos(p) * sin(r), cos(p) * cos(r));
}

/// Largest thrust angle at which a draft of pw * W lifts no more than W.
template <typename Scalar>
Scalar MaxThrustAngleForPullWeight(Scalar pull_weight) {
  if (!(pull_weight > Scalar(0))) {
    throw DomainError("pull/weight ratio must be positive");
  }
  using std::atan;
  return RadToDeg(atan(Scalar(1) / pull_weight));
}

/// Quasi-static tip-over roll angle about the downhill support line.
template <typename Scalar>
Scalar RolloverTipAngle(Scalar track_width, Scalar com_height) {
  if (!(com_height > Scalar(0))) {
    throw DomainError("center-of-mass height must be positive");
  }
  using std::atan;
  return RadToDeg(atan((track_width / Scalar(2)) / com_height));
}

double PullWeightRatio(double draft, const VehicleConfig& vehicle,
                       const Environment& env);
double RolloverTipAngle(const VehicleConfig& vehicle);

struct LiftOffCheck {
  double margin = 0.0;  // frame normal load minus hinge lift
  bool lifted = false;
};

LiftOffCheck CheckLiftOff(double frame_normal_load, double total_hinge_lift);

enum class LimitingFactor { kNone, kLiftOff, kRollover, kAnchorCapacity };

std::string_view ToString(LimitingFactor factor);

struct StabilityReport {
  double weight = 0.0;
  double pull_weight_ratio = 0.0;
  double max_gamma_allowed_deg = 90.0;
  double rollover_tip_angle_deg = 0.0;
  double roll_deg = 0.0;
  double pitch_deg = 0.0;
  double rollover_margin_deg = 0.0;
  double lift_margin_front = 0.0;
  double lift_margin_rear = 0.0;
  // Smallest spare horizontal capacity over both anchored pairs, newtons.
  double anchor_margin = 0.0;
  LimitingFactor limiting_factor = LimitingFactor::kNone;
};

/// Static margins of the scenario at its first push and pull half-cycles,
/// without running the gait.
StabilityReport AnalyzeStability(const Scenario& scenario);

}  // namespace interlock

#endif  // INTERLOCK_STABILITY_HPP_
