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

#ifndef INTERLOCK_SPIKE_HPP_
#define INTERLOCK_SPIKE_HPP_

#include <cmath>
#include <string_view>

#include "interlock/angles.hpp"
#include "interlock/core_model.hpp"
#include "interlock/errors.hpp"

namespace interlock {

// Penetration is reliable while the rake/thrust difference stays strictly
// inside this band.
inline constexpr double kWindowLowDeg = 15.0;
inline constexpr double kWindowHighDeg = 35.0;

enum class WindowStatus { kInWindow, kTooShallowAngle, kTooSteepAngle };

std::string_view ToString(WindowStatus status);

namespace detail {

template <typename Scalar>
Scalar ChordAngle(Scalar radius, Scalar drop) {
  const Scalar s = drop / radius;
  if (!(s >= Scalar(0) && s < Scalar(1))) {
    throw DomainError("spike tip outside the reachable arc (0 <= drop < r)");
  }
  using std::asin;
  return RadToDeg(asin(s));
}

}  // namespace detail

/// Inclination of the hinge-to-tip chord, degrees. The vertical drop from
/// hinge to tip is h + depth + offset.
template <typename Scalar>
Scalar ThrustAngle(Scalar radius, Scalar hinge_height, Scalar depth,
                   Scalar offset) {
  return detail::ChordAngle(radius, hinge_height + depth + offset);
}

/// Chord angle to the soil-reaction centre, a fraction cf of the engaged
/// length below the hinge level. cf = 1 gives ThrustAngle exactly.
template <typename Scalar>
Scalar EffectiveThrustAngle(Scalar radius, Scalar hinge_height, Scalar depth,
                            Scalar offset, Scalar cf) {
  if (!(cf > Scalar(0) && cf <= Scalar(1))) {
    throw DomainError("center-of-force fraction must lie in (0, 1]");
  }
  return detail::ChordAngle(radius, hinge_height + cf * (depth + offset));
}

template <typename Scalar>
WindowStatus PenetrationWindow(Scalar rake_deg, Scalar gamma_deg) {
  const Scalar diff = rake_deg - gamma_deg;
  if (diff <= Scalar(kWindowLowDeg)) return WindowStatus::kTooShallowAngle;
  if (diff >= Scalar(kWindowHighDeg)) return WindowStatus::kTooSteepAngle;
  return WindowStatus::kInWindow;
}

/// Vertical hinge force from a horizontal draft, F_L = F_D tan(gamma).
template <typename Scalar>
Scalar LiftForce(Scalar draft, Scalar gamma_deg) {
  if (!(gamma_deg >= Scalar(0) && gamma_deg < Scalar(90))) {
    throw DomainError("thrust angle must lie in [0, 90) deg");
  }
  if (draft < Scalar(0)) throw DomainError("draft must be non-negative");
  using std::tan;
  return draft * tan(DegToRad(gamma_deg));
}

double ThrustAngle(const SpikeDesign& spike, double depth, double offset);
double EffectiveThrustAngle(const SpikeDesign& spike, double depth,
                            double offset, double cf);

/// Statics of one anchored spike within a half-cycle.
struct SpikeState {
  SpikeId id = SpikeId::kRearLeft;
  double depth = 0.0;         // solved penetration below local ground
  double engagement = 0.0;    // depth + offset, after any equalizer clamp
  double gamma_deg = 0.0;
  double gamma_eff_deg = 0.0;
  double draft_share = 0.0;   // horizontal load carried by this spike
  double lift = 0.0;
  WindowStatus window = WindowStatus::kInWindow;
  bool saturated = false;
};

}  // namespace interlock

#endif  // INTERLOCK_SPIKE_HPP_
