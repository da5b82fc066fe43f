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

#ifndef INTERLOCK_SOIL_HPP_
#define INTERLOCK_SOIL_HPP_

#include <cmath>
#include <concepts>

#include "interlock/angles.hpp"
#include "interlock/core_model.hpp"
#include "interlock/errors.hpp"

namespace interlock {

/// Absolute depth tolerance guaranteed by the penetration solver.
inline constexpr double kDepthTolerance = 1e-6;

/// Rankine passive earth-pressure coefficient tan^2(45 + phi/2).
template <typename Scalar>
Scalar PassiveCoefficient(Scalar phi_deg) {
  if (!(phi_deg >= Scalar(0) && phi_deg < Scalar(60))) {
    throw DomainError("friction angle must lie in [0, 60) deg");
  }
  using std::tan;
  const Scalar t = tan(DegToRad(Scalar(45) + phi_deg / Scalar(2)));
  return t * t;
}

/// Lateral resistance of a slender spike, F(d) = (m_p / 2) Kp rho g B d^2.
/// Stored as the single coefficient in front of d^2.
template <typename Scalar>
class BromsResistance {
 public:
  BromsResistance(Scalar multiplier, Scalar kp, Scalar density, Scalar gravity,
                  Scalar diameter)
      : coefficient_(multiplier / Scalar(2) * kp * density * gravity *
                     diameter) {}

  Scalar operator()(Scalar depth) const {
    return coefficient_ * depth * depth;
  }

  Scalar Inverse(Scalar force) const {
    using std::sqrt;
    return sqrt(force / coefficient_);
  }

  Scalar coefficient() const { return coefficient_; }

 private:
  Scalar coefficient_;
};

/// Any callable mapping depth to a non-decreasing resistance.
template <typename F, typename Scalar>
concept ResistanceModel = requires(const F& f, Scalar d) {
  { f(d) } -> std::convertible_to<Scalar>;
};

template <typename F, typename Scalar>
concept InvertibleResistance = ResistanceModel<F, Scalar> &&
    requires(const F& f, Scalar force) {
  { f.Inverse(force) } -> std::convertible_to<Scalar>;
};

/// Bisection for f(x) = target on [lo, hi] with f non-decreasing and
/// f(lo) <= target <= f(hi). Returns the bracket midpoint once the bracket is
/// narrower than tol.
template <typename Scalar, typename F>
  requires ResistanceModel<F, Scalar>
Scalar SolveMonotone(const F& f, Scalar target, Scalar lo, Scalar hi,
                     Scalar tol) {
  while (hi - lo > tol) {
    const Scalar mid = lo + (hi - lo) / Scalar(2);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / Scalar(2);
}

template <typename Scalar>
struct PenetrationSolution {
  Scalar depth{};
  Scalar resistance_at_depth{};
  bool saturated = false;  // draft reached or exceeded the capacity at max depth
};

/// Self-regulating depth: the spike sinks until the soil resistance equals
/// the draft share. Bisection works for any monotone model.
template <typename Scalar, typename F>
  requires ResistanceModel<F, Scalar>
PenetrationSolution<Scalar> SolvePenetrationBisection(const F& resistance,
                                                      Scalar max_depth,
                                                      Scalar draft,
                                                      Scalar tol = Scalar(1e-9)) {
  if (draft <= Scalar(0)) return {Scalar(0), Scalar(0), false};
  const Scalar capacity = resistance(max_depth);
  if (draft >= capacity) return {max_depth, capacity, true};
  const Scalar depth = SolveMonotone(resistance, draft, Scalar(0), max_depth, tol);
  return {depth, resistance(depth), false};
}

/// Uses the model's closed-form inverse when it has one, bisection otherwise.
template <typename Scalar, typename F>
  requires ResistanceModel<F, Scalar>
PenetrationSolution<Scalar> SolvePenetration(const F& resistance,
                                             Scalar max_depth, Scalar draft) {
  if constexpr (InvertibleResistance<F, Scalar>) {
    if (draft <= Scalar(0)) return {Scalar(0), Scalar(0), false};
    const Scalar capacity = resistance(max_depth);
    if (draft >= capacity) return {max_depth, capacity, true};
    const Scalar depth = resistance.Inverse(draft);
    return {depth, resistance(depth), false};
  } else {
    return SolvePenetrationBisection(resistance, max_depth, draft);
  }
}

// Double-precision entry points on the domain types.

BromsResistance<double> MakeResistance(const SoilModel& soil,
                                       const SpikeDesign& spike,
                                       const Environment& env);

double LateralResistance(const SoilModel& soil, const SpikeDesign& spike,
                         double depth, const Environment& env);

/// Multiplier m_p that makes the spike resist target_force at at_depth.
double CalibrateMultiplier(double target_force, double at_depth,
                           const SoilModel& soil, const SpikeDesign& spike,
                           const Environment& env);

PenetrationSolution<double> PenetrationDepth(const SoilModel& soil,
                                             const SpikeDesign& spike,
                                             double draft_share,
                                             const Environment& env);

}  // namespace interlock

#endif  // INTERLOCK_SOIL_HPP_
