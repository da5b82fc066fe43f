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

#include "interlock/soil.hpp"

namespace interlock {

BromsResistance<double> MakeResistance(const SoilModel& soil,
                                       const SpikeDesign& spike,
                                       const Environment& env) {
  return BromsResistance<double>(soil.resistance_multiplier,
                                 PassiveCoefficient(soil.friction_angle_deg),
                                 soil.bulk_density, env.gravity,
                                 spike.diameter_B);
}

double LateralResistance(const SoilModel& soil, const SpikeDesign& spike,
                         double depth, const Environment& env) {
  if (!(depth >= 0.0 && depth <= spike.max_depth)) {
    throw DomainError("depth must lie in [0, max_depth]");
  }
  return MakeResistance(soil, spike, env)(depth);
}

double CalibrateMultiplier(double target_force, double at_depth,
                           const SoilModel& soil, const SpikeDesign& spike,
                           const Environment& env) {
  if (!(target_force > 0.0)) throw DomainError("target force must be > 0");
  if (!(at_depth > 0.0 && at_depth <= spike.max_depth)) {
    throw DomainError("calibration depth must lie in (0, max_depth]");
  }
  // F is linear in m_p, so scale a unit-multiplier evaluation.
  SoilModel unit = soil;
  unit.resistance_multiplier = 1.0;
  return target_force / MakeResistance(unit, spike, env)(at_depth);
}

PenetrationSolution<double> PenetrationDepth(const SoilModel& soil,
                                             const SpikeDesign& spike,
                                             double draft_share,
                                             const Environment& env) {
  if (draft_share < 0.0) throw DomainError("draft share must be >= 0");
  return SolvePenetration(MakeResistance(soil, spike, env), spike.max_depth,
                          draft_share);
}

}  // namespace interlock
