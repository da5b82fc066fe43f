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

#include "interlock/spike.hpp"

namespace interlock {

std::string_view ToString(WindowStatus status) {
  switch (status) {
    case WindowStatus::kInWindow:
      return "in_window";
    case WindowStatus::kTooShallowAngle:
      return "too_shallow_angle";
    case WindowStatus::kTooSteepAngle:
      return "too_steep_angle";
  }
  return "in_window";
}

double ThrustAngle(const SpikeDesign& spike, double depth, double offset) {
  return ThrustAngle(spike.radius_r, spike.hinge_height_h, depth, offset);
}

double EffectiveThrustAngle(const SpikeDesign& spike, double depth,
                            double offset, double cf) {
  return EffectiveThrustAngle(spike.radius_r, spike.hinge_height_h, depth,
                              offset, cf);
}

}  // namespace interlock
