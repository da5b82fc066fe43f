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

#ifndef INTERLOCK_CORE_MODEL_HPP_
#define INTERLOCK_CORE_MODEL_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interlock/errors.hpp"

// Units throughout: metres, newtons, kilograms, seconds. Angles that cross
// the public surface are degrees; radians stay inside function bodies.

namespace interlock {

/// Geometry of one spike class. Both spikes of a pair share a design.
struct SpikeDesign {
  double radius_r = 1.35;         // hinge-to-tip distance
  double diameter_B = 0.021;
  double rake_alpha_deg = 40.0;   // shaft inclination from horizontal
  double hinge_height_h = 0.0;    // hinge elevation above local ground
  double max_depth = 0.50;
  double pair_spacing = 0.55;

  bool operator==(const SpikeDesign&) const = default;
};

/// Cohesionless soil with a Broms-style lateral resistance multiplier.
struct SoilModel {
  std::string name = "beach_sand";
  double friction_angle_deg = 35.0;
  double bulk_density = 1600.0;               // kg/m^3
  double resistance_multiplier = 13.154218441830215;
  double center_of_force_fraction = 2.0 / 3.0;

  bool operator==(const SoilModel&) const = default;
};

struct Environment {
  double gravity = 9.81;

  bool operator==(const Environment&) const = default;
};

struct VehicleConfig {
  double mass = 40.0;
  double com_height = 0.10;
  double track_width = 0.55;
  double total_length = 2.2;
  double stroke = 1.15;
  double blade_width = 0.80;
  double blade_height = 0.40;
  // Share of the vehicle carried by the front frame (central bar, blade and
  // small spikes). The rear frame carries the rest.
  double frame1_mass_fraction = 0.15;
  double peak_power = 250.0;
  double drivetrain_efficiency = 0.75;
  double speed = 0.10;
  SpikeDesign front_spikes{.radius_r = 0.60,
                           .diameter_B = 0.012,
                           .rake_alpha_deg = 40.0,
                           .hinge_height_h = 0.0,
                           .max_depth = 0.15,
                           .pair_spacing = 0.60};
  SpikeDesign rear_spikes;
  bool depth_equalizer = false;

  bool operator==(const VehicleConfig&) const = default;
};

enum class HeadingMode { kContour, kDiagonal, kUphill };

std::string_view ToString(HeadingMode mode);
std::optional<HeadingMode> ParseHeadingMode(std::string_view text);

enum class SpikeId { kRearLeft, kRearRight, kFrontLeft, kFrontRight };

inline constexpr std::array<SpikeId, 4> kAllSpikes = {
    SpikeId::kRearLeft, SpikeId::kRearRight, SpikeId::kFrontLeft,
    SpikeId::kFrontRight};

std::string_view ToString(SpikeId id);
std::optional<SpikeId> ParseSpikeId(std::string_view text);

struct TerrainPatch {
  double slope_deg = 0.0;
  HeadingMode heading = HeadingMode::kUphill;
  // Measured vehicle attitude, when it differs from the ideal mapping.
  std::optional<double> pitch_override_deg;
  std::optional<double> roll_override_deg;
  // Local ground deviation under a spike. Positive means the ground is lower,
  // so the spike engages deeper relative to its hinge.
  std::map<SpikeId, double> surface_offsets;
  double path_length = 10.0;

  double pitch_deg() const;
  double roll_deg() const;
  double offset(SpikeId id) const;

  bool operator==(const TerrainPatch&) const = default;
};

/// Free constants of the locomotion model. None of these are measured; they
/// are pinned by the bundled trial suite.
struct GaitParams {
  double drag_coefficient = 0.3;     // pull-phase drag on the moving frame
  double veer_gain = 0.2;            // k_v in drift = k_v * load_ratio * stroke
  double veer_off_threshold = 1.0;   // lateral offset that ends a trial
  int block_attempts = 3;            // consecutive failures before blocking
  double equalizer_margin = 0.02;    // allowed engagement spread, metres
  bool strict_gamma = false;         // lift from tip angle instead of gamma_eff

  bool operator==(const GaitParams&) const = default;
};

struct Scenario {
  std::string label = "default";
  VehicleConfig vehicle;
  SoilModel soil;
  Environment environment;
  TerrainPatch terrain;
  double blade_draft_demand = 1500.0;
  GaitParams gait;

  bool operator==(const Scenario&) const = default;
};

// Paper vehicle and spike classes.
SpikeDesign LargeSpike();
SpikeDesign SmallSpike();
VehicleConfig PaperVehicle();

// Soil presets. Friction angle and density are assumed values for the named
// materials; the multipliers are calibrated.
SoilModel BeachSand();
SoilModel QuarryFine();
SoilModel QuarryCoarse();
SoilModel QuarryFineLoose();
std::optional<SoilModel> SoilPreset(std::string_view name);
std::vector<std::string> SoilPresetNames();

inline constexpr double kEarthGravity = 9.81;
inline constexpr double kMoonGravity = 1.62;

Scenario DefaultScenario();

/// Every violated invariant, one entry per offending field.
std::vector<FieldError> CheckScenario(const Scenario& scenario);

/// Returns the scenario unchanged or throws InvalidConfig listing every
/// violated invariant.
const Scenario& Validate(const Scenario& scenario);

double Weight(const VehicleConfig& vehicle, const Environment& env);

}  // namespace interlock

#endif  // INTERLOCK_CORE_MODEL_HPP_
