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

#include "interlock/core_model.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Geometry>

#include "interlock/angles.hpp"

namespace interlock {

InvalidConfig::InvalidConfig(std::vector<FieldError> errors)
    : std::invalid_argument(Summarize(errors)), errors_(std::move(errors)) {}

std::string InvalidConfig::Summarize(const std::vector<FieldError>& errors) {
  std::ostringstream out;
  out << "invalid config:";
  for (const auto& e : errors) out << " [" << e.field << ": " << e.message << "]";
  return out.str();
}

std::string_view ToString(HeadingMode mode) {
  switch (mode) {
    case HeadingMode::kContour:
      return "contour";
    case HeadingMode::kDiagonal:
      return "diagonal";
    case HeadingMode::kUphill:
      return "uphill";
  }
  return "uphill";
}

std::optional<HeadingMode> ParseHeadingMode(std::string_view text) {
  if (text == "contour") return HeadingMode::kContour;
  if (text == "diagonal") return HeadingMode::kDiagonal;
  if (text == "uphill") return HeadingMode::kUphill;
  return std::nullopt;
}

std::string_view ToString(SpikeId id) {
  switch (id) {
    case SpikeId::kRearLeft:
      return "rear_left";
    case SpikeId::kRearRight:
      return "rear_right";
    case SpikeId::kFrontLeft:
      return "front_left";
    case SpikeId::kFrontRight:
      return "front_right";
  }
  return "rear_left";
}

std::optional<SpikeId> ParseSpikeId(std::string_view text) {
  for (SpikeId id : kAllSpikes) {
    if (ToString(id) == text) return id;
  }
  return std::nullopt;
}

namespace {

// Heading 45 deg off the fall line for the diagonal mode.
constexpr double kDiagonalHeadingDeg = 45.0;

// Vehicle attitude for a heading on a plane of the given slope. The heading
// angle is measured in plan view from the up-slope direction.
Eigen::Vector2d AttitudeOnSlope(double slope_deg, double heading_deg) {
  const double s = DegToRad(slope_deg);
  const double t = DegToRad(heading_deg);
  const Eigen::Vector3d normal(0.0, -std::sin(s), std::cos(s));
  const Eigen::Vector3d forward =
      Eigen::Vector3d(std::sin(t), std::cos(t), std::cos(t) * std::tan(s))
          .normalized();
  const Eigen::Vector3d right = normal.cross(forward);
  return {RadToDeg(std::asin(forward.z())), RadToDeg(std::asin(right.z()))};
}

double HeadingAngle(HeadingMode mode) {
  switch (mode) {
    case HeadingMode::kContour:
      return 90.0;
    case HeadingMode::kDiagonal:
      return kDiagonalHeadingDeg;
    case HeadingMode::kUphill:
      return 0.0;
  }
  return 0.0;
}

}  // namespace

double TerrainPatch::pitch_deg() const {
  if (pitch_override_deg) return *pitch_override_deg;
  if (heading == HeadingMode::kContour) return 0.0;
  if (heading == HeadingMode::kUphill) return slope_deg;
  return AttitudeOnSlope(slope_deg, HeadingAngle(heading)).x();
}

double TerrainPatch::roll_deg() const {
  if (roll_override_deg) return *roll_override_deg;
  if (heading == HeadingMode::kContour) return slope_deg;
  if (heading == HeadingMode::kUphill) return 0.0;
  return std::abs(AttitudeOnSlope(slope_deg, HeadingAngle(heading)).y());
}

double TerrainPatch::offset(SpikeId id) const {
  auto it = surface_offsets.find(id);
  return it == surface_offsets.end() ? 0.0 : it->second;
}

SpikeDesign LargeSpike() { return SpikeDesign{}; }

SpikeDesign SmallSpike() { return VehicleConfig{}.front_spikes; }

VehicleConfig PaperVehicle() { return VehicleConfig{}; }

SoilModel BeachSand() { return SoilModel{}; }

SoilModel QuarryFine() {
  return SoilModel{.name = "quarry_fine",
                   .friction_angle_deg = 38.0,
                   .bulk_density = 1700.0,
                   .resistance_multiplier = 50.0,
                   .center_of_force_fraction = 2.0 / 3.0};
}

SoilModel QuarryCoarse() {
  return SoilModel{.name = "quarry_coarse",
                   .friction_angle_deg = 40.0,
                   .bulk_density = 1800.0,
                   .resistance_multiplier = 13.154218441830215,
                   .center_of_force_fraction = 2.0 / 3.0};
}

SoilModel QuarryFineLoose() {
  return SoilModel{.name = "quarry_fine_loose",
                   .friction_angle_deg = 38.0,
                   .bulk_density = 1700.0,
                   .resistance_multiplier = 0.25,
                   .center_of_force_fraction = 2.0 / 3.0};
}

std::optional<SoilModel> SoilPreset(std::string_view name) {
  for (const SoilModel& soil :
       {BeachSand(), QuarryFine(), QuarryCoarse(), QuarryFineLoose()}) {
    if (soil.name == name) return soil;
  }
  return std::nullopt;
}

std::vector<std::string> SoilPresetNames() {
  return {BeachSand().name, QuarryFine().name, QuarryCoarse().name,
          QuarryFineLoose().name};
}

Scenario DefaultScenario() { return Scenario{}; }

namespace {

class Checker {
 public:
  void Require(bool ok, std::string field, std::string message) {
    if (!ok) errors_.push_back({std::move(field), std::move(message)});
  }
  std::vector<FieldError> Take() { return std::move(errors_); }

 private:
  std::vector<FieldError> errors_;
};

void CheckSpike(Checker& c, const SpikeDesign& s, const std::string& p) {
  c.Require(s.radius_r > 0.0, p + ".radius_m", "must be > 0");
  c.Require(s.diameter_B > 0.0 && s.diameter_B < s.radius_r, p + ".diameter_m",
            "must satisfy 0 < diameter_B < radius_r");
  c.Require(s.rake_alpha_deg > 0.0 && s.rake_alpha_deg < 90.0,
            p + ".rake_deg", "must lie in (0, 90) deg");
  c.Require(s.hinge_height_h >= 0.0, p + ".hinge_height_m", "must be >= 0");
  c.Require(s.max_depth > 0.0 && s.max_depth < s.radius_r - s.hinge_height_h,
            p + ".max_depth_m", "must satisfy 0 < max_depth < radius_r - hinge_height_h");
  c.Require(s.pair_spacing > 0.0, p + ".pair_spacing_m", "must be > 0");
}

const SpikeDesign& DesignFor(const VehicleConfig& v, SpikeId id) {
  return (id == SpikeId::kRearLeft || id == SpikeId::kRearRight)
             ? v.rear_spikes
             : v.front_spikes;
}

}  // namespace

std::vector<FieldError> CheckScenario(const Scenario& s) {
  Checker c;
  const VehicleConfig& v = s.vehicle;
  c.Require(v.mass > 0.0, "vehicle.mass_kg", "must be > 0");
  c.Require(v.com_height > 0.0, "vehicle.com_height_m", "must be > 0");
  c.Require(v.track_width > 0.0, "vehicle.track_width_m", "must be > 0");
  c.Require(v.total_length > 0.0, "vehicle.total_length_m", "must be > 0");
  c.Require(v.stroke > 0.0, "vehicle.stroke_m", "must be > 0");
  c.Require(v.blade_width > 0.0, "vehicle.blade_width_m", "must be > 0");
  c.Require(v.blade_height > 0.0, "vehicle.blade_height_m", "must be > 0");
  c.Require(v.frame1_mass_fraction > 0.0 && v.frame1_mass_fraction < 1.0,
            "vehicle.frame1_mass_fraction", "must lie in (0, 1)");
  c.Require(v.peak_power >= 0.0, "vehicle.peak_power_w", "must be >= 0");
  c.Require(v.drivetrain_efficiency > 0.0 && v.drivetrain_efficiency <= 1.0,
            "vehicle.drivetrain_efficiency", "must lie in (0, 1]");
  c.Require(v.speed > 0.0, "vehicle.speed_m_s", "must be > 0");
  CheckSpike(c, v.front_spikes, "vehicle.front_spikes");
  CheckSpike(c, v.rear_spikes, "vehicle.rear_spikes");

  const SoilModel& soil = s.soil;
  c.Require(soil.friction_angle_deg >= 0.0 && soil.friction_angle_deg < 60.0,
            "soil.friction_angle_deg", "must lie in [0, 60) deg");
  c.Require(soil.bulk_density > 0.0, "soil.bulk_density_kg_m3", "must be > 0");
  c.Require(soil.resistance_multiplier > 0.0, "soil.resistance_multiplier",
            "must be > 0");
  c.Require(soil.center_of_force_fraction > 0.0 &&
                soil.center_of_force_fraction <= 1.0,
            "soil.center_of_force_fraction", "must lie in (0, 1]");

  c.Require(s.environment.gravity > 0.0, "environment.gravity_m_s2", "must be > 0");

  const TerrainPatch& t = s.terrain;
  c.Require(t.slope_deg >= 0.0 && t.slope_deg < 90.0, "terrain.slope_deg",
            "must lie in [0, 90) deg");
  if (t.pitch_override_deg) {
    c.Require(std::abs(*t.pitch_override_deg) < 90.0, "terrain.pitch_override_deg",
              "must lie in (-90, 90) deg");
  }
  if (t.roll_override_deg) {
    c.Require(std::abs(*t.roll_override_deg) < 90.0, "terrain.roll_override_deg",
              "must lie in (-90, 90) deg");
  }
  for (const auto& [id, offset] : t.surface_offsets) {
    const SpikeDesign& d = DesignFor(v, id);
    c.Require(offset > -d.max_depth &&
                  d.hinge_height_h + d.max_depth + offset < d.radius_r,
              "terrain.surface_offsets_m." + std::string(ToString(id)),
              "must satisfy -max_depth < offset < radius_r - hinge_height_h - max_depth");
  }
  c.Require(t.path_length > 0.0, "terrain.path_length_m", "must be > 0");

  c.Require(s.blade_draft_demand >= 0.0, "blade_draft_demand_n", "must be >= 0");

  const GaitParams& g = s.gait;
  c.Require(g.drag_coefficient >= 0.0, "gait.drag_coefficient", "must be >= 0");
  c.Require(g.veer_gain >= 0.0, "gait.veer_gain", "must be >= 0");
  c.Require(g.veer_off_threshold > 0.0, "gait.veer_off_threshold_m", "must be > 0");
  c.Require(g.block_attempts >= 1, "gait.block_attempts", "must be >= 1");
  c.Require(g.equalizer_margin >= 0.0, "gait.equalizer_margin_m", "must be >= 0");
  return c.Take();
}

const Scenario& Validate(const Scenario& scenario) {
  auto errors = CheckScenario(scenario);
  if (!errors.empty()) throw InvalidConfig(std::move(errors));
  return scenario;
}

double Weight(const VehicleConfig& vehicle, const Environment& env) {
  return vehicle.mass * env.gravity;
}

}  // namespace interlock
