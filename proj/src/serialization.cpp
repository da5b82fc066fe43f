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

#include "interlock/serialization.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

namespace interlock {

namespace {

// Each domain type lists its fields once; the writer and the reader walk
// the same list, so the two directions cannot drift apart.

class JsonWriter {
 public:
  explicit JsonWriter(Json& out) : out_(out) {}

  template <typename T>
  void Field(const char* key, T& value) {
    using U = std::remove_cv_t<T>;
    if constexpr (std::is_same_v<U, HeadingMode> || std::is_same_v<U, SpikeId>) {
      out_[key] = std::string(ToString(value));
    } else {
      out_[key] = value;
    }
  }

  void Field(const char* key, std::optional<double>& value) {
    if (value) out_[key] = *value;
  }

  void Field(const char* key, std::map<SpikeId, double>& value) {
    Json obj = Json::object();
    for (const auto& [id, v] : value) obj[std::string(ToString(id))] = v;
    out_[key] = std::move(obj);
  }

  template <typename Fn>
  void Object(const char* key, Fn&& visit) {
    Json child = Json::object();
    JsonWriter w(child);
    visit(w);
    out_[key] = std::move(child);
  }

 private:
  Json& out_;
};

class JsonReader {
 public:
  JsonReader(const Json& in, std::string path, std::vector<FieldError>& errors)
      : in_(in), path_(std::move(path)), errors_(errors) {
    if (!in_.is_object()) Fail(path_.empty() ? "(root)" : path_, "must be an object");
  }

  ~JsonReader() = default;

  // Reports keys the visitor never asked for.
  void Finish() {
    if (!in_.is_object()) return;
    for (const auto& item : in_.items()) {
      if (!seen_.count(item.key())) Fail(Join(item.key()), "unknown field");
    }
  }

  template <typename T>
  void Field(const char* key, T& value) {
    const Json* node = Take(key);
    if (!node) return;
    using U = std::remove_cv_t<T>;
    if constexpr (std::is_same_v<U, bool>) {
      if (!node->is_boolean()) return Fail(Join(key), "expected a boolean");
      value = node->get<bool>();
    } else if constexpr (std::is_same_v<U, int>) {
      if (!node->is_number_integer()) return Fail(Join(key), "expected an integer");
      value = node->get<int>();
    } else if constexpr (std::is_same_v<U, double>) {
      if (!node->is_number()) return Fail(Join(key), "expected a number");
      value = node->get<double>();
    } else if constexpr (std::is_same_v<U, std::string>) {
      if (!node->is_string()) return Fail(Join(key), "expected a string");
      value = node->get<std::string>();
    } else if constexpr (std::is_same_v<U, HeadingMode>) {
      const auto parsed =
          node->is_string() ? ParseHeadingMode(node->get<std::string>()) : std::nullopt;
      if (!parsed) return Fail(Join(key), "expected contour, diagonal or uphill");
      value = *parsed;
    } else {
      static_assert(sizeof(U) == 0, "unsupported field type");
    }
  }

  void Field(const char* key, std::optional<double>& value) {
    const Json* node = Take(key);
    if (!node || node->is_null()) return;
    if (!node->is_number()) return Fail(Join(key), "expected a number or null");
    value = node->get<double>();
  }

  void Field(const char* key, std::map<SpikeId, double>& value) {
    const Json* node = Take(key);
    if (!node) return;
    if (!node->is_object()) return Fail(Join(key), "expected an object");
    value.clear();
    for (const auto& item : node->items()) {
      const std::string path = Join(key) + "." + item.key();
      const auto id = ParseSpikeId(item.key());
      if (!id) {
        Fail(path, "unknown spike id");
      } else if (!item.value().is_number()) {
        Fail(path, "expected a number");
      } else {
        value[*id] = item.value().get<double>();
      }
    }
  }

  template <typename Fn>
  void Object(const char* key, Fn&& visit) {
    const Json* node = Take(key);
    if (!node) return;
    if (!node->is_object()) return Fail(Join(key), "expected an object");
    JsonReader child(*node, Join(key), errors_);
    visit(child);
    child.Finish();
  }

 private:
  const Json* Take(const char* key) {
    seen_.insert(key);
    if (!in_.is_object()) return nullptr;
    const auto it = in_.find(key);
    return it == in_.end() ? nullptr : &*it;
  }

  std::string Join(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void Fail(std::string field, std::string message) {
    errors_.push_back({std::move(field), std::move(message)});
  }

  const Json& in_;
  std::string path_;
  std::vector<FieldError>& errors_;
  std::set<std::string> seen_;
};

template <typename V>
void VisitSpike(V& v, SpikeDesign& s) {
  v.Field("radius_m", s.radius_r);
  v.Field("diameter_m", s.diameter_B);
  v.Field("rake_deg", s.rake_alpha_deg);
  v.Field("hinge_height_m", s.hinge_height_h);
  v.Field("max_depth_m", s.max_depth);
  v.Field("pair_spacing_m", s.pair_spacing);
}

template <typename V>
void VisitSoil(V& v, SoilModel& s) {
  v.Field("name", s.name);
  v.Field("friction_angle_deg", s.friction_angle_deg);
  v.Field("bulk_density_kg_m3", s.bulk_density);
  v.Field("resistance_multiplier", s.resistance_multiplier);
  v.Field("center_of_force_fraction", s.center_of_force_fraction);
}

template <typename V>
void VisitVehicle(V& v, VehicleConfig& c) {
  v.Field("mass_kg", c.mass);
  v.Field("com_height_m", c.com_height);
  v.Field("track_width_m", c.track_width);
  v.Field("total_length_m", c.total_length);
  v.Field("stroke_m", c.stroke);
  v.Field("blade_width_m", c.blade_width);
  v.Field("blade_height_m", c.blade_height);
  v.Field("frame1_mass_fraction", c.frame1_mass_fraction);
  v.Field("peak_power_w", c.peak_power);
  v.Field("drivetrain_efficiency", c.drivetrain_efficiency);
  v.Field("speed_m_s", c.speed);
  v.Object("front_spikes", [&](auto& w) { VisitSpike(w, c.front_spikes); });
  v.Object("rear_spikes", [&](auto& w) { VisitSpike(w, c.rear_spikes); });
  v.Field("depth_equalizer", c.depth_equalizer);
}

template <typename V>
void VisitTerrain(V& v, TerrainPatch& t) {
  v.Field("slope_deg", t.slope_deg);
  v.Field("heading", t.heading);
  v.Field("pitch_override_deg", t.pitch_override_deg);
  v.Field("roll_override_deg", t.roll_override_deg);
  v.Field("surface_offsets_m", t.surface_offsets);
  v.Field("path_length_m", t.path_length);
}

template <typename V>
void VisitGait(V& v, GaitParams& g) {
  v.Field("drag_coefficient", g.drag_coefficient);
  v.Field("veer_gain", g.veer_gain);
  v.Field("veer_off_threshold_m", g.veer_off_threshold);
  v.Field("block_attempts", g.block_attempts);
  v.Field("equalizer_margin_m", g.equalizer_margin);
  v.Field("strict_gamma", g.strict_gamma);
}

template <typename V>
void VisitScenario(V& v, Scenario& s) {
  v.Field("label", s.label);
  v.Object("vehicle", [&](auto& w) { VisitVehicle(w, s.vehicle); });
  v.Object("soil", [&](auto& w) { VisitSoil(w, s.soil); });
  v.Object("environment", [&](auto& w) { w.Field("gravity_m_s2", s.environment.gravity); });
  v.Object("terrain", [&](auto& w) { VisitTerrain(w, s.terrain); });
  v.Field("blade_draft_demand_n", s.blade_draft_demand);
  v.Object("gait", [&](auto& w) { VisitGait(w, s.gait); });
}

Json SpikeStateToJson(const SpikeState& s) {
  Json j;
  j["spike_id"] = std::string(ToString(s.id));
  j["depth_m"] = s.depth;
  j["engagement_m"] = s.engagement;
  j["gamma_deg"] = s.gamma_deg;
  j["gamma_eff_deg"] = s.gamma_eff_deg;
  j["draft_share_n"] = s.draft_share;
  j["lift_n"] = s.lift;
  j["window"] = std::string(ToString(s.window));
  j["saturated"] = s.saturated;
  return j;
}

Json EventToJson(const TrialEvent& e) {
  Json j;
  j["step"] = e.step;
  j["kind"] = std::string(ToString(e.kind));
  j["phase"] = std::string(ToString(e.phase));
  j["applied_draft_n"] = e.applied_draft;
  j["requested_draft_n"] = e.requested_draft;
  j["draft_capacity_n"] = e.draft_capacity;
  j["frame_normal_load_n"] = e.frame_normal_load;
  j["total_lift_n"] = e.total_lift;
  // Infinity has no JSON form; an anchor with no lateral hold reports null.
  j["load_ratio"] = std::isfinite(e.load_ratio) ? Json(e.load_ratio) : Json(nullptr);
  Json spikes = Json::array();
  for (const SpikeState& s : e.spikes) spikes.push_back(SpikeStateToJson(s));
  j["spikes"] = std::move(spikes);
  return j;
}

}  // namespace

Json ScenarioToJson(const Scenario& scenario) {
  Json out = Json::object();
  Scenario copy = scenario;
  JsonWriter w(out);
  VisitScenario(w, copy);
  return out;
}

Scenario ScenarioFromJson(const Json& doc) {
  std::vector<FieldError> errors;
  Scenario s;
  JsonReader r(doc, "scenario", errors);
  VisitScenario(r, s);
  r.Finish();
  if (!errors.empty()) throw InvalidConfig(std::move(errors));
  return s;
}

Json ScenarioFileToJson(const ScenarioFile& file) {
  Json out;
  out["schema_version"] = file.schema_version;
  out["scenario"] = ScenarioToJson(file.scenario);
  if (file.expected_outcome) {
    out["expected_outcome"] = std::string(ToString(*file.expected_outcome));
  }
  return out;
}

ScenarioFile ParseScenarioFile(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidConfig("(document)", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidConfig("(document)", "must be a JSON object");

  std::vector<FieldError> errors;
  ScenarioFile file;
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "schema_version" && key != "scenario" && key != "expected_outcome") {
      errors.push_back({key, "unknown field"});
    }
  }
  const auto version = doc.find("schema_version");
  if (version == doc.end() || !version->is_number_integer()) {
    errors.push_back({"schema_version", "required integer"});
  } else if (version->get<int>() != kSchemaVersion) {
    errors.push_back({"schema_version", "unsupported version " +
                                            std::to_string(version->get<int>()) +
                                            " (supported: " +
                                            std::to_string(kSchemaVersion) + ")"});
  }
  if (const auto it = doc.find("expected_outcome"); it != doc.end()) {
    const auto outcome =
        it->is_string() ? ParseOutcome(it->get<std::string>()) : std::nullopt;
    if (!outcome) {
      errors.push_back({"expected_outcome",
                        "expected PATH_CLEARED, BLOCKED_BY_LIFT, BLOCKED_BY_STALL "
                        "or VEERED_OFF"});
    } else {
      file.expected_outcome = outcome;
    }
  }
  if (const auto it = doc.find("scenario"); it != doc.end()) {
    JsonReader r(*it, "scenario", errors);
    VisitScenario(r, file.scenario);
    r.Finish();
  }
  if (!errors.empty()) throw InvalidConfig(std::move(errors));
  // Report invariant violations with the same paths as the document.
  for (FieldError& e : CheckScenario(file.scenario)) {
    errors.push_back({"scenario." + e.field, std::move(e.message)});
  }
  if (!errors.empty()) throw InvalidConfig(std::move(errors));
  return file;
}

ScenarioFile LoadScenarioFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidConfig("(file)", "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseScenarioFile(buffer.str());
}

Json SoilToJson(const SoilModel& soil) {
  Json out = Json::object();
  SoilModel copy = soil;
  JsonWriter w(out);
  VisitSoil(w, copy);
  return out;
}

Json AssumptionsToJson(const Scenario& s) {
  Json a;
  a["hinge_height_front_m"] = s.vehicle.front_spikes.hinge_height_h;
  a["hinge_height_rear_m"] = s.vehicle.rear_spikes.hinge_height_h;
  a["center_of_force_fraction"] = s.soil.center_of_force_fraction;
  a["strict_gamma"] = s.gait.strict_gamma;
  a["resistance_multiplier"] = s.soil.resistance_multiplier;
  a["drag_coefficient"] = s.gait.drag_coefficient;
  a["veer_gain"] = s.gait.veer_gain;
  a["frame1_mass_fraction"] = s.vehicle.frame1_mass_fraction;
  a["drivetrain_efficiency"] = s.vehicle.drivetrain_efficiency;
  a["speed_m_s"] = s.vehicle.speed;
  a["gravity_m_s2"] = s.environment.gravity;
  a["depth_equalizer"] = s.vehicle.depth_equalizer;
  return a;
}

Json StabilityToJson(const StabilityReport& r) {
  Json j;
  j["weight_n"] = r.weight;
  j["pull_weight_ratio"] = r.pull_weight_ratio;
  j["max_gamma_allowed_deg"] = r.max_gamma_allowed_deg;
  j["rollover_tip_angle_deg"] = r.rollover_tip_angle_deg;
  j["pitch_deg"] = r.pitch_deg;
  j["roll_deg"] = r.roll_deg;
  j["rollover_margin_deg"] = r.rollover_margin_deg;
  j["lift_margin_front_n"] = r.lift_margin_front;
  j["lift_margin_rear_n"] = r.lift_margin_rear;
  j["anchor_margin_n"] = r.anchor_margin;
  j["limiting_factor"] = std::string(ToString(r.limiting_factor));
  return j;
}

Json AnalysisReportToJson(const Scenario& scenario, const StabilityReport& report) {
  Json j;
  j["label"] = scenario.label;
  j["assumptions"] = AssumptionsToJson(scenario);
  j["stability"] = StabilityToJson(report);
  return j;
}

Json TrialReportToJson(const Scenario& scenario, const TrialReport& report) {
  Json j;
  j["label"] = scenario.label;
  j["assumptions"] = AssumptionsToJson(scenario);
  j["outcome"] = std::string(ToString(report.outcome));
  j["detail"] = report.detail;
  j["distance_covered_m"] = report.distance_covered;
  j["lateral_offset_m"] = report.lateral_offset;
  j["half_cycles"] = report.half_cycles;
  j["stability"] = StabilityToJson(report.summary);
  Json events = Json::array();
  for (const TrialEvent& e : report.events) events.push_back(EventToJson(e));
  j["events"] = std::move(events);
  return j;
}

std::string Emit(const Json& doc) { return doc.dump(2) + "\n"; }

std::string FormatNumber(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string TrialLogToCsv(const TrialReport& report) {
  std::string out = std::string(kLogHeader) + "\n";
  for (const HalfCycleRecord& rec : report.log) {
    const PhaseBalance& b = rec.balance;
    const double margin = b.lift_margin;
    for (const SpikeState& s : b.spikes) {
      out += std::to_string(rec.cycle);
      out += ',';
      out += ToString(b.phase);
      out += ',';
      out += ToString(s.id);
      for (double v : {s.depth, s.gamma_deg, s.gamma_eff_deg, s.draft_share, s.lift,
                       margin, rec.lateral_offset}) {
        out += ',';
        out += FormatNumber(v);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace interlock
