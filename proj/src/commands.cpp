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

#include "interlock/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "interlock/gait.hpp"
#include "interlock/serialization.hpp"
#include "interlock/soil.hpp"
#include "interlock/stability.hpp"
#include "interlock/suite.hpp"

namespace interlock {

namespace fs = std::filesystem;

namespace {

void WriteFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << text;
}

void ReportInvalid(std::ostream& err, const InvalidConfig& e) {
  err << "error: invalid input\n";
  for (const FieldError& f : e.errors()) {
    err << "  " << f.field << ": " << f.message << "\n";
  }
}

// Runs `body`, mapping input problems to exit code 2.
template <typename Fn>
int Guard(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const InvalidConfig& e) {
    ReportInvalid(err, e);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalidInput;
}

std::string Summary(const Scenario& s, const TrialReport& r) {
  std::map<std::string, int> counts;
  for (const TrialEvent& e : r.events) ++counts[std::string(ToString(e.kind))];
  std::ostringstream out;
  out << "scenario: " << s.label << "\n"
      << "outcome: " << ToString(r.outcome) << "\n"
      << "detail: " << r.detail << "\n"
      << "distance_covered_m: " << FormatNumber(r.distance_covered) << "\n"
      << "lateral_offset_m: " << FormatNumber(r.lateral_offset) << "\n"
      << "half_cycles: " << r.half_cycles << "\n"
      << "pull_weight_ratio: " << FormatNumber(r.summary.pull_weight_ratio) << "\n"
      << "limiting_factor: " << ToString(r.summary.limiting_factor) << "\n";
  for (const auto& [kind, n] : counts) out << "events." << kind << ": " << n << "\n";
  return out.str();
}

double PairDepth(const Scenario& s, Phase phase) {
  GaitState state;
  state.phase = phase;
  return PhaseForceBalance(state, s).spikes[0].depth;
}

std::string BlockingEventName(const TrialReport& r) {
  if (r.outcome != Outcome::kBlockedByLift) return "";
  for (auto it = r.events.rbegin(); it != r.events.rend(); ++it) {
    if (it->kind == EventKind::kLiftOffFront || it->kind == EventKind::kLiftOffRear) {
      return std::string(ToString(it->kind));
    }
  }
  return "";
}

}  // namespace

const std::vector<std::string>& SweepableParams() {
  static const std::vector<std::string> kParams = {
      "slope_deg", "blade_draft_demand", "gravity_g", "cf", "hinge_height_h", "mass"};
  return kParams;
}

Scenario WithParam(Scenario s, const std::string& param, double value) {
  if (param == "slope_deg") {
    // The attitude follows the slope, so measured overrides no longer apply.
    s.terrain.slope_deg = value;
    s.terrain.pitch_override_deg.reset();
    s.terrain.roll_override_deg.reset();
  } else if (param == "blade_draft_demand") {
    s.blade_draft_demand = value;
  } else if (param == "gravity_g") {
    s.environment.gravity = value;
  } else if (param == "cf") {
    s.soil.center_of_force_fraction = value;
  } else if (param == "hinge_height_h") {
    s.vehicle.front_spikes.hinge_height_h = value;
    s.vehicle.rear_spikes.hinge_height_h = value;
  } else if (param == "mass") {
    s.vehicle.mass = value;
  } else {
    throw std::invalid_argument("unknown sweep parameter '" + param + "'");
  }
  return s;
}

std::vector<double> SweepValues(double from, double to, int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    values.push_back(steps == 0 ? from : from + (to - from) * i / steps);
  }
  return values;
}

int CmdAnalyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    Scenario s = LoadScenarioFile(o.scenario_path).scenario;
    if (o.blade_draft_demand) s.blade_draft_demand = *o.blade_draft_demand;
    const StabilityReport report = AnalyzeStability(s);
    const std::string text = Emit(AnalysisReportToJson(s, report));
    if (!o.out_path.empty()) WriteFile(o.out_path, text);
    out << text;
    return kExitOk;
  });
}

int CmdSimulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    ScenarioFile file = LoadScenarioFile(o.scenario_path);
    Scenario& s = file.scenario;
    if (o.equalizer) s.vehicle.depth_equalizer = *o.equalizer;
    if (o.strict_gamma) s.gait.strict_gamma = true;
    const TrialReport report = RunScenario(s, o.max_cycles);

    const fs::path input(o.scenario_path);
    const fs::path dir = o.out_dir.empty() ? input.parent_path() : fs::path(o.out_dir);
    const std::string stem = input.stem().string();
    const std::string summary = Summary(s, report);
    WriteFile(dir / (stem + ".report.json"), Emit(TrialReportToJson(s, report)));
    WriteFile(dir / (stem + ".log.csv"), TrialLogToCsv(report));
    WriteFile(dir / (stem + ".summary.txt"), summary);
    out << summary;

    if (file.expected_outcome && *file.expected_outcome != report.outcome) {
      err << "expected " << ToString(*file.expected_outcome) << ", simulated "
          << ToString(report.outcome) << "\n";
      return kExitMismatch;
    }
    return kExitOk;
  });
}

int CmdSuite(const SuiteOptions& o, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const SuiteOverrides overrides{o.center_of_force_fraction, o.gravity};
    const std::vector<SuiteRow> rows = RunSuite(BundledSuite(), overrides, o.max_cycles);
    out << FormatSuiteTable(rows);
    const bool all = std::all_of(rows.begin(), rows.end(),
                                 [](const SuiteRow& r) { return r.match; });
    return all ? kExitOk : kExitMismatch;
  });
}

int CmdSweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const auto& params = SweepableParams();
    if (std::find(params.begin(), params.end(), o.param) == params.end()) {
      throw std::invalid_argument("unknown sweep parameter '" + o.param + "'");
    }
    const Scenario base = LoadScenarioFile(o.scenario_path).scenario;
    const std::vector<double> values = SweepValues(o.from, o.to, o.steps);

    std::vector<Scenario> scenarios;
    for (double v : values) scenarios.push_back(Validate(WithParam(base, o.param, v)));

    // Independent runs; results are gathered strictly in input order.
    std::vector<std::future<std::string>> rows;
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
      rows.push_back(std::async(std::launch::async, [&, i] {
        const Scenario& s = scenarios[i];
        const TrialReport r = RunScenario(s, o.max_cycles);
        std::string row = FormatNumber(values[i]);
        row += "," + std::string(ToString(r.outcome)) + "," + BlockingEventName(r);
        for (double v : {r.distance_covered, r.lateral_offset}) row += "," + FormatNumber(v);
        row += "," + std::to_string(r.half_cycles);
        for (double v : {r.summary.pull_weight_ratio, r.summary.lift_margin_front,
                         r.summary.lift_margin_rear, r.summary.anchor_margin,
                         r.summary.rollover_margin_deg,
                         PairDepth(s, Phase::kPushBlade),
                         PairDepth(s, Phase::kPullFrame)}) {
          row += "," + FormatNumber(v);
        }
        return row + "\n";
      }));
    }
    std::string table = o.param +
                        ",outcome,blocking_event,distance_covered_m,lateral_offset_m,"
                        "half_cycles,pull_weight_ratio,lift_margin_front_N,"
                        "lift_margin_rear_N,anchor_margin_N,rollover_margin_deg,"
                        "push_depth_m,pull_depth_m\n";
    for (auto& row : rows) table += row.get();
    if (!o.out_path.empty()) WriteFile(o.out_path, table);
    out << table;
    return kExitOk;
  });
}

int CmdCalibrate(const CalibrateOptions& o, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const std::optional<SoilModel> preset = SoilPreset(o.soil);
    if (!preset) throw InvalidConfig("soil", "unknown preset '" + o.soil + "'");
    SpikeDesign spike;
    if (o.spike == "large") {
      spike = LargeSpike();
    } else if (o.spike == "small") {
      spike = SmallSpike();
    } else {
      throw InvalidConfig("spike", "expected large or small");
    }
    std::vector<FieldError> errors;
    if (!(o.target_force > 0.0)) errors.push_back({"target_force", "must be > 0"});
    if (!(o.depth > 0.0 && o.depth <= spike.max_depth)) {
      errors.push_back({"depth", "must lie in (0, max_depth]"});
    }
    if (!errors.empty()) throw InvalidConfig(std::move(errors));

    SoilModel soil = *preset;
    soil.resistance_multiplier =
        CalibrateMultiplier(o.target_force, o.depth, soil, spike, Environment{});
    const std::string text = Emit(SoilToJson(soil));
    if (!o.out_path.empty()) WriteFile(o.out_path, text);
    out << text;
    return kExitOk;
  });
}

}  // namespace interlock
