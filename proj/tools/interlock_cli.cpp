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

// Command-line front end for the interlock-drive crawler simulator.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "interlock/commands.hpp"

int main(int argc, char** argv) {
  using namespace interlock;

  CLI::App app{"Quasi-static simulator for a push-pull crawler with interlock spikes"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Static stability margins of a scenario");
  analyze_cmd->add_option("scenario", analyze.scenario_path, "Scenario JSON file")->required();
  analyze_cmd->add_option("--draft", analyze.blade_draft_demand, "Blade draft demand override, N");
  analyze_cmd->add_option("--out", analyze.out_path, "Write the report to this file");

  SimulateOptions simulate;
  std::string equalizer;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run the gait state machine");
  simulate_cmd->add_option("scenario", simulate.scenario_path, "Scenario JSON file")->required();
  simulate_cmd->add_option("--max-cycles", simulate.max_cycles, "Full push-pull cycles allowed")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--equalizer", equalizer, "Depth equalizer override")
      ->check(CLI::IsMember({"on", "off"}));
  simulate_cmd->add_flag("--strict-gamma", simulate.strict_gamma,
                         "Compute hinge lift from the tip thrust angle");
  simulate_cmd->add_option("--out", simulate.out_dir,
                           "Output directory (default: next to the scenario)");

  SuiteOptions suite;
  auto* suite_cmd = app.add_subcommand("suite", "Run the bundled field-trial suite");
  suite_cmd->add_option("--cf", suite.center_of_force_fraction,
                        "Center-of-force fraction override");
  suite_cmd->add_option("--gravity", suite.gravity, "Gravity override, m/s^2");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter over a range");
  sweep_cmd->add_option("scenario", sweep.scenario_path, "Scenario JSON file")->required();
  sweep_cmd->add_option("--param", sweep.param,
                        "slope_deg, blade_draft_demand, gravity_g, cf, hinge_height_h or mass")
      ->required();
  sweep_cmd->add_option("--from", sweep.from, "First value")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of intervals")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--out", sweep.out_path, "Also write the table to this CSV file");

  CalibrateOptions calibrate;
  auto* calibrate_cmd =
      app.add_subcommand("calibrate", "Solve the soil multiplier for a target capacity");
  calibrate_cmd->add_option("--target-force", calibrate.target_force, "Force, N")->required();
  calibrate_cmd->add_option("--depth", calibrate.depth, "Depth, m")->required();
  calibrate_cmd->add_option("--soil", calibrate.soil, "Soil preset");
  calibrate_cmd->add_option("--spike", calibrate.spike, "large or small");
  calibrate_cmd->add_option("--out", calibrate.out_path, "Write the soil document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  if (*analyze_cmd) return CmdAnalyze(analyze, std::cout, std::cerr);
  if (*simulate_cmd) {
    if (!equalizer.empty()) simulate.equalizer = equalizer == "on";
    return CmdSimulate(simulate, std::cout, std::cerr);
  }
  if (*suite_cmd) return CmdSuite(suite, std::cout, std::cerr);
  if (*sweep_cmd) return CmdSweep(sweep, std::cout, std::cerr);
  return CmdCalibrate(calibrate, std::cout, std::cerr);
}
