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

#ifndef INTERLOCK_COMMANDS_HPP_
#define INTERLOCK_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "interlock/core_model.hpp"

namespace interlock {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalidInput = 2;

struct AnalyzeOptions {
  std::string scenario_path;
  std::optional<double> blade_draft_demand;  // replaces the file's value
  std::string out_path;                      // optional report file
};

struct SimulateOptions {
  std::string scenario_path;
  int max_cycles = 100;
  std::optional<bool> equalizer;
  bool strict_gamma = false;
  std::string out_dir;  // defaults to the scenario file's directory
};

struct SuiteOptions {
  std::optional<double> center_of_force_fraction;
  std::optional<double> gravity;
  int max_cycles = 100;
};

struct SweepOptions {
  std::string scenario_path;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  int max_cycles = 100;
  std::string out_path;  // optional CSV file; the table always goes to out
};

struct CalibrateOptions {
  double target_force = 0.0;
  double depth = 0.0;
  std::string soil = "beach_sand";
  std::string spike = "large";
  std::string out_path;
};

int CmdAnalyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int CmdSimulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int CmdSuite(const SuiteOptions& options, std::ostream& out, std::ostream& err);
int CmdSweep(const SweepOptions& options, std::ostream& out, std::ostream& err);
int CmdCalibrate(const CalibrateOptions& options, std::ostream& out, std::ostream& err);

/// Parameters accepted by the sweep command.
const std::vector<std::string>& SweepableParams();

/// Copy of `scenario` with one sweepable parameter set. Throws
/// std::invalid_argument for an unknown name.
Scenario WithParam(Scenario scenario, const std::string& param, double value);

/// Evenly spaced values from `from` to `to`, steps + 1 of them.
std::vector<double> SweepValues(double from, double to, int steps);

}  // namespace interlock

#endif  // INTERLOCK_COMMANDS_HPP_
