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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "interlock/gait.hpp"
#include "interlock/serialization.hpp"
#include "interlock/soil.hpp"

namespace interlock {
namespace {

namespace fs = std::filesystem;

const std::string kScenarios = std::string(INTERLOCK_SOURCE_DIR) + "/scenarios/";

std::string Scenario(const std::string& name) { return kScenarios + name + ".json"; }

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("interlock_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string WriteText(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int RunCli(const std::string& args) {
  const std::string cmd = std::string(INTERLOCK_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream l(line);
    std::string cell;
    while (std::getline(l, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

TEST(Analyze, PaperVehicle) {
  std::ostringstream out, err;
  ASSERT_EQ(CmdAnalyze({Scenario("default"), std::nullopt, ""}, out, err), kExitOk);
  const Json j = Json::parse(out.str());
  EXPECT_NEAR(j["stability"]["pull_weight_ratio"].get<double>(), 3.82, 0.005);
  EXPECT_NEAR(j["stability"]["max_gamma_allowed_deg"].get<double>(), 14.65, 0.02);
}

TEST(Analyze, DraftOverride) {
  std::ostringstream out, err;
  ASSERT_EQ(CmdAnalyze({Scenario("default"), 784.8, ""}, out, err), kExitOk);
  EXPECT_NEAR(Json::parse(out.str())["stability"]["max_gamma_allowed_deg"].get<double>(),
              26.57, 0.01);
}

TEST(Analyze, MissingFileIsInvalidInput) {
  std::ostringstream out, err;
  EXPECT_EQ(CmdAnalyze({"/nonexistent.json", std::nullopt, ""}, out, err), kExitInvalidInput);
  EXPECT_FALSE(err.str().empty());
}

TEST(Simulate, WritesArtifacts) {
  const fs::path dir = TempDir("simulate");
  std::ostringstream out, err;
  SimulateOptions o;
  o.scenario_path = Scenario("beach_contour_12");
  o.out_dir = (dir / "nested").string();
  ASSERT_EQ(CmdSimulate(o, out, err), kExitOk) << err.str();
  const std::string report = ReadText(dir / "nested" / "beach_contour_12.report.json");
  EXPECT_EQ(Json::parse(report)["outcome"], "PATH_CLEARED");
  EXPECT_EQ(Emit(Json::parse(report)), report);
  const auto log = ParseCsv(ReadText(dir / "nested" / "beach_contour_12.log.csv"));
  EXPECT_EQ(static_cast<int>(log.size()) - 1,
            2 * Json::parse(report)["half_cycles"].get<int>());
  EXPECT_NE(out.str().find("outcome: PATH_CLEARED"), std::string::npos);
}

TEST(Simulate, ExpectationMatchesAndMismatches) {
  const fs::path dir = TempDir("expect");
  std::ostringstream out, err;
  SimulateOptions o;
  o.scenario_path = Scenario("quarry_coarse_30_contour");
  o.out_dir = dir.string();
  EXPECT_EQ(CmdSimulate(o, out, err), kExitOk);

  Json doc = Json::parse(ReadText(Scenario("beach_flat")));
  doc["expected_outcome"] = "VEERED_OFF";
  o.scenario_path = WriteText(dir / "wrong.json", Emit(doc));
  EXPECT_EQ(CmdSimulate(o, out, err), kExitMismatch);
}

TEST(Simulate, EqualizerFlagClearsUnevenUphill) {
  const fs::path dir = TempDir("equalizer");
  std::ostringstream out, err;
  SimulateOptions o;
  o.scenario_path = Scenario("quarry_fine_20_uphill_uneven_2.5kN");
  o.out_dir = dir.string();
  EXPECT_EQ(CmdSimulate(o, out, err), kExitOk);
  o.equalizer = true;
  // The file still expects a lift-off block, so the cleared run mismatches.
  EXPECT_EQ(CmdSimulate(o, out, err), kExitMismatch);
  const Json r = Json::parse(ReadText(dir / "quarry_fine_20_uphill_uneven_2.5kN.report.json"));
  EXPECT_EQ(r["outcome"], "PATH_CLEARED");
  EXPECT_EQ(r["assumptions"]["depth_equalizer"], true);
}

TEST(Simulate, MalformedDocumentIsInvalidInput) {
  const fs::path dir = TempDir("malformed");
  std::ostringstream out, err;
  SimulateOptions o;
  o.scenario_path = WriteText(dir / "bad.json", "{\"schema_version\": 1, ");
  EXPECT_EQ(CmdSimulate(o, out, err), kExitInvalidInput);
  o.scenario_path = WriteText(dir / "unknown.json", "{\"schema_version\": 1, \"x\": 0}");
  EXPECT_EQ(CmdSimulate(o, out, err), kExitInvalidInput);
  EXPECT_NE(err.str().find("x: unknown field"), std::string::npos);
}

TEST(Suite, DefaultAllMatch) {
  std::ostringstream out, err;
  EXPECT_EQ(CmdSuite({}, out, err), kExitOk);
  EXPECT_NE(out.str().find("matches: 9/9"), std::string::npos);
  std::ostringstream again;
  CmdSuite({}, again, err);
  EXPECT_EQ(out.str(), again.str());
}

TEST(Suite, StrictCenterOfForceMismatches) {
  std::ostringstream out, err;
  SuiteOptions o;
  o.center_of_force_fraction = 1.0;
  EXPECT_EQ(CmdSuite(o, out, err), kExitMismatch);
}

TEST(Suite, InvalidOverrideIsInvalidInput) {
  std::ostringstream out, err;
  SuiteOptions o;
  o.center_of_force_fraction = 0.0;
  EXPECT_EQ(CmdSuite(o, out, err), kExitInvalidInput);
}

TEST(Sweep, RowsInInputOrder) {
  std::ostringstream out, err;
  SweepOptions o{Scenario("default"), "blade_draft_demand", 0.0, 1800.0, 6, 100, ""};
  ASSERT_EQ(CmdSweep(o, out, err), kExitOk) << err.str();
  const auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0][0], "blade_draft_demand");
  for (int i = 0; i <= 6; ++i) EXPECT_DOUBLE_EQ(std::stod(rows[i + 1][0]), 300.0 * i);
}

TEST(Sweep, SlopeDegradesMonotonically) {
  std::ostringstream out, err;
  SweepOptions o{Scenario("beach_contour_12"), "slope_deg", 0.0, 45.0, 45, 100, ""};
  ASSERT_EQ(CmdSweep(o, out, err), kExitOk);
  const auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows.size(), 47u);
  bool failed = false;
  double distance = 1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool cleared = rows[i][1] == "PATH_CLEARED";
    EXPECT_FALSE(failed && cleared) << rows[i][0];
    failed = failed || !cleared;
    EXPECT_LE(std::stod(rows[i][3]), distance) << rows[i][0];
    distance = std::stod(rows[i][3]);
  }
}

TEST(Sweep, DepthGrowsAsInverseSquareRootOfGravity) {
  // A light draft keeps the rear spikes below saturation even at g/6.
  const fs::path dir = TempDir("gravity");
  Json doc = Json::parse(ReadText(Scenario("default")));
  doc["scenario"]["blade_draft_demand_n"] = 200.0;
  const std::string path = WriteText(dir / "light.json", Emit(doc));
  std::ostringstream out, err;
  SweepOptions o{path, "gravity_g", 9.81, 1.62, 4, 100, ""};
  ASSERT_EQ(CmdSweep(o, out, err), kExitOk);
  const auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows[0][11], "push_depth_m");
  const double g0 = std::stod(rows[1][0]);
  const double d0 = std::stod(rows[1][11]);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const double g = std::stod(rows[i][0]);
    EXPECT_NEAR(std::stod(rows[i][11]) / d0, std::sqrt(g0 / g), 1e-6) << g;
  }
}

TEST(Sweep, ZeroStepsMatchesSimulate) {
  std::ostringstream out, err;
  SweepOptions o{Scenario("beach_contour_12"), "mass", 40.0, 99.0, 0, 100, ""};
  ASSERT_EQ(CmdSweep(o, out, err), kExitOk);
  const auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][1], "PATH_CLEARED");
  const TrialReport r = RunScenario(LoadScenarioFile(Scenario("beach_contour_12")).scenario);
  EXPECT_EQ(std::stod(rows[1][4]), r.lateral_offset);
}

TEST(Sweep, UnknownParameterIsInvalidInput) {
  std::ostringstream out, err;
  SweepOptions o{Scenario("default"), "colour", 0.0, 1.0, 2, 100, ""};
  EXPECT_EQ(CmdSweep(o, out, err), kExitInvalidInput);
}

TEST(Calibrate, BeachTwoKilonewtonsAtHalfMetre) {
  std::ostringstream out, err;
  ASSERT_EQ(CmdCalibrate({2000.0, 0.5, "beach_sand", "large", ""}, out, err), kExitOk);
  EXPECT_NEAR(Json::parse(out.str())["resistance_multiplier"].get<double>(), 13.15, 0.005);
}

TEST(Calibrate, FixedPointLeavesMultiplierUnchanged) {
  const double f =
      LateralResistance(BeachSand(), LargeSpike(), 0.5, Environment{});
  std::ostringstream out, err;
  ASSERT_EQ(CmdCalibrate({f, 0.5, "beach_sand", "large", ""}, out, err), kExitOk);
  EXPECT_NEAR(Json::parse(out.str())["resistance_multiplier"].get<double>(),
              BeachSand().resistance_multiplier, 1e-12);
}

TEST(Calibrate, InfeasibleInputs) {
  std::ostringstream out, err;
  EXPECT_EQ(CmdCalibrate({2000.0, 0.0, "beach_sand", "large", ""}, out, err), kExitInvalidInput);
  EXPECT_EQ(CmdCalibrate({2000.0, 0.6, "beach_sand", "large", ""}, out, err), kExitInvalidInput);
  EXPECT_EQ(CmdCalibrate({-5.0, 0.5, "beach_sand", "large", ""}, out, err), kExitInvalidInput);
  EXPECT_EQ(CmdCalibrate({2000.0, 0.5, "clay", "large", ""}, out, err), kExitInvalidInput);
}

TEST(Cli, ExitCodeContract) {
  const fs::path dir = TempDir("cli");
  EXPECT_EQ(RunCli("analyze " + Scenario("default")), 0);
  EXPECT_EQ(RunCli("analyze /nonexistent.json"), 2);
  EXPECT_EQ(RunCli("simulate " + Scenario("quarry_coarse_30_contour") + " --out " +
                   dir.string()),
            0);
  EXPECT_EQ(RunCli("simulate " + Scenario("quarry_fine_20_uphill_uneven_equalizer") +
                   " --equalizer off --out " + dir.string()),
            1);
  EXPECT_EQ(RunCli("simulate " + Scenario("default") + " --equalizer maybe"), 2);
  EXPECT_EQ(RunCli("suite"), 0);
  EXPECT_EQ(RunCli("suite --cf 1"), 1);
  EXPECT_EQ(RunCli("sweep " + Scenario("default") + " --param colour --from 0 --to 1"), 2);
  EXPECT_EQ(RunCli("calibrate --target-force 2000 --depth 0"), 2);
  EXPECT_EQ(RunCli("calibrate --target-force 2000 --depth 0.5"), 0);
  EXPECT_EQ(RunCli("frobnicate"), 2);
  EXPECT_EQ(RunCli(""), 2);
  EXPECT_EQ(RunCli("--help"), 0);
}

}  // namespace
}  // namespace interlock
