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

// Writes every bundled suite member as a scenario file, plus the uneven
// uphill variants used for the equalizer study.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "interlock/serialization.hpp"
#include "interlock/suite.hpp"

namespace {

void Write(const std::filesystem::path& dir, const interlock::ScenarioFile& file) {
  const auto path = dir / (file.scenario.label + ".json");
  std::ofstream out(path, std::ios::binary);
  out << interlock::Emit(interlock::ScenarioFileToJson(file));
  std::cout << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace interlock;
  const std::filesystem::path dir = argc > 1 ? argv[1] : "scenarios";
  std::filesystem::create_directories(dir);
  for (const SuiteGroup& g : BundledSuite()) {
    for (const Scenario& s : g.members) Write(dir, {kSchemaVersion, s, g.expected_outcome});
  }
  Scenario uneven_2kn = QuarryFineUphillUneven(2000.0);
  uneven_2kn.label = "quarry_fine_20_uphill_uneven_2kN";
  Write(dir, {kSchemaVersion, uneven_2kn, std::nullopt});
  Scenario equalized = QuarryFineUphillUneven(2500.0);
  equalized.label = "quarry_fine_20_uphill_uneven_equalizer";
  equalized.vehicle.depth_equalizer = true;
  Write(dir, {kSchemaVersion, equalized, Outcome::kPathCleared});
  Write(dir, {kSchemaVersion, DefaultScenario(), std::nullopt});
  return 0;
}
