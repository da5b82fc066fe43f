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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"

namespace interlock {
namespace {

double Expected(std::string_view name) {
  return static_cast<double>(oracle::Case(name).expected);
}
double Tolerance(std::string_view name) {
  return static_cast<double>(oracle::Case(name).tolerance);
}

SoilModel Soil(double mp, double phi, double rho) {
  SoilModel s;
  s.resistance_multiplier = mp;
  s.friction_angle_deg = phi;
  s.bulk_density = rho;
  return s;
}

TEST(PassiveCoefficient, MatchesOracle) {
  EXPECT_NEAR(PassiveCoefficient(30.0), Expected("kp_phi30"), Tolerance("kp_phi30"));
  EXPECT_NEAR(PassiveCoefficient(35.0), Expected("kp_phi35"), Tolerance("kp_phi35"));
  EXPECT_DOUBLE_EQ(PassiveCoefficient(0.0), 1.0);
}

TEST(PassiveCoefficient, RejectsOutOfRange) {
  EXPECT_THROW(PassiveCoefficient(-1.0), DomainError);
  EXPECT_THROW(PassiveCoefficient(60.0), DomainError);
}

TEST(PassiveCoefficient, WorksInExtendedPrecision) {
  EXPECT_NEAR(static_cast<double>(PassiveCoefficient(30.0L)), 3.0, 1e-15);
}

TEST(LateralResistance, MatchesOracle) {
  const Environment env;
  EXPECT_NEAR(LateralResistance(Soil(3.0, 30.0, 1600.0), LargeSpike(), 0.5, env),
              Expected("resistance_mp3_phi30"), Tolerance("resistance_mp3_phi30"));
  EXPECT_NEAR(LateralResistance(Soil(13.2, 35.0, 1600.0), LargeSpike(), 0.5, env),
              Expected("resistance_mp13.2_phi35"), Tolerance("resistance_mp13.2_phi35"));
  EXPECT_EQ(LateralResistance(BeachSand(), LargeSpike(), 0.0, env), 0.0);
}

TEST(LateralResistance, RejectsNegativeDepth) {
  EXPECT_THROW(LateralResistance(BeachSand(), LargeSpike(), -0.1, Environment{}),
               DomainError);
}

TEST(LateralResistance, IsMonotoneAndLinearInParameters) {
  const Environment env;
  const SoilModel soil = BeachSand();
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double f = LateralResistance(soil, LargeSpike(), 0.01 * i, env);
    EXPECT_GT(f, prev);
    prev = f;
  }
  SoilModel doubled = soil;
  doubled.resistance_multiplier *= 2.0;
  doubled.bulk_density *= 1.5;
  EXPECT_NEAR(LateralResistance(doubled, LargeSpike(), 0.3, env),
              3.0 * LateralResistance(soil, LargeSpike(), 0.3, env), 1e-9);
}

TEST(CalibrateMultiplier, MatchesOracle) {
  const Environment earth;
  const Environment moon{kEarthGravity / 6.0};
  EXPECT_NEAR(CalibrateMultiplier(2000.0, 0.5, BeachSand(), LargeSpike(), earth),
              Expected("calibrate_beach"), Tolerance("calibrate_beach"));
  EXPECT_NEAR(CalibrateMultiplier(2000.0, 0.5, BeachSand(), LargeSpike(), moon),
              Expected("calibrate_beach_lunar"), Tolerance("calibrate_beach_lunar"));
}

TEST(CalibrateMultiplier, FixedPoint) {
  const Environment env;
  const SoilModel soil = BeachSand();
  const double f = LateralResistance(soil, LargeSpike(), 0.37, env);
  EXPECT_NEAR(CalibrateMultiplier(f, 0.37, soil, LargeSpike(), env),
              soil.resistance_multiplier, 1e-12);
}

TEST(CalibrateMultiplier, RejectsInfeasibleInputs) {
  const Environment env;
  EXPECT_THROW(CalibrateMultiplier(2000.0, 0.0, BeachSand(), LargeSpike(), env), DomainError);
  EXPECT_THROW(CalibrateMultiplier(0.0, 0.5, BeachSand(), LargeSpike(), env), DomainError);
}

TEST(PenetrationDepth, MatchesOracle) {
  const Environment env;
  const SoilModel soil = Soil(13.2, 35.0, 1600.0);
  const auto big = PenetrationDepth(soil, LargeSpike(), 2007.0, env);
  EXPECT_NEAR(big.depth, Expected("penetration_2007"), Tolerance("penetration_2007"));
  EXPECT_NEAR(big.depth, Expected("grid_penetration_2007"),
              Tolerance("grid_penetration_2007"));

  const auto small = PenetrationDepth(soil, SmallSpike(), 200.0, env);
  EXPECT_EQ(small.depth, Expected("penetration_small_saturated"));
  EXPECT_TRUE(small.saturated);

  const auto over = PenetrationDepth(soil, LargeSpike(), 3000.0, env);
  EXPECT_TRUE(over.saturated);
  EXPECT_EQ(over.depth, LargeSpike().max_depth);

  const auto flat = PenetrationDepth(BeachSand(), LargeSpike(), 750.0, env);
  EXPECT_NEAR(flat.depth, Expected("flat_beach_depth"), Tolerance("flat_beach_depth"));
}

TEST(PenetrationDepth, ZeroDraftGivesZeroDepth) {
  const auto p = PenetrationDepth(BeachSand(), LargeSpike(), 0.0, Environment{});
  EXPECT_EQ(p.depth, 0.0);
  EXPECT_FALSE(p.saturated);
  EXPECT_THROW(PenetrationDepth(BeachSand(), LargeSpike(), -1.0, Environment{}), DomainError);
}

TEST(PenetrationDepth, ExactCapacityCountsAsSaturated) {
  const Environment env;
  const double cap = LateralResistance(BeachSand(), LargeSpike(), 0.5, env);
  EXPECT_TRUE(PenetrationDepth(BeachSand(), LargeSpike(), cap, env).saturated);
}

// Randomized round trip against the independent grid scan.
TEST(PenetrationDepth, RoundTripAgainstGridScan) {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> mp(0.5, 80.0), phi(20.0, 45.0), rho(1200.0, 2100.0),
      g(1.0, 12.0), frac(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const SoilModel soil = Soil(mp(rng), phi(rng), rho(rng));
    const Environment env{g(rng)};
    const SpikeDesign spike = (i % 2) ? LargeSpike() : SmallSpike();
    const double cap = LateralResistance(soil, spike, spike.max_depth, env);
    const double draft = frac(rng) * cap;
    const auto p = PenetrationDepth(soil, spike, draft, env);
    const auto f = [&](oracle::Real d) {
      return oracle::Resistance(soil.resistance_multiplier, soil.friction_angle_deg,
                                soil.bulk_density, env.gravity, spike.diameter_B, d);
    };
    const auto scan = oracle::ScanPenetration(f, spike.max_depth, draft);
    EXPECT_NEAR(p.depth, static_cast<double>(scan.depth), kDepthTolerance) << i;
    EXPECT_EQ(p.saturated, scan.saturated) << i;
    EXPECT_NEAR(LateralResistance(soil, spike, p.depth, env), draft, 1e-9 * cap) << i;
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

TEST(SolvePenetration, BisectionAgreesWithClosedForm) {
  const auto model = MakeResistance(BeachSand(), LargeSpike(), Environment{});
  for (double draft : {1.0, 50.0, 750.0, 1500.0, 1999.0}) {
    const auto closed = SolvePenetration(model, 0.5, draft);
    const auto bisect = SolvePenetrationBisection(model, 0.5, draft);
    EXPECT_NEAR(closed.depth, bisect.depth, 1e-8) << draft;
    EXPECT_EQ(closed.saturated, bisect.saturated);
  }
}

// A monotone model without a closed-form inverse goes through bisection.
TEST(SolvePenetration, AcceptsAnyMonotoneModel) {
  const auto cubic = [](double d) { return 1000.0 * d * d * d + 10.0 * d; };
  const auto p = SolvePenetration(cubic, 0.5, 100.0);
  EXPECT_NEAR(cubic(p.depth), 100.0, 1e-6);
  EXPECT_FALSE(p.saturated);
}

TEST(PenetrationDepth, GravityScalesAsInverseSquareRoot) {
  const SoilModel soil = BeachSand();
  for (double draft : {50.0, 150.0, 300.0}) {
    const double earth = PenetrationDepth(soil, LargeSpike(), draft, Environment{9.81}).depth;
    const double moon =
        PenetrationDepth(soil, LargeSpike(), draft, Environment{9.81 / 6.0}).depth;
    EXPECT_NEAR(moon / earth, std::sqrt(6.0), 1e-6 * std::sqrt(6.0)) << draft;
  }
}

}  // namespace
}  // namespace interlock
