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

TEST(ThrustAngle, MatchesOracle) {
  EXPECT_NEAR(ThrustAngle(LargeSpike(), 0.5, 0.0), Expected("tip_angle_large"),
              Tolerance("tip_angle_large"));
  EXPECT_NEAR(ThrustAngle(SmallSpike(), 0.15, 0.0), Expected("tip_angle_small"),
              Tolerance("tip_angle_small"));
  EXPECT_EQ(ThrustAngle(LargeSpike(), 0.0, 0.0), 0.0);
}

TEST(EffectiveThrustAngle, MatchesOracle) {
  EXPECT_NEAR(EffectiveThrustAngle(LargeSpike(), 0.5, 0.0, 2.0 / 3.0),
              Expected("effective_angle_large"), Tolerance("effective_angle_large"));
  EXPECT_NEAR(EffectiveThrustAngle(SmallSpike(), 0.15, 0.0, 2.0 / 3.0),
              Expected("effective_angle_small"), Tolerance("effective_angle_small"));
  EXPECT_NEAR(EffectiveThrustAngle(LargeSpike(), 0.5, 0.0, 2.0 / 3.0),
              Expected("trig_extended_effective"), Tolerance("trig_extended_effective"));
  EXPECT_NEAR(EffectiveThrustAngle(LargeSpike(), 0.3062, 0.0, 2.0 / 3.0),
              Expected("flat_beach_effective_angle"),
              Tolerance("flat_beach_effective_angle"));
}

TEST(EffectiveThrustAngle, StrictFractionEqualsTipAngle) {
  for (double d : {0.0, 0.1, 0.25, 0.5}) {
    EXPECT_DOUBLE_EQ(EffectiveThrustAngle(LargeSpike(), d, 0.05, 1.0),
                     ThrustAngle(LargeSpike(), d, 0.05));
  }
}

TEST(EffectiveThrustAngle, NeverExceedsTipAngle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> depth(0.0, 0.5), cf(0.05, 1.0), h(0.0, 0.3);
  for (int i = 0; i < 1000; ++i) {
    const double d = depth(rng);
    const double hh = h(rng);
    const double c = cf(rng);
    EXPECT_LE(EffectiveThrustAngle(1.35, hh, d, 0.0, c), ThrustAngle(1.35, hh, d, 0.0) + 1e-12);
  }
}

TEST(ThrustAngle, MonotoneInDepthAndHingeHeight) {
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double g = ThrustAngle(1.35, 0.0, 0.01 * i, 0.0);
    EXPECT_GT(g, prev);
    prev = g;
  }
  EXPECT_GT(ThrustAngle(1.35, 0.1, 0.3, 0.0), ThrustAngle(1.35, 0.0, 0.3, 0.0));
}

TEST(ThrustAngle, RejectsUnreachableGeometry) {
  EXPECT_THROW(ThrustAngle(1.35, 0.0, 1.35, 0.0), DomainError);
  EXPECT_THROW(ThrustAngle(1.35, 0.0, 0.1, -0.2), DomainError);
  EXPECT_THROW(EffectiveThrustAngle(1.35, 0.0, 0.3, 0.0, 0.0), DomainError);
  EXPECT_THROW(EffectiveThrustAngle(1.35, 0.0, 0.3, 0.0, 1.5), DomainError);
}

TEST(PenetrationWindow, MatchesOracle) {
  EXPECT_EQ(static_cast<int>(PenetrationWindow(45.0, 20.0)), Expected("window_in"));
  EXPECT_EQ(PenetrationWindow(45.0, 20.0), WindowStatus::kInWindow);
  EXPECT_EQ(PenetrationWindow(50.0, 10.0), WindowStatus::kTooSteepAngle);
  EXPECT_EQ(static_cast<int>(PenetrationWindow(50.0, 10.0)), Expected("window_too_steep"));
}

TEST(PenetrationWindow, BoundsAreExclusive) {
  EXPECT_EQ(PenetrationWindow(40.0, 25.0), WindowStatus::kTooShallowAngle);
  EXPECT_EQ(PenetrationWindow(40.0, 5.0), WindowStatus::kTooSteepAngle);
  EXPECT_EQ(PenetrationWindow(40.0, 24.999), WindowStatus::kInWindow);
  EXPECT_EQ(PenetrationWindow(40.0, 5.001), WindowStatus::kInWindow);
}

TEST(LiftForce, MatchesOracle) {
  EXPECT_NEAR(LiftForce(784.8, 26.565), Expected("lift_two_weights"),
              Tolerance("lift_two_weights"));
  EXPECT_NEAR(LiftForce(2500.0, 25.0), Expected("lift_2500_at_25"),
              Tolerance("lift_2500_at_25"));
  EXPECT_NEAR(LiftForce(2000.0, 9.86), Expected("lift_effective_2000"),
              Tolerance("lift_effective_2000"));
  EXPECT_EQ(LiftForce(1500.0, 0.0), 0.0);
}

TEST(LiftForce, LinearInDraft) {
  for (double g : {3.0, 14.0, 25.0, 60.0}) {
    EXPECT_NEAR(LiftForce(3000.0, g), 2.0 * LiftForce(1500.0, g), 1e-9);
  }
}

TEST(LiftForce, RejectsBadInputs) {
  EXPECT_THROW(LiftForce(100.0, 90.0), DomainError);
  EXPECT_THROW(LiftForce(100.0, -1.0), DomainError);
  EXPECT_THROW(LiftForce(-1.0, 10.0), DomainError);
}

}  // namespace
}  // namespace interlock
