// Copyright 2026 The fringesteer Authors
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

#include "fringe/steering.hpp"

#include <cmath>

#include "fringe/errors.hpp"
#include "gtest/gtest.h"

namespace fringe {
namespace {

TEST(SteeringSpec, Validation) {
  SteeringSpec s;
  EXPECT_NO_THROW(s.validate());
  s.theta_target = 0.2;  // outside the default grid
  EXPECT_THROW(s.validate(), ConfigError);
  s = {};
  s.peak_tolerance = 0.0;
  EXPECT_THROW(s.validate(), ConfigError);
  s = {};
  s.theta_target = 2.0;
  EXPECT_THROW(s.validate(), ConfigError);
}

TEST(RunSteering, DefaultSpec) {
  const SteeringSpec spec;
  const auto r = run_steering(spec);
  EXPECT_TRUE(r.success);
  EXPECT_NEAR(r.peak_angle, 0.04, 1e-3);
  EXPECT_NEAR(std::abs(r.delta_phi), kPi, 0.15);
  EXPECT_LE(r.history.records.size(), 200u);
  ASSERT_EQ(r.final_pattern.channel_count(), 1u);
  EXPECT_EQ(r.final_pattern.grid.size(), 2001u);
  EXPECT_LE(distance_to_optimal_phase(r.delta_phi, spec.geom, spec.theta_target), 0.15);
}

TEST(RunSteering, SuccessMatchesPeakTolerance) {
  SteeringSpec spec;
  spec.adam.max_epochs = 3;  // nowhere near the target yet
  const auto r = run_steering(spec);
  EXPECT_EQ(r.success, std::abs(r.peak_angle - spec.theta_target) <= spec.peak_tolerance);
  EXPECT_FALSE(r.success);
}

TEST(RunSteering, OnAxisTargetAlreadyAligned) {
  SteeringSpec spec;
  spec.theta_target = 0.0;
  spec.init = {1.6708, 0.0, 1.6708, 0.0};
  const auto r = run_steering(spec);
  EXPECT_TRUE(r.success);
  EXPECT_NEAR(r.peak_angle, 0.0, 1e-4);
  EXPECT_EQ(r.delta_phi, 0.0);
}

TEST(RunSteering, MirrorSymmetry) {
  SteeringSpec plus;
  SteeringSpec minus;
  minus.theta_target = -0.04;
  minus.init = {1.6708, -0.1, 1.6708, 0.1};
  const auto a = run_steering(plus);
  const auto b = run_steering(minus);
  EXPECT_TRUE(b.success);
  EXPECT_NEAR(b.delta_phi, -a.delta_phi, 1e-6);
  EXPECT_NEAR(b.peak_angle, -a.peak_angle, 1e-6);
}

TEST(RunSteering, PeakInsideEnvelope) {
  const SteeringSpec spec;
  const auto r = run_steering(spec);
  const QubitParams& p = r.history.final_params;
  const double bound =
      2.0 * source_scalar_intensity(p) * sinc_envelope(beta(spec.geom, r.peak_angle));
  EXPECT_LE(steering_intensity_at(spec.geom, p, r.peak_angle), bound + 1e-9);
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double env = 2.0 * source_scalar_intensity(p) * sinc_envelope(beta(spec.geom, spec.grid[i]));
    ASSERT_LE(r.final_pattern.channels[0][i], env + 1e-9);
  }
}

TEST(AnalyticOptimalPhase, Values) {
  const SlitGeometry g = SlitGeometry::steering_default();
  EXPECT_EQ(analytic_optimal_phase(g, 0.0).principal, 0.0);

  const auto at04 = analytic_optimal_phase(g, 0.04);
  EXPECT_NEAR(at04.principal, -3.14075496256692613, 1e-13);
  EXPECT_NEAR(std::abs(at04.principal), kPi, 1e-3);
  ASSERT_EQ(at04.lattice.size(), 5u);
  EXPECT_NEAR(at04.lattice[3] - at04.lattice[2], 2.0 * kPi, 1e-14);

  const SlitGeometry half{2.0, 6.25, 2, 1.0};
  EXPECT_NEAR(analytic_optimal_phase(half, 0.04).principal, -1.57037748128346306, 1e-13);

  EXPECT_THROW(analytic_optimal_phase({2.0, 12.5, 3, 1.0}, 0.04), UnsupportedModelError);
}

TEST(AnalyticOptimalPhase, MaximizesTargetIntensity) {
  const SlitGeometry g = SlitGeometry::steering_default();
  for (double t : {-0.07, -0.02, 0.013, 0.04, 0.09}) {
    const double opt = analytic_optimal_phase(g, t).principal;
    const QubitParams best{2.0, 0.0, 2.0, opt};
    const double e_best = steering_intensity_at(g, best, t);
    for (double off : {-0.3, -0.05, 0.05, 0.3}) {
      ASSERT_GT(e_best, steering_intensity_at(g, {2.0, 0.0, 2.0, opt + off}, t));
    }
  }
}

TEST(SweepTargets, Empty) { EXPECT_TRUE(sweep_targets({}, {}).empty()); }

TEST(SweepTargets, SingleTargetMatchesRun) {
  const SteeringSpec spec;
  const std::vector<double> targets = {0.04};
  const auto sw = sweep_targets(spec, targets);
  ASSERT_EQ(sw.size(), 1u);
  ASSERT_TRUE(sw[0].result.has_value());
  const auto direct = run_steering(spec);
  EXPECT_EQ(sw[0].result->peak_angle, direct.peak_angle);
  EXPECT_EQ(sw[0].result->delta_phi, direct.delta_phi);
  EXPECT_EQ(sw[0].result->history.final_params, direct.history.final_params);
}

TEST(SweepTargets, UniformTargets) {
  std::vector<double> targets;
  for (int i = -5; i <= 5; ++i) targets.push_back(0.01 * i);
  const auto sw = sweep_targets(SteeringSpec{}, targets);
  ASSERT_EQ(sw.size(), targets.size());
  int successes = 0;
  for (std::size_t i = 0; i < sw.size(); ++i) {
    EXPECT_EQ(sw[i].target, targets[i]);
    if (sw[i].result && sw[i].result->success) ++successes;
  }
  EXPECT_GE(successes, 9);
}

TEST(SweepTargets, ErrorsAreCollected) {
  const std::vector<double> targets = {0.02, 0.5, -0.02};
  const auto sw = sweep_targets(SteeringSpec{}, targets);
  ASSERT_EQ(sw.size(), 3u);
  EXPECT_TRUE(sw[0].result.has_value());
  EXPECT_FALSE(sw[1].result.has_value());
  EXPECT_NE(sw[1].error.find("theta_target"), std::string::npos);
  EXPECT_TRUE(sw[2].result.has_value());
}

}  // namespace
}  // namespace fringe
