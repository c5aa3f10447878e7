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

// Fringe steering: train the source phases so that a constructive maximum
// of the double-slit pattern lands on a chosen detection angle, then verify
// the placement on a sampled pattern.

#ifndef FRINGE_STEERING_HPP_
#define FRINGE_STEERING_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fringe/optics.hpp"
#include "fringe/optimizer.hpp"

namespace fringe {

struct SteeringSpec {
  SlitGeometry geom;
  double theta_target = 0.04;
  QubitParams init = default_init();
  AdamConfig adam;
  AngleGrid grid = AngleGrid::steering_default();
  double peak_tolerance = 1e-3;

  void validate() const;
};

struct SteeringResult {
  TrainingHistory history;
  Pattern final_pattern;
  double peak_angle = 0.0;
  double delta_phi = 0.0;  // phi2 - phi1 wrapped into (-pi, pi]
  bool success = false;
};

/// Half a fringe period, (lambda/d)/2.
double peak_window_halfwidth(const SlitGeometry& geom);

SteeringResult run_steering(const SteeringSpec& spec);

struct OptimalPhase {
  double principal = 0.0;      // -2 alpha(theta_target) wrapped into (-pi, pi]
  std::vector<double> lattice; // principal + 2 k pi for k = -2..2
};

/// Relative phase that puts a maximum of cos^2(dphi/2 + alpha) at the
/// target. Requires n_slits == 2.
OptimalPhase analytic_optimal_phase(const SlitGeometry& geom, double theta_target);

/// Distance from `delta_phi` to the nearest member of the optimal lattice.
double distance_to_optimal_phase(double delta_phi, const SlitGeometry& geom, double theta_target);

struct SweepEntry {
  double target = 0.0;
  std::optional<SteeringResult> result;
  std::string error;  // set when `result` is empty
};

/// Independent runs of `spec` per target, executed concurrently. Results
/// are in target order; a failing target records its error and does not
/// abort the sweep.
std::vector<SweepEntry> sweep_targets(const SteeringSpec& spec, std::span<const double> targets);

}  // namespace fringe

#endif  // FRINGE_STEERING_HPP_
