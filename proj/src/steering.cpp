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
#include <future>

#include "fringe/errors.hpp"

namespace fringe {

void SteeringSpec::validate() const {
  geom.validate();
  adam.validate();
  if (!(std::abs(theta_target) < kPi / 2.0)) {
    throw ConfigError("experiment.theta_target", "must satisfy |theta_target| < pi/2");
  }
  if (grid.size() == 0) throw ConfigError("experiment.grid_count", "grid is empty");
  if (theta_target < grid.front() || theta_target > grid.back()) {
    throw ConfigError("experiment.theta_target", "must lie inside the angle grid");
  }
  if (!(std::isfinite(peak_tolerance) && peak_tolerance > 0.0)) {
    throw ConfigError("experiment.peak_tolerance", "must be finite and > 0");
  }
  if (!init.finite()) throw ConfigError("source", "initial angles must be finite");
}

double peak_window_halfwidth(const SlitGeometry& geom) { return 0.5 * geom.lambda / geom.d; }

SteeringResult run_steering(const SteeringSpec& spec) {
  spec.validate();
  if (spec.geom.n_slits != 2) {
    throw UnsupportedModelError("steering requires a double-slit geometry");
  }
  SteeringResult r;
  r.history = train(spec.adam, spec.geom, spec.init, spec.theta_target);
  const QubitParams& fin = r.history.final_params;
  r.final_pattern = pattern_steering(spec.geom, fin, spec.grid);
  r.peak_angle = fringe_peak(r.final_pattern, spec.theta_target, peak_window_halfwidth(spec.geom));
  r.delta_phi = relative_phase_canonical(fin.phi1, fin.phi2);
  r.success = std::abs(r.peak_angle - spec.theta_target) <= spec.peak_tolerance;
  return r;
}

OptimalPhase analytic_optimal_phase(const SlitGeometry& geom, double theta_target) {
  if (geom.n_slits != 2) {
    throw UnsupportedModelError("optimal phase is defined for the double-slit model only");
  }
  OptimalPhase out;
  out.principal = wrap_phase(-2.0 * alpha(geom, theta_target));
  for (int k = -2; k <= 2; ++k) out.lattice.push_back(out.principal + 2.0 * kPi * k);
  return out;
}

double distance_to_optimal_phase(double delta_phi, const SlitGeometry& geom, double theta_target) {
  const auto opt = analytic_optimal_phase(geom, theta_target);
  return std::abs(wrap_phase(delta_phi - opt.principal));
}

std::vector<SweepEntry> sweep_targets(const SteeringSpec& spec, std::span<const double> targets) {
  std::vector<std::future<SteeringResult>> jobs;
  jobs.reserve(targets.size());
  for (double t : targets) {
    SteeringSpec s = spec;
    s.theta_target = t;
    jobs.push_back(std::async(std::launch::async, [s] { return run_steering(s); }));
  }
  std::vector<SweepEntry> out;
  out.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    SweepEntry e;
    e.target = targets[i];
    try {
      e.result = jobs[i].get();
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace fringe
