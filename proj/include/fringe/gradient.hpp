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

// Steering loss L = -E(theta_target) and its exact gradient with respect to
// the four source angles, plus a central-difference oracle.
//
// With S = sin^2(theta1/2) + sin^2(theta2/2), chi = (phi2 - phi1)/2 + alpha
// and G = sinc^2(beta) (alpha, beta evaluated at theta_target):
//
//   L          = -2 G S cos^2(chi)
//   dL/dtheta_j = -G cos^2(chi) sin(theta_j)
//   dL/dphi1   = -G S sin(2 chi)  = -dL/dphi2

#ifndef FRINGE_GRADIENT_HPP_
#define FRINGE_GRADIENT_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fringe/bloch.hpp"
#include "fringe/optics.hpp"

namespace fringe {

struct Gradient4 {
  double d_theta1 = 0.0;
  double d_phi1 = 0.0;
  double d_theta2 = 0.0;
  double d_phi2 = 0.0;

  std::array<double, 4> as_array() const { return {d_theta1, d_phi1, d_theta2, d_phi2}; }
  static Gradient4 from_array(const std::array<double, 4>& g) { return {g[0], g[1], g[2], g[3]}; }
  bool finite() const;
  double norm() const;
};

inline constexpr double kDefaultFdStep = 1e-6;
inline constexpr double kGradRelTolerance = 1e-6;
/// Points with |cos chi| or any |sin theta_j| below this are skipped by the
/// gradient check: the central difference there is dominated by round-off.
inline constexpr double kGradExclusionBand = 1e-4;

/// -E(theta_target) under the double-slit steering model.
double loss(const QubitParams& params, const SlitGeometry& geom, double theta_target);

/// Same objective evaluated in extended precision, for difference quotients.
long double loss_extended(const QubitParams& params, const SlitGeometry& geom,
                          double theta_target);

Gradient4 grad_loss(const QubitParams& params, const SlitGeometry& geom, double theta_target);

/// chi = (phi2 - phi1)/2 + alpha(theta_target).
double steering_phase(const QubitParams& params, const SlitGeometry& geom, double theta_target);

using Objective = std::function<long double(const QubitParams&)>;

/// Central differences (f(x+h) - f(x-h)) / (2h) per coordinate. The divisor
/// uses the step actually representable at each coordinate.
Gradient4 finite_diff_grad(const Objective& objective, const QubitParams& params,
                           double h = kDefaultFdStep);

struct GradCheckPoint {
  QubitParams params;
  Gradient4 analytic;
  Gradient4 numeric;
  double rel_error = 0.0;  // max over coordinates
  bool excluded = false;
};

struct GradCheckReport {
  std::vector<GradCheckPoint> points;
  double max_rel_error = 0.0;  // over non-excluded points
  std::ptrdiff_t worst_index = -1;
  std::size_t excluded = 0;

  bool passed(double tol = kGradRelTolerance) const { return max_rel_error <= tol; }
};

/// max_k |a_k - n_k| / (1e-12 + |n_k|).
double gradient_rel_error(const Gradient4& analytic, const Gradient4& numeric);

bool in_exclusion_band(const QubitParams& params, const SlitGeometry& geom, double theta_target);

/// Thetas uniform in [0, pi], phis uniform in [-pi, pi], from a 64-bit
/// Mersenne Twister seeded with `seed`.
std::vector<QubitParams> random_params(std::size_t n, std::uint64_t seed);

GradCheckReport check_gradient(std::span<const QubitParams> points, const SlitGeometry& geom,
                               double theta_target, double h = kDefaultFdStep);

}  // namespace fringe

#endif  // FRINGE_GRADIENT_HPP_
