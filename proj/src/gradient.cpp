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

#include "fringe/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fringe/errors.hpp"

namespace fringe {

bool Gradient4::finite() const {
  return std::isfinite(d_theta1) && std::isfinite(d_phi1) && std::isfinite(d_theta2) &&
         std::isfinite(d_phi2);
}

double Gradient4::norm() const {
  return std::sqrt(d_theta1 * d_theta1 + d_phi1 * d_phi1 + d_theta2 * d_theta2 + d_phi2 * d_phi2);
}

double loss(const QubitParams& params, const SlitGeometry& geom, double theta_target) {
  return -steering_intensity_at(geom, params, theta_target);
}

long double loss_extended(const QubitParams& p, const SlitGeometry& geom, double theta_target) {
  if (geom.n_slits != 2) throw UnsupportedModelError("steering model requires n_slits == 2");
  using LD = long double;
  const LD pi = 3.141592653589793238462643383279502884L;
  const LD s = std::sin(static_cast<LD>(theta_target));
  const LD a = pi * static_cast<LD>(geom.d) * s / static_cast<LD>(geom.lambda);
  const LD b = pi * static_cast<LD>(geom.a) * s / static_cast<LD>(geom.lambda);
  return -detail::steering_intensity<LD>(p.theta1, p.phi1, p.theta2, p.phi2, a, b);
}

double steering_phase(const QubitParams& p, const SlitGeometry& geom, double theta_target) {
  return 0.5 * (p.phi2 - p.phi1) + alpha(geom, theta_target);
}

Gradient4 grad_loss(const QubitParams& p, const SlitGeometry& geom, double theta_target) {
  if (geom.n_slits != 2) throw UnsupportedModelError("steering model requires n_slits == 2");
  const double g = sinc_envelope(beta(geom, theta_target));
  const double s = source_scalar_intensity(p);
  const double chi = steering_phase(p, geom, theta_target);
  const double c = std::cos(chi);
  const double c2 = c * c;

  // d/dtheta [sin^2(theta/2)] = sin(theta/2) cos(theta/2)
  const double dt1 = -2.0 * g * c2 * (std::sin(0.5 * p.theta1) * std::cos(0.5 * p.theta1));
  const double dt2 = -2.0 * g * c2 * (std::sin(0.5 * p.theta2) * std::cos(0.5 * p.theta2));
  // dL/dchi = 2 G S sin(2 chi); dchi/dphi1 = -1/2, dchi/dphi2 = +1/2
  const double dchi = 2.0 * g * s * (2.0 * std::sin(chi) * c);
  const double dp2 = 0.5 * dchi;
  return {dt1, -dp2, dt2, dp2};
}

Gradient4 finite_diff_grad(const Objective& objective, const QubitParams& params, double h) {
  const auto x = params.as_array();
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    auto plus = x;
    auto minus = x;
    plus[k] = x[k] + h;
    minus[k] = x[k] - h;
    const long double span =
        static_cast<long double>(plus[k]) - static_cast<long double>(minus[k]);
    const long double fp = objective(QubitParams::from_array(plus));
    const long double fm = objective(QubitParams::from_array(minus));
    out[k] = static_cast<double>((fp - fm) / span);
  }
  return Gradient4::from_array(out);
}

double gradient_rel_error(const Gradient4& analytic, const Gradient4& numeric) {
  const auto a = analytic.as_array();
  const auto n = numeric.as_array();
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    worst = std::max(worst, std::abs(a[k] - n[k]) / (1e-12 + std::abs(n[k])));
  }
  return worst;
}

bool in_exclusion_band(const QubitParams& p, const SlitGeometry& geom, double theta_target) {
  return std::abs(std::cos(steering_phase(p, geom, theta_target))) < kGradExclusionBand ||
         std::abs(std::sin(p.theta1)) < kGradExclusionBand ||
         std::abs(std::sin(p.theta2)) < kGradExclusionBand;
}

std::vector<QubitParams> random_params(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> polar(0.0, kPi);
  std::uniform_real_distribution<double> azimuth(-kPi, kPi);
  std::vector<QubitParams> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QubitParams p;
    p.theta1 = polar(rng);
    p.phi1 = azimuth(rng);
    p.theta2 = polar(rng);
    p.phi2 = azimuth(rng);
    out.push_back(p);
  }
  return out;
}

GradCheckReport check_gradient(std::span<const QubitParams> points, const SlitGeometry& geom,
                               double theta_target, double h) {
  GradCheckReport report;
  report.points.reserve(points.size());
  const Objective objective = [&](const QubitParams& q) {
    return loss_extended(q, geom, theta_target);
  };
  for (const auto& p : points) {
    GradCheckPoint pt;
    pt.params = p;
    pt.analytic = grad_loss(p, geom, theta_target);
    pt.numeric = finite_diff_grad(objective, p, h);
    pt.rel_error = gradient_rel_error(pt.analytic, pt.numeric);
    pt.excluded = in_exclusion_band(p, geom, theta_target);
    if (pt.excluded) {
      ++report.excluded;
    } else if (report.worst_index < 0 || pt.rel_error > report.max_rel_error) {
      report.max_rel_error = pt.rel_error;
      report.worst_index = static_cast<std::ptrdiff_t>(report.points.size());
    }
    report.points.push_back(pt);
  }
  return report;
}

}  // namespace fringe
