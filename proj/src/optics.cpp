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

#include "fringe/optics.hpp"

#include <algorithm>
#include <cmath>

#include "fringe/errors.hpp"

namespace fringe {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void SlitGeometry::validate() const {
  if (!positive_finite(a)) throw ConfigError("geometry.a", "slit width must be finite and > 0");
  if (!positive_finite(d)) throw ConfigError("geometry.d", "slit separation must be finite and > 0");
  if (!positive_finite(lambda)) {
    throw ConfigError("geometry.lambda", "wavelength must be finite and > 0");
  }
  if (n_slits < 1) throw ConfigError("geometry.n_slits", "slit count must be >= 1");
  if (n_slits >= 2 && a > d) {
    throw ConfigError("geometry.a", "slit width must not exceed separation when n_slits >= 2");
  }
}

AngleGrid::AngleGrid(std::vector<double> angles) : angles_(std::move(angles)) {
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    const double t = angles_[i];
    if (!std::isfinite(t) || std::abs(t) >= kPi / 2.0) {
      throw DomainError("AngleGrid: every angle must satisfy |theta| < pi/2");
    }
    if (i > 0 && !(t > angles_[i - 1])) {
      throw DomainError("AngleGrid: angles must be strictly increasing");
    }
  }
}

AngleGrid AngleGrid::uniform(double lo, double hi, std::size_t count) {
  if (count == 0) return AngleGrid{};
  if (count == 1) return AngleGrid{{lo}};
  if (!(hi > lo)) throw DomainError("AngleGrid::uniform: need hi > lo");
  std::vector<double> v(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) v[i] = lo + step * static_cast<double>(i);
  v.back() = hi;
  return AngleGrid{std::move(v)};
}

double beta(const SlitGeometry& geom, double theta) {
  return kPi * geom.a * std::sin(theta) / geom.lambda;
}

double alpha(const SlitGeometry& geom, double theta) {
  return kPi * geom.d * std::sin(theta) / geom.lambda;
}

double sinc_envelope(double b) { return detail::sinc_sq(b); }

double grating_factor(int n_slits, double a, GratingMode mode) {
  const double n = static_cast<double>(n_slits);
  if (mode == GratingMode::kPaperLiteral) {
    if (a == 0.0) return n * n;
    const double r = std::sin(n * a) / a;
    return r * r;
  }
  if (n_slits == 1) return 1.0;
  // The squared ratio has period pi in a; reducing first keeps the
  // removable singularities at a = k pi well conditioned.
  const double r = std::remainder(a, kPi);
  if (r == 0.0) return 1.0;
  const double q = std::sin(n * r) / (n * std::sin(r));
  return q * q;
}

double visibility(double i1, double i2) {
  const double denom = i1 * i1 + i2 * i2;
  if (denom == 0.0) throw DegenerateSourceError("visibility: both slit amplitudes are zero");
  return 2.0 * i1 * i2 / denom;
}

double coherent_intensity(double i1, double i2, double phi_rel, std::optional<CoherenceParams> v) {
  if (i1 < 0.0 || i2 < 0.0) throw DomainError("coherent_intensity: amplitudes must be >= 0");
  const double vis = v ? v->v : visibility(i1, i2);
  if (!(vis >= 0.0 && vis <= 1.0)) throw DomainError("coherent_intensity: visibility outside [0, 1]");
  if (i1 == 0.0 && i2 == 0.0) {
    throw DegenerateSourceError("coherent_intensity: both slit amplitudes are zero");
  }
  return (i1 * i1 + i2 * i2) * (1.0 + vis * std::cos(phi_rel));
}

double source_scalar_intensity(const QubitParams& params) {
  const double s1 = std::sin(0.5 * params.theta1);
  const double s2 = std::sin(0.5 * params.theta2);
  return s1 * s1 + s2 * s2;
}

double steering_intensity_at(const SlitGeometry& geom, const QubitParams& p, double theta) {
  if (geom.n_slits != 2) {
    throw UnsupportedModelError("steering model requires n_slits == 2");
  }
  return detail::steering_intensity(p.theta1, p.phi1, p.theta2, p.phi2, alpha(geom, theta),
                                    beta(geom, theta));
}

Pattern pattern_steering(const SlitGeometry& geom, const QubitParams& params, const AngleGrid& grid) {
  if (geom.n_slits != 2) {
    throw UnsupportedModelError("eq27 pattern requires n_slits == 2, got " +
                                std::to_string(geom.n_slits));
  }
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out[i] = steering_intensity_at(geom, params, grid[i]);
  }
  return {grid, {std::move(out)}, {"intensity"}};
}

Pattern pattern_basis(const SlitGeometry& geom, const QubitParams& params, const AngleGrid& grid,
                     GratingMode mode) {
  const auto iv = intensities(two_qubit_state(params)).as_array();
  const double c = std::cos(0.5 * relative_phase(params.phi1, params.phi2));
  const double phase = 2.0 * c * c;

  Pattern p{grid, std::vector<std::vector<double>>(4, std::vector<double>(grid.size())),
            {"i00", "i01", "i10", "i11"}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double geom_factor = phase * sinc_envelope(beta(geom, grid[i])) *
                               grating_factor(geom.n_slits, alpha(geom, grid[i]), mode);
    for (std::size_t k = 0; k < 4; ++k) p.channels[k][i] = iv[k] * geom_factor;
  }
  return p;
}

double fringe_peak(const Pattern& pattern, double center, double halfwidth) {
  if (pattern.channels.empty()) throw DomainError("fringe_peak: pattern has no channels");
  const auto& xs = pattern.grid.angles();
  const auto& ys = pattern.channels.front();
  const double lo = center - halfwidth;
  const double hi = center + halfwidth;

  const auto first = std::lower_bound(xs.begin(), xs.end(), lo);
  const auto last = std::upper_bound(xs.begin(), xs.end(), hi);
  if (last - first < 3) {
    throw DomainError("fringe_peak: window holds fewer than 3 grid samples");
  }
  const auto begin = static_cast<std::size_t>(first - xs.begin());
  const auto end = static_cast<std::size_t>(last - xs.begin());

  std::size_t best = begin;
  for (std::size_t i = begin + 1; i < end; ++i) {
    if (ys[i] > ys[best] ||
        (ys[i] == ys[best] && std::abs(xs[i] - center) < std::abs(xs[best] - center))) {
      best = i;
    }
  }
  if (best == 0 || best + 1 >= xs.size()) return xs[best];

  // Vertex of the parabola through (x0,y0), (x1,y1), (x2,y2).
  const double x0 = xs[best - 1], x1 = xs[best], x2 = xs[best + 1];
  const double y0 = ys[best - 1], y1 = ys[best], y2 = ys[best + 1];
  const double d01 = (y1 - y0) / (x1 - x0);
  const double d12 = (y2 - y1) / (x2 - x1);
  const double curvature = (d12 - d01) / (x2 - x0);
  if (!(curvature < 0.0)) return x1;
  const double vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
  return std::clamp(vertex, x0, x2);
}

}  // namespace fringe
