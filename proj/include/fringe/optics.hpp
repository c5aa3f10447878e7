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

// Scalar Fraunhofer diffraction from N identical slits illuminated by the
// two-qubit source.
//
// Two forward models are provided:
//
//   double-slit steering model (training model)
//     E(theta) = 2 S cos^2(dphi/2 + alpha) sinc^2(beta)
//     S = sin^2(theta1/2) + sin^2(theta2/2)
//
//   basis-resolved model (4 channels, one per |mn>)
//     E_mn(theta) = 2 i_mn cos^2(dphi/2) sinc^2(beta) grating(N, alpha)
//
// with beta = pi a sin(theta)/lambda, alpha = pi d sin(theta)/lambda and
// dphi = phi2 - phi1.

#ifndef FRINGE_OPTICS_HPP_
#define FRINGE_OPTICS_HPP_

#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "fringe/bloch.hpp"

namespace fringe {

/// Slit width `a`, center spacing `d`, slit count and wavelength, all in the
/// same length unit.
struct SlitGeometry {
  double a = 2.0;
  double d = 12.5;
  int n_slits = 2;
  double lambda = 1.0;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  /// lambda = 1, d = 12.5, a = 2, N = 2: with a relative phase near pi the
  /// fringe comb has a maximum at 0.04 rad.
  static SlitGeometry steering_default() { return {}; }
};

/// Strictly increasing detection angles, each |theta| < pi/2.
class AngleGrid {
 public:
  AngleGrid() = default;
  explicit AngleGrid(std::vector<double> angles);

  static AngleGrid uniform(double lo, double hi, std::size_t count);
  /// 2001 samples over [-0.1, 0.1] rad.
  static AngleGrid steering_default() { return uniform(-0.1, 0.1, 2001); }

  const std::vector<double>& angles() const { return angles_; }
  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  double front() const { return angles_.front(); }
  double back() const { return angles_.back(); }

 private:
  std::vector<double> angles_;
};

struct Pattern {
  AngleGrid grid;
  std::vector<std::vector<double>> channels;
  std::vector<std::string> labels;

  std::size_t channel_count() const { return channels.size(); }
};

struct CoherenceParams {
  double v = 1.0;
};

enum class GratingMode {
  kTextbook,       // [sin(N a)/(N sin a)]^2, 1 at a = k pi
  kPaperLiteral,   // [sin(N a)/a]^2, N^2 at a = 0
};

double beta(const SlitGeometry& geom, double theta);
double alpha(const SlitGeometry& geom, double theta);

/// (sin b / b)^2 with the b = 0 limit taken as 1.
double sinc_envelope(double b);

double grating_factor(int n_slits, double a, GratingMode mode = GratingMode::kTextbook);

/// (i1^2 + i2^2)(1 + v cos(phi_rel)). Without `v`, uses the visibility
/// 2 i1 i2 / (i1^2 + i2^2) implied by the two-beam expansion.
/// Throws DegenerateSourceError when i1 = i2 = 0.
double coherent_intensity(double i1, double i2, double phi_rel,
                          std::optional<CoherenceParams> v = std::nullopt);

/// Visibility implied by two beams of amplitude i1, i2.
double visibility(double i1, double i2);

/// Per-slit amplitude launched by qubit j is sin(theta_j/2); returns
/// sin^2(theta1/2) + sin^2(theta2/2).
double source_scalar_intensity(const QubitParams& params);

namespace detail {

// Shared by the double-precision model and the extended-precision
// finite-difference oracle.
template <std::floating_point T>
T sinc_sq(T b) {
  if (b == T(0)) return T(1);
  const T s = std::sin(b) / b;
  return s * s;
}

template <std::floating_point T>
T steering_intensity(T theta1, T phi1, T theta2, T phi2, T alpha_t, T beta_t) {
  const T s1 = std::sin(theta1 / T(2));
  const T s2 = std::sin(theta2 / T(2));
  const T c = std::cos((phi2 - phi1) / T(2) + alpha_t);
  return T(2) * (s1 * s1 + s2 * s2) * c * c * sinc_sq(beta_t);
}

}  // namespace detail

/// Double-slit steering model at a single angle. Requires n_slits == 2.
double steering_intensity_at(const SlitGeometry& geom, const QubitParams& params,
                             double theta);

/// One-channel pattern of the steering model. Throws UnsupportedModelError
/// unless geom.n_slits == 2.
Pattern pattern_steering(const SlitGeometry& geom, const QubitParams& params,
                     const AngleGrid& grid);

/// Four-channel basis-resolved pattern (labels i00, i01, i10, i11).
Pattern pattern_basis(const SlitGeometry& geom, const QubitParams& params,
                     const AngleGrid& grid, GratingMode mode = GratingMode::kTextbook);

/// Angle of maximal channel-0 intensity within
/// [center - halfwidth, center + halfwidth], refined by a parabola through
/// the argmax and its grid neighbours. Ties go to the sample nearest
/// `center`. Throws DomainError when fewer than 3 samples fall inside.
double fringe_peak(const Pattern& pattern, double center, double halfwidth);

}  // namespace fringe

#endif  // FRINGE_OPTICS_HPP_
