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

// Bloch-sphere parameterization of the two source qubits.
//
// A pure qubit is cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, with the |0>
// amplitude kept real and nonnegative (global phase fixed). Two such qubits
// combine by tensor product into amplitudes over |00>, |01>, |10>, |11>; the
// basis intensities are their squared moduli and always sum to one.

#ifndef FRINGE_BLOCH_HPP_
#define FRINGE_BLOCH_HPP_

#include <array>
#include <complex>
#include <cstddef>

namespace fringe {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Polar/azimuthal angle pair. Values are unconstrained reals; use
/// `canonical()` when reporting.
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;

  /// theta folded into [0, pi], phi into (-pi, pi], describing the same
  /// point on the sphere.
  BlochAngles canonical() const;

  friend bool operator==(const BlochAngles&, const BlochAngles&) = default;
};

/// The four trainable source angles (theta1, phi1) for slit 1 and
/// (theta2, phi2) for slit 2.
struct QubitParams {
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta2 = 0.0;
  double phi2 = 0.0;

  BlochAngles first() const { return {theta1, phi1}; }
  BlochAngles second() const { return {theta2, phi2}; }

  std::array<double, 4> as_array() const { return {theta1, phi1, theta2, phi2}; }
  static QubitParams from_array(const std::array<double, 4>& v) {
    return {v[0], v[1], v[2], v[3]};
  }

  bool finite() const;

  friend bool operator==(const QubitParams&, const QubitParams&) = default;
};

struct QubitState {
  cplx amp0;
  cplx amp1;

  double norm_squared() const { return std::norm(amp0) + std::norm(amp1); }
};

struct TwoQubitState {
  cplx c00;
  cplx c01;
  cplx c10;
  cplx c11;

  std::array<cplx, 4> amplitudes() const { return {c00, c01, c10, c11}; }
  double norm_squared() const;
};

/// Basis-state probabilities (i00, i01, i10, i11).
struct IntensityVector {
  double i00 = 0.0;
  double i01 = 0.0;
  double i10 = 0.0;
  double i11 = 0.0;

  std::array<double, 4> as_array() const { return {i00, i01, i10, i11}; }
  double operator[](std::size_t k) const { return as_array()[k]; }
  double sum() const { return i00 + i01 + i10 + i11; }

  /// All entries in [0, 1] and summing to 1 within `tol`.
  bool normalized(double tol = 1e-12) const;

  static IntensityVector uniform() { return {0.25, 0.25, 0.25, 0.25}; }
};

/// Row-major 4x4 complex operator over the |00>..|11> basis.
using Operator4 = std::array<std::array<cplx, 4>, 4>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kImagResidueTol = 1e-10;

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

/// Throws DomainError on non-finite angles.
QubitState bloch_to_state(const BlochAngles& angles);

TwoQubitState tensor_product(const QubitState& q1, const QubitState& q2);

/// Convenience: tensor_product(bloch_to_state(p.first()), bloch_to_state(p.second())).
TwoQubitState two_qubit_state(const QubitParams& p);

IntensityVector intensities(const TwoQubitState& state);

/// Unwrapped relative phase phi2 - phi1.
double relative_phase(double phi1, double phi2);

/// Relative phase wrapped into (-pi, pi].
double relative_phase_canonical(double phi1, double phi2);

bool is_hermitian(const Operator4& h, double tol = kHermitianTol);

/// Real expectation value <psi|H|psi>. Throws DomainError when `h` is not
/// Hermitian or when the imaginary residue exceeds kImagResidueTol.
double energy_expectation(const TwoQubitState& state, const Operator4& h);

Operator4 identity_operator();
Operator4 diagonal_operator(const std::array<double, 4>& diag);

}  // namespace fringe

#endif  // FRINGE_BLOCH_HPP_
