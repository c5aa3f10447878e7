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

#include "fringe/bloch.hpp"

#include <cmath>

#include "fringe/errors.hpp"

namespace fringe {

double wrap_phase(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

BlochAngles BlochAngles::canonical() const {
  // theta -> theta mod 2pi in [0, 2pi); the far hemisphere (theta > pi)
  // is the same point as (2pi - theta, phi + pi).
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  double p = phi;
  if (t > kPi) {
    t = 2.0 * kPi - t;
    p += kPi;
  }
  return {t, wrap_phase(p)};
}

bool QubitParams::finite() const {
  return std::isfinite(theta1) && std::isfinite(phi1) && std::isfinite(theta2) &&
         std::isfinite(phi2);
}

double TwoQubitState::norm_squared() const {
  return std::norm(c00) + std::norm(c01) + std::norm(c10) + std::norm(c11);
}

bool IntensityVector::normalized(double tol) const {
  for (double x : as_array()) {
    if (!(x >= 0.0 && x <= 1.0)) return false;
  }
  return std::abs(sum() - 1.0) <= tol;
}

QubitState bloch_to_state(const BlochAngles& angles) {
  if (!std::isfinite(angles.theta) || !std::isfinite(angles.phi)) {
    throw DomainError("bloch_to_state: angles must be finite");
  }
  const double half = 0.5 * angles.theta;
  return {cplx(std::cos(half), 0.0), std::polar(1.0, angles.phi) * std::sin(half)};
}

TwoQubitState tensor_product(const QubitState& q1, const QubitState& q2) {
  return {q1.amp0 * q2.amp0, q1.amp0 * q2.amp1, q1.amp1 * q2.amp0, q1.amp1 * q2.amp1};
}

TwoQubitState two_qubit_state(const QubitParams& p) {
  return tensor_product(bloch_to_state(p.first()), bloch_to_state(p.second()));
}

IntensityVector intensities(const TwoQubitState& s) {
  return {std::norm(s.c00), std::norm(s.c01), std::norm(s.c10), std::norm(s.c11)};
}

double relative_phase(double phi1, double phi2) { return phi2 - phi1; }

double relative_phase_canonical(double phi1, double phi2) {
  return wrap_phase(relative_phase(phi1, phi2));
}

bool is_hermitian(const Operator4& h, double tol) {
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = r; c < 4; ++c) {
      if (std::abs(h[r][c] - std::conj(h[c][r])) > tol) return false;
    }
  }
  return true;
}

double energy_expectation(const TwoQubitState& state, const Operator4& h) {
  if (!is_hermitian(h)) {
    throw DomainError("energy_expectation: operator is not Hermitian");
  }
  const auto psi = state.amplitudes();
  cplx acc = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    cplx row = 0.0;
    for (std::size_t c = 0; c < 4; ++c) row += h[r][c] * psi[c];
    acc += std::conj(psi[r]) * row;
  }
  if (std::abs(acc.imag()) > kImagResidueTol) {
    throw DomainError("energy_expectation: imaginary residue above tolerance");
  }
  return acc.real();
}

Operator4 identity_operator() { return diagonal_operator({1.0, 1.0, 1.0, 1.0}); }

Operator4 diagonal_operator(const std::array<double, 4>& diag) {
  Operator4 h{};
  for (std::size_t k = 0; k < 4; ++k) h[k][k] = diag[k];
  return h;
}

}  // namespace fringe
