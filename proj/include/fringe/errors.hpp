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

#ifndef FRINGE_ERRORS_HPP_
#define FRINGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fringe {

/// Input outside the mathematical domain of an operation (non-finite angles,
/// non-Hermitian operator, empty peak window, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Both per-slit amplitudes vanish, so visibility is undefined.
class DegenerateSourceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Forward model requested for a geometry it does not describe.
class UnsupportedModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Kronecker layer would exceed the configured side-length cap.
class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An invariant of a configuration or domain type is violated. `field()`
/// names the offending key (dotted form, e.g. "geometry.a").
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fringe

#endif  // FRINGE_ERRORS_HPP_
