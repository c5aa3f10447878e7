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

#ifndef FRINGE_OPTIMIZER_HPP_
#define FRINGE_OPTIMIZER_HPP_

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fringe/bloch.hpp"
#include "fringe/gradient.hpp"
#include "fringe/optics.hpp"

namespace fringe {

struct AdamConfig {
  double learning_rate = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int max_epochs = 200;

  /// Throws ConfigError naming the offending "optimizer.*" field.
  /// max_epochs = 0 is accepted and means "record nothing".
  void validate() const;
};

/// Moment estimates and step counter. A value-initialized state is fresh.
struct AdamState {
  std::array<double, 4> m{};
  std::array<double, 4> v{};
  long t = 0;
};

/// One bias-corrected adaptive-moment update. Throws TrainingDivergedError
/// on a non-finite gradient.
std::pair<AdamState, QubitParams> adam_step(const AdamState& state, const AdamConfig& config,
                                            const QubitParams& params, const Gradient4& grad);

/// Parameters and loss are those at the start of the epoch, before its step.
struct TrainingRecord {
  int epoch = 0;
  double loss = 0.0;
  QubitParams params;
  IntensityVector intensities;
};

struct TrainingHistory {
  std::vector<TrainingRecord> records;
  bool converged = false;
  QubitParams final_params;
  AdamState final_state;
};

/// Plateau rule: |loss_k - loss_{k-1}| <= kPlateauDelta for kPlateauEpochs
/// consecutive epochs stops training as converged.
inline constexpr double kPlateauDelta = 1e-9;
inline constexpr int kPlateauEpochs = 10;

class TrainingDivergedError : public std::runtime_error {
 public:
  TrainingDivergedError(const std::string& what, TrainingHistory partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const TrainingHistory& partial() const noexcept { return partial_; }

 private:
  TrainingHistory partial_;
};

/// Minimizes the steering loss at `theta_target` starting from `init`.
TrainingHistory train(const AdamConfig& config, const SlitGeometry& geom, const QubitParams& init,
                      double theta_target);

/// Reference starting point (1.6708, 0.1, 1.6708, -0.1).
inline QubitParams default_init() { return {1.6708, 0.1, 1.6708, -0.1}; }

}  // namespace fringe

#endif  // FRINGE_OPTIMIZER_HPP_
