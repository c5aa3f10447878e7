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

#include "fringe/optimizer.hpp"

#include <cmath>
#include <tuple>

#include "fringe/errors.hpp"

namespace fringe {

void AdamConfig::validate() const {
  if (!(std::isfinite(learning_rate) && learning_rate > 0.0)) {
    throw ConfigError("optimizer.learning_rate", "must be finite and > 0");
  }
  if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ConfigError("optimizer.beta1", "must lie in [0, 1)");
  if (!(beta2 >= 0.0 && beta2 < 1.0)) throw ConfigError("optimizer.beta2", "must lie in [0, 1)");
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
    throw ConfigError("optimizer.epsilon", "must be finite and > 0");
  }
  if (max_epochs < 0) throw ConfigError("optimizer.max_epochs", "must be >= 0");
}

std::pair<AdamState, QubitParams> adam_step(const AdamState& state, const AdamConfig& config,
                                            const QubitParams& params, const Gradient4& grad) {
  if (!grad.finite()) {
    throw TrainingDivergedError("adam_step: non-finite gradient", TrainingHistory{});
  }
  AdamState next = state;
  next.t = state.t + 1;
  const double t = static_cast<double>(next.t);
  const double bc1 = 1.0 - std::pow(config.beta1, t);
  const double bc2 = 1.0 - std::pow(config.beta2, t);

  const auto g = grad.as_array();
  auto x = params.as_array();
  for (std::size_t k = 0; k < 4; ++k) {
    next.m[k] = config.beta1 * state.m[k] + (1.0 - config.beta1) * g[k];
    next.v[k] = config.beta2 * state.v[k] + (1.0 - config.beta2) * (g[k] * g[k]);
    const double m_hat = next.m[k] / bc1;
    const double v_hat = next.v[k] / bc2;
    x[k] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
  }
  return {next, QubitParams::from_array(x)};
}

TrainingHistory train(const AdamConfig& config, const SlitGeometry& geom, const QubitParams& init,
                      double theta_target) {
  config.validate();
  geom.validate();
  if (!init.finite()) throw DomainError("train: initial parameters must be finite");

  TrainingHistory history;
  history.final_params = init;
  history.records.reserve(static_cast<std::size_t>(config.max_epochs));

  AdamState state;
  QubitParams params = init;
  int plateau = 0;
  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    const double l = loss(params, geom, theta_target);
    const Gradient4 g = grad_loss(params, geom, theta_target);
    if (!std::isfinite(l) || !g.finite()) {
      history.final_params = params;
      history.final_state = state;
      throw TrainingDivergedError(
          "training diverged at epoch " + std::to_string(epoch) + " (non-finite loss or gradient)",
          std::move(history));
    }

    if (!history.records.empty()) {
      plateau = std::abs(l - history.records.back().loss) <= kPlateauDelta ? plateau + 1 : 0;
    }
    history.records.push_back({epoch, l, params, intensities(two_qubit_state(params))});

    std::tie(state, params) = adam_step(state, config, params, g);
    if (plateau >= kPlateauEpochs) {
      history.converged = true;
      break;
    }
  }
  history.final_params = params;
  history.final_state = state;
  return history;
}

}  // namespace fringe
