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

#include "fringe/layers.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "fringe/errors.hpp"

namespace fringe {

IntensityMatrix::IntensityMatrix(std::size_t side, int layer, std::vector<double> entries)
    : side_(side), layer_(layer), entries_(std::move(entries)) {
  if (layer_ < 1) throw DomainError("IntensityMatrix: layer index must be >= 1");
  if (entries_.size() != side_ * side_) {
    throw DomainError("IntensityMatrix: entry count does not match side length");
  }
  for (double x : entries_) {
    if (!(x >= 0.0)) throw DomainError("IntensityMatrix: entries must be nonnegative");
  }
}

double IntensityMatrix::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

std::size_t layer_side(int k) {
  if (k < 1) return 0;
  std::size_t side = 4;
  for (int i = 1; i < k; ++i) {
    if (side > std::numeric_limits<std::uint32_t>::max()) {
      return std::numeric_limits<std::size_t>::max();
    }
    side *= side;
  }
  return side;
}

IntensityMatrix layer1(const IntensityVector& iv1, const IntensityVector& iv2) {
  const auto a = iv1.as_array();
  const auto b = iv2.as_array();
  std::vector<double> e(16);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) e[r * 4 + c] = a[r] * b[c];
  }
  return IntensityMatrix(4, 1, std::move(e));
}

IntensityMatrix next_layer(const IntensityMatrix& m, std::size_t side_cap) {
  const std::size_t s = m.side();
  if (s > side_cap || s > std::numeric_limits<std::uint32_t>::max() || s * s > side_cap) {
    throw ResourceLimitError("layer " + std::to_string(m.layer() + 1) +
                             " exceeds the side-length cap of " + std::to_string(side_cap));
  }
  const std::size_t out_side = s * s;
  std::vector<double> out(out_side * out_side);
  // out[(i1 s + i2), (j1 s + j2)] = m[i1, j1] * m[i2, j2]
  for (std::size_t i1 = 0; i1 < s; ++i1) {
    for (std::size_t j1 = 0; j1 < s; ++j1) {
      const double w = m(i1, j1);
      for (std::size_t i2 = 0; i2 < s; ++i2) {
        double* row = &out[(i1 * s + i2) * out_side + j1 * s];
        for (std::size_t j2 = 0; j2 < s; ++j2) row[j2] = w * m(i2, j2);
      }
    }
  }
  return IntensityMatrix(out_side, m.layer() + 1, std::move(out));
}

std::vector<IntensityMatrix> build_layers(const IntensityVector& iv1, const IntensityVector& iv2,
                                          int k, std::size_t side_cap) {
  if (k < 1) throw DomainError("build_layers: k must be >= 1");
  if (layer_side(k) > side_cap) {
    throw ResourceLimitError("layer " + std::to_string(k) + " exceeds the side-length cap of " +
                             std::to_string(side_cap));
  }
  std::vector<IntensityMatrix> layers;
  layers.reserve(static_cast<std::size_t>(k));
  layers.push_back(layer1(iv1, iv2));
  for (int i = 1; i < k; ++i) layers.push_back(next_layer(layers.back(), side_cap));
  return layers;
}

}  // namespace fringe
