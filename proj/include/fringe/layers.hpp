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

#ifndef FRINGE_LAYERS_HPP_
#define FRINGE_LAYERS_HPP_

#include <cstddef>
#include <vector>

#include "fringe/bloch.hpp"

namespace fringe {

inline constexpr std::size_t kDefaultLayerSideCap = 65536;

/// Square, row-major matrix of nonnegative intensities. Layer 1 is the 4x4
/// outer product of two basis-intensity vectors; layer k is layer k-1
/// Kronecker-multiplied with itself, so side(k) = side(k-1)^2.
class IntensityMatrix {
 public:
  IntensityMatrix(std::size_t side, int layer, std::vector<double> entries);

  std::size_t side() const { return side_; }
  int layer() const { return layer_; }
  const std::vector<double>& entries() const { return entries_; }

  double operator()(std::size_t r, std::size_t c) const { return entries_[r * side_ + c]; }

  double sum() const;

 private:
  std::size_t side_;
  int layer_;
  std::vector<double> entries_;
};

/// entry(r, c) = iv1[r] * iv2[c].
IntensityMatrix layer1(const IntensityVector& iv1, const IntensityVector& iv2);

/// m (x) m with layer index incremented. Throws ResourceLimitError when the
/// new side would exceed `side_cap`.
IntensityMatrix next_layer(const IntensityMatrix& m, std::size_t side_cap = kDefaultLayerSideCap);

/// Layers 1..k. Checks the cap for every layer before allocating any.
std::vector<IntensityMatrix> build_layers(const IntensityVector& iv1, const IntensityVector& iv2,
                                          int k, std::size_t side_cap = kDefaultLayerSideCap);

/// Side length of layer k (4, 16, 256, ...), saturating at SIZE_MAX.
std::size_t layer_side(int k);

}  // namespace fringe

#endif  // FRINGE_LAYERS_HPP_
