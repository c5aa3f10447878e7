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

// Run configuration and serialization of patterns, histories, layers and
// plots.
//
// Config files are flat "key = value" text with dotted section keys:
//
//   # double slit used for the 0.04 rad steering run
//   geometry.d = 12.5
//   source.mode = train
//   experiment.theta_target = 0.04
//
// Unknown keys are rejected. Numbers in CSV output use 17 significant
// digits so every double survives a write/read cycle unchanged.

#ifndef FRINGE_IO_HPP_
#define FRINGE_IO_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fringe/gradient.hpp"
#include "fringe/layers.hpp"
#include "fringe/optics.hpp"
#include "fringe/optimizer.hpp"
#include "fringe/steering.hpp"
#include "json.hpp"

namespace fringe::io {

struct RunConfig {
  SlitGeometry geom;
  QubitParams source = default_init();
  bool source_train = false;  // "source.mode = train"
  AdamConfig adam;
  double theta_target = 0.04;
  double grid_min = -0.1;
  double grid_max = 0.1;
  std::size_t grid_count = 2001;
  double peak_tolerance = 1e-3;
  std::vector<double> sweep_targets = {-0.05, -0.04, -0.03, -0.02, -0.01, 0.0,
                                       0.01,  0.02,  0.03,  0.04,  0.05};
  std::filesystem::path out_dir = "out";
  std::vector<std::string> formats = {"csv", "json", "svg"};

  /// Re-checks every invariant; throws ConfigError naming the field.
  void validate() const;

  AngleGrid grid() const;
  SteeringSpec steering_spec() const;
  bool wants(std::string_view format) const;
};

/// Applies one "key = value" assignment. Throws ConfigError for unknown
/// keys or unparsable values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses config text over the defaults and validates the result.
RunConfig parse_config(std::string_view text);

/// Reads and parses a config file. IoError if unreadable.
RunConfig load_config(const std::filesystem::path& path);

std::string format_double(double x);
double parse_double(std::string_view text, std::string_view field);

inline constexpr std::string_view kHistoryHeader =
    "epoch,loss,theta1,phi1,theta2,phi2,i00,i01,i10,i11";

/// Header "theta,<label>..." then one row per grid angle.
std::string pattern_to_csv(const Pattern& pattern);
Pattern pattern_from_csv(std::string_view csv);

std::string history_to_csv(const TrainingHistory& history);

/// First line "layer,<k>,<side>", then `side` rows of `side` entries.
std::string layer_to_csv(const IntensityMatrix& m);

nlohmann::json params_to_json(const QubitParams& p);
nlohmann::json steering_to_json(const SteeringResult& r, const SteeringSpec& spec);
nlohmann::json gradcheck_to_json(const GradCheckReport& report, std::size_t n_points,
                                 std::uint64_t seed, double h);

struct Series {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Standalone SVG with axes, tick labels and one polyline per series.
std::string line_plot_svg(std::string_view title, std::string_view x_label,
                          std::string_view y_label, std::span<const Series> series);

std::string pattern_svg(const Pattern& pattern, std::string_view title);
std::string loss_curve_svg(const TrainingHistory& history);

/// Writes to a temporary sibling then renames over `path`. IoError on
/// failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace fringe::io

#endif  // FRINGE_IO_HPP_
