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

#include "fringe/io.hpp"

#include <fmt/format.h>
#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "fringe/errors.hpp"

namespace fringe::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view text, std::string_view field) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(field), "expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_list(std::string_view text, std::string_view field) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ',')) out.push_back(parse_double(item, field));
  return out;
}

using Setter = std::function<void(RunConfig&, std::string_view, std::string_view)>;

Setter real(double RunConfig::*member) {
  return [member](RunConfig& c, std::string_view v, std::string_view k) {
    c.*member = parse_double(v, k);
  };
}

template <class Block>
Setter real_in(Block RunConfig::*block, double Block::*member) {
  return [block, member](RunConfig& c, std::string_view v, std::string_view k) {
    (c.*block).*member = parse_double(v, k);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"geometry.a", real_in(&RunConfig::geom, &SlitGeometry::a)},
      {"geometry.d", real_in(&RunConfig::geom, &SlitGeometry::d)},
      {"geometry.lambda", real_in(&RunConfig::geom, &SlitGeometry::lambda)},
      {"geometry.n_slits",
       [](RunConfig& c, std::string_view v, std::string_view k) {
         c.geom.n_slits = parse_int(v, k);
       }},
      {"source.theta1", real_in(&RunConfig::source, &QubitParams::theta1)},
      {"source.phi1", real_in(&RunConfig::source, &QubitParams::phi1)},
      {"source.theta2", real_in(&RunConfig::source, &QubitParams::theta2)},
      {"source.phi2", real_in(&RunConfig::source, &QubitParams::phi2)},
      {"source.mode",
       [](RunConfig& c, std::string_view v, std::string_view k) {
         v = trim(v);
         if (v == "train") {
           c.source_train = true;
         } else if (v == "fixed") {
           c.source_train = false;
         } else {
           throw ConfigError(std::string(k), "expected 'fixed' or 'train'");
         }
       }},
      {"optimizer.learning_rate", real_in(&RunConfig::adam, &AdamConfig::learning_rate)},
      {"optimizer.beta1", real_in(&RunConfig::adam, &AdamConfig::beta1)},
      {"optimizer.beta2", real_in(&RunConfig::adam, &AdamConfig::beta2)},
      {"optimizer.epsilon", real_in(&RunConfig::adam, &AdamConfig::epsilon)},
      {"optimizer.max_epochs",
       [](RunConfig& c, std::string_view v, std::string_view k) {
         c.adam.max_epochs = parse_int(v, k);
       }},
      {"experiment.theta_target", real(&RunConfig::theta_target)},
      {"experiment.grid_min", real(&RunConfig::grid_min)},
      {"experiment.grid_max", real(&RunConfig::grid_max)},
      {"experiment.grid_count",
       [](RunConfig& c, std::string_view v, std::string_view k) {
         const int n = parse_int(v, k);
         if (n < 0) throw ConfigError(std::string(k), "must be >= 0");
         c.grid_count = static_cast<std::size_t>(n);
       }},
      {"experiment.peak_tolerance", real(&RunConfig::peak_tolerance)},
      {"experiment.sweep_targets",
       [](RunConfig& c, std::string_view v, std::string_view k) {
         c.sweep_targets = parse_list(v, k);
       }},
      {"output.directory",
       [](RunConfig& c, std::string_view v, std::string_view) {
         c.out_dir = std::string(trim(v));
       }},
      {"output.formats",
       [](RunConfig& c, std::string_view v, std::string_view) {
         c.formats.clear();
         for (auto f : split(v, ',')) {
           if (!trim(f).empty()) c.formats.emplace_back(trim(f));
         }
       }},
  };
  return table;
}

void check_angle(double x, std::string_view field) {
  if (!(std::abs(x) < kPi / 2.0)) {
    throw ConfigError(std::string(field), "must be finite with |value| < pi/2");
  }
}

}  // namespace

void RunConfig::validate() const {
  geom.validate();
  adam.validate();
  if (!source.finite()) throw ConfigError("source", "angles must be finite");
  check_angle(grid_min, "experiment.grid_min");
  check_angle(grid_max, "experiment.grid_max");
  if (!(grid_max > grid_min)) throw ConfigError("experiment.grid_max", "must exceed grid_min");
  if (grid_count < 3) throw ConfigError("experiment.grid_count", "must be >= 3");
  check_angle(theta_target, "experiment.theta_target");
  if (theta_target < grid_min || theta_target > grid_max) {
    throw ConfigError("experiment.theta_target", "must lie inside [grid_min, grid_max]");
  }
  if (!(std::isfinite(peak_tolerance) && peak_tolerance > 0.0)) {
    throw ConfigError("experiment.peak_tolerance", "must be finite and > 0");
  }
  for (double t : sweep_targets) {
    check_angle(t, "experiment.sweep_targets");
    if (t < grid_min || t > grid_max) {
      throw ConfigError("experiment.sweep_targets", "every target must lie inside the grid");
    }
  }
  if (out_dir.empty()) throw ConfigError("output.directory", "must not be empty");
  for (const auto& f : formats) {
    if (f != "csv" && f != "json" && f != "svg") {
      throw ConfigError("output.formats", "unknown format '" + f + "' (csv, json, svg)");
    }
  }
}

AngleGrid RunConfig::grid() const { return AngleGrid::uniform(grid_min, grid_max, grid_count); }

SteeringSpec RunConfig::steering_spec() const {
  SteeringSpec s;
  s.geom = geom;
  s.theta_target = theta_target;
  s.init = source;
  s.adam = adam;
  s.grid = grid();
  s.peak_tolerance = peak_tolerance;
  return s;
}

bool RunConfig::wants(std::string_view format) const {
  return std::find(formats.begin(), formats.end(), format) != formats.end();
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  const auto it = setters().find(key);
  if (it == setters().end()) throw ConfigError(std::string(key), "unknown configuration key");
  it->second(cfg, value, key);
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

double parse_double(std::string_view text, std::string_view field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(field), "expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::string pattern_to_csv(const Pattern& pattern) {
  std::string out = "theta";
  for (const auto& label : pattern.labels) out += "," + label;
  out += '\n';
  for (std::size_t i = 0; i < pattern.grid.size(); ++i) {
    out += format_double(pattern.grid[i]);
    for (const auto& ch : pattern.channels) {
      out += ',';
      out += format_double(ch[i]);
    }
    out += '\n';
  }
  return out;
}

Pattern pattern_from_csv(std::string_view csv) {
  auto lines = split(csv, '\n');
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw IoError("pattern CSV is empty");

  const auto header = split(trim(lines.front()), ',');
  if (header.size() < 2 || header.front() != "theta") {
    throw IoError("pattern CSV header must start with 'theta'");
  }
  Pattern p;
  for (std::size_t c = 1; c < header.size(); ++c) p.labels.emplace_back(header[c]);
  p.channels.assign(p.labels.size(), {});

  std::vector<double> angles;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(trim(lines[r]), ',');
    if (cells.size() != header.size()) {
      throw IoError("pattern CSV row " + std::to_string(r) + " has the wrong column count");
    }
    angles.push_back(parse_double(cells[0], "theta"));
    for (std::size_t c = 1; c < cells.size(); ++c) {
      p.channels[c - 1].push_back(parse_double(cells[c], header[c]));
    }
  }
  p.grid = AngleGrid(std::move(angles));
  return p;
}

std::string history_to_csv(const TrainingHistory& history) {
  std::string out(kHistoryHeader);
  out += '\n';
  for (const auto& r : history.records) {
    out += std::to_string(r.epoch);
    for (double x : {r.loss, r.params.theta1, r.params.phi1, r.params.theta2, r.params.phi2,
                     r.intensities.i00, r.intensities.i01, r.intensities.i10, r.intensities.i11}) {
      out += ',';
      out += format_double(x);
    }
    out += '\n';
  }
  return out;
}

std::string layer_to_csv(const IntensityMatrix& m) {
  std::string out = fmt::format("layer,{},{}\n", m.layer(), m.side());
  for (std::size_t r = 0; r < m.side(); ++r) {
    for (std::size_t c = 0; c < m.side(); ++c) {
      if (c) out += ',';
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  return out;
}

nlohmann::json params_to_json(const QubitParams& p) {
  return {{"theta1", p.theta1}, {"phi1", p.phi1}, {"theta2", p.theta2}, {"phi2", p.phi2}};
}

nlohmann::json steering_to_json(const SteeringResult& r, const SteeringSpec& spec) {
  const auto iv = intensities(two_qubit_state(r.history.final_params));
  nlohmann::json j;
  j["theta_target"] = spec.theta_target;
  j["success"] = r.success;
  j["peak_angle"] = r.peak_angle;
  j["peak_tolerance"] = spec.peak_tolerance;
  j["delta_phi"] = r.delta_phi;
  j["converged"] = r.history.converged;
  j["epochs"] = r.history.records.size();
  j["final_loss"] = loss(r.history.final_params, spec.geom, spec.theta_target);
  j["final_params"] = params_to_json(r.history.final_params);
  j["final_intensities"] = {iv.i00, iv.i01, iv.i10, iv.i11};
  if (spec.geom.n_slits == 2) {
    j["optimal_delta_phi"] = analytic_optimal_phase(spec.geom, spec.theta_target).principal;
  }
  return j;
}

nlohmann::json gradcheck_to_json(const GradCheckReport& report, std::size_t n_points,
                                 std::uint64_t seed, double h) {
  nlohmann::json j;
  j["n_points"] = n_points;
  j["seed"] = seed;
  j["h"] = h;
  j["tolerance"] = kGradRelTolerance;
  j["excluded"] = report.excluded;
  j["max_rel_error"] = report.max_rel_error;
  j["passed"] = report.passed();
  if (report.worst_index >= 0) {
    const auto& w = report.points[static_cast<std::size_t>(report.worst_index)];
    const auto a = w.analytic.as_array();
    const auto n = w.numeric.as_array();
    j["worst_point"] = {{"index", report.worst_index},
                        {"params", params_to_json(w.params)},
                        {"analytic", std::vector<double>(a.begin(), a.end())},
                        {"finite_difference", std::vector<double>(n.begin(), n.end())},
                        {"rel_error", w.rel_error}};
  } else {
    j["worst_point"] = nullptr;
  }
  return j;
}

std::string line_plot_svg(std::string_view title, std::string_view x_label,
                          std::string_view y_label, std::span<const Series> series) {
  constexpr double kW = 800, kH = 480, kLeft = 80, kRight = 20, kTop = 40, kBottom = 60;
  constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series) {
    for (double x : s.xs) x0 = std::min(x0, x), x1 = std::max(x1, x);
    for (double y : s.ys) {
      if (std::isfinite(y)) y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  }
  if (!(x1 > x0)) x0 -= 0.5, x1 += 0.5;
  if (!std::isfinite(y0)) y0 = 0.0, y1 = 1.0;
  if (!(y1 > y0)) y0 -= 0.5, y1 += 0.5;

  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  const auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{3}</text>\n",
      kW, kH, kW / 2, title);
  svg += fmt::format(
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n"
      "<line x1=\"{0}\" y1=\"{3}\" x2=\"{0}\" y2=\"{1}\" stroke=\"black\"/>\n",
      kLeft, kTop + ph, kLeft + pw, kTop);
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"black\"/>"
        "<text x=\"{0:.2f}\" y=\"{3}\" text-anchor=\"middle\">{4:.4g}</text>\n",
        px(xv), kTop + ph, kTop + ph + 5, kTop + ph + 20, xv);
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"black\"/>"
        "<text x=\"{3}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:.4g}</text>\n",
        kLeft - 5, py(yv), kLeft, kLeft - 8, py(yv) + 4, yv);
  }
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", kLeft + pw / 2,
                     kH - 15, x_label);
  svg += fmt::format(
      "<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0})\">{1}</text>\n",
      kTop + ph / 2, y_label);

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kColors[k % std::size(kColors)];
    svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"", color);
    for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
      if (!std::isfinite(s.ys[i])) continue;
      svg += fmt::format("{:.2f},{:.2f} ", px(s.xs[i]), py(s.ys[i]));
    }
    svg += "\"/>\n";
    svg += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", kLeft + pw - 80,
                       kTop + 16 + 16 * static_cast<double>(k), color, s.label);
  }
  svg += "</svg>\n";
  return svg;
}

std::string pattern_svg(const Pattern& pattern, std::string_view title) {
  std::vector<Series> series;
  for (std::size_t k = 0; k < pattern.channels.size(); ++k) {
    series.push_back({pattern.labels[k], pattern.grid.angles(), pattern.channels[k]});
  }
  return line_plot_svg(title, "theta (rad)", "intensity", series);
}

std::string loss_curve_svg(const TrainingHistory& history) {
  Series s{"loss", {}, {}};
  for (const auto& r : history.records) {
    s.xs.push_back(r.epoch);
    s.ys.push_back(r.loss);
  }
  return line_plot_svg("Training loss", "epoch", "loss", std::span<const Series>(&s, 1));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " to " + path.string());
  }
}

}  // namespace fringe::io
