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

#include "fringe/cli.hpp"

#include <fmt/format.h>

#include <optional>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "fringe/errors.hpp"
#include "fringe/io.hpp"

namespace fringe::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config_path;
  std::string model = "eq27";
  std::string grating = "textbook";
  std::optional<double> target;
  std::optional<int> epochs;
  std::optional<std::string> out_dir;
  std::uint64_t seed = 20260415;
  std::size_t points = 100;
  int layers = 2;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "Configuration file (key = value)");
  cmd->add_option("--out", o.out_dir, "Output directory (overrides output.directory)");
  cmd->add_option("--target", o.target, "Target detection angle in rad");
  cmd->add_option("--epochs", o.epochs, "Maximum training epochs");
}

io::RunConfig resolve_config(const Options& o) {
  io::RunConfig cfg = o.config_path.empty() ? io::RunConfig{} : io::load_config(o.config_path);
  if (o.target) cfg.theta_target = *o.target;
  if (o.epochs) cfg.adam.max_epochs = *o.epochs;
  if (o.out_dir) cfg.out_dir = *o.out_dir;
  cfg.validate();
  return cfg;
}

GratingMode parse_grating(const std::string& s) {
  if (s == "textbook") return GratingMode::kTextbook;
  if (s == "paper-literal") return GratingMode::kPaperLiteral;
  throw ConfigError("--grating", "expected 'textbook' or 'paper-literal'");
}

void write_history(const io::RunConfig& cfg, const TrainingHistory& h) {
  if (cfg.wants("csv")) io::write_file_atomic(cfg.out_dir / "history.csv", io::history_to_csv(h));
  if (cfg.wants("svg")) io::write_file_atomic(cfg.out_dir / "loss.svg", io::loss_curve_svg(h));
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const auto cfg = resolve_config(o);
  if (o.model != "eq18" && o.model != "eq27") {
    throw ConfigError("--model", "expected 'eq18' or 'eq27'");
  }
  const GratingMode mode = parse_grating(o.grating);

  QubitParams params = cfg.source;
  if (cfg.source_train) {
    const auto history = train(cfg.adam, cfg.geom, cfg.source, cfg.theta_target);
    write_history(cfg, history);
    params = history.final_params;
  }
  const Pattern p = o.model == "eq27" ? pattern_steering(cfg.geom, params, cfg.grid())
                                      : pattern_basis(cfg.geom, params, cfg.grid(), mode);
  if (cfg.wants("csv")) io::write_file_atomic(cfg.out_dir / "pattern.csv", io::pattern_to_csv(p));
  if (cfg.wants("svg")) {
    io::write_file_atomic(cfg.out_dir / "pattern.svg",
                          io::pattern_svg(p, fmt::format("Far-field pattern ({})", o.model)));
  }
  out << fmt::format("simulate: model={} samples={} channels={} -> {}\n", o.model, p.grid.size(),
                     p.channel_count(), cfg.out_dir.string());
  return kOk;
}

int cmd_steer(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cfg = resolve_config(o);
  const SteeringSpec spec = cfg.steering_spec();
  SteeringResult r;
  try {
    r = run_steering(spec);
  } catch (const TrainingDivergedError& e) {
    write_history(cfg, e.partial());
    err << "error: " << e.what() << '\n';
    return kDiverged;
  }
  write_history(cfg, r.history);
  if (cfg.wants("json")) {
    io::write_file_atomic(cfg.out_dir / "result.json", io::steering_to_json(r, spec).dump(2) + "\n");
  }
  if (cfg.wants("csv")) {
    io::write_file_atomic(cfg.out_dir / "pattern.csv", io::pattern_to_csv(r.final_pattern));
  }
  if (cfg.wants("svg")) {
    io::write_file_atomic(cfg.out_dir / "pattern.svg",
                          io::pattern_svg(r.final_pattern, "Steered far-field pattern"));
  }
  out << fmt::format("steer: target={} peak={:.6f} delta_phi={:.6f} epochs={} success={}\n",
                     spec.theta_target, r.peak_angle, r.delta_phi, r.history.records.size(),
                     r.success);
  if (r.history.records.empty()) {
    err << "steer: no training performed (max_epochs = 0)\n";
    return kNotConverged;
  }
  return r.success ? kOk : kNotConverged;
}

int cmd_gradcheck(const Options& o, std::ostream& out) {
  const auto cfg = resolve_config(o);
  if (o.points < 1) throw ConfigError("--points", "must be >= 1");
  const auto points = random_params(o.points, o.seed);
  const auto report = check_gradient(points, cfg.geom, cfg.theta_target);
  io::write_file_atomic(cfg.out_dir / "gradcheck.json",
                        io::gradcheck_to_json(report, o.points, o.seed, kDefaultFdStep).dump(2) +
                            "\n");
  out << fmt::format("gradcheck: points={} excluded={} max_rel_error={:.3e} {}\n", o.points,
                     report.excluded, report.max_rel_error, report.passed() ? "PASS" : "FAIL");
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_layers(const Options& o, std::ostream& out) {
  const auto cfg = resolve_config(o);
  const auto iv = intensities(two_qubit_state(cfg.source));
  const auto layers = build_layers(iv, iv, o.layers);
  for (const auto& m : layers) {
    io::write_file_atomic(cfg.out_dir / fmt::format("layer_{}.csv", m.layer()),
                          io::layer_to_csv(m));
  }
  out << fmt::format("layers: k={} largest side={} -> {}\n", o.layers, layers.back().side(),
                     cfg.out_dir.string());
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto cfg = resolve_config(o);
  const SteeringSpec spec = cfg.steering_spec();
  const auto results = sweep_targets(spec, cfg.sweep_targets);

  std::string csv = "target,success,peak_angle,delta_phi,final_loss,error\n";
  nlohmann::json j = nlohmann::json::array();
  std::size_t ok = 0;
  for (const auto& e : results) {
    if (e.result) {
      const auto& r = *e.result;
      ok += r.success ? 1 : 0;
      SteeringSpec s = spec;
      s.theta_target = e.target;
      csv += fmt::format("{},{},{},{},{},\n", io::format_double(e.target), r.success ? 1 : 0,
                         io::format_double(r.peak_angle), io::format_double(r.delta_phi),
                         io::format_double(loss(r.history.final_params, s.geom, e.target)));
      j.push_back(io::steering_to_json(r, s));
    } else {
      csv += fmt::format("{},0,,,,\"{}\"\n", io::format_double(e.target), e.error);
      j.push_back({{"theta_target", e.target}, {"success", false}, {"error", e.error}});
    }
  }
  if (cfg.wants("csv")) io::write_file_atomic(cfg.out_dir / "sweep.csv", csv);
  if (cfg.wants("json")) io::write_file_atomic(cfg.out_dir / "sweep.json", j.dump(2) + "\n");
  out << fmt::format("sweep: {}/{} targets steered\n", ok, results.size());
  return ok == results.size() ? kOk : kNotConverged;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fringe steering with a two-qubit Bloch-parameterized double-slit source",
               "fringesteer"};
  app.require_subcommand(1);
  Options o;

  auto* simulate = app.add_subcommand("simulate", "Evaluate a far-field pattern");
  add_common(simulate, o);
  simulate->add_option("--model", o.model, "Forward model: eq27 (steering) or eq18 (4-channel)");
  simulate->add_option("--grating", o.grating, "Grating factor: textbook or paper-literal");

  auto* steer = app.add_subcommand("steer", "Train the source phases toward a target angle");
  add_common(steer, o);

  auto* gradcheck = app.add_subcommand("gradcheck", "Compare analytic and numeric gradients");
  add_common(gradcheck, o);
  gradcheck->add_option("--points", o.points, "Number of random parameter points");
  gradcheck->add_option("--seed", o.seed, "Random seed");

  auto* layers = app.add_subcommand("layers", "Export Kronecker intensity layers");
  add_common(layers, o);
  layers->add_option("-k,--layers", o.layers, "Number of layers to build");

  auto* sweep = app.add_subcommand("sweep", "Steer independently to each configured target");
  add_common(sweep, o);
  sweep->add_option("--seed", o.seed, "Accepted for interface symmetry; sweeps are deterministic");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (steer->parsed()) return cmd_steer(o, out, err);
    if (gradcheck->parsed()) return cmd_gradcheck(o, out);
    if (layers->parsed()) return cmd_layers(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ResourceLimitError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const UnsupportedModelError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIoError;
  } catch (const TrainingDivergedError& e) {
    err << "error: " << e.what() << '\n';
    return kDiverged;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace fringe::cli
