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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "fringe/io.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

namespace fringe::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("fringe_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "fringesteer");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string write_config(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static std::vector<std::vector<double>> read_rows(const fs::path& p, bool skip_header = true) {
    std::ifstream in(p);
    std::string line;
    std::vector<std::vector<double>> rows;
    if (skip_header) std::getline(in, line);
    while (std::getline(in, line)) {
      std::vector<double> row;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  fs::path dir_;
};

TEST_F(CliTest, SimulateInPhaseMaxOnAxis) {
  const auto cfg = write_config("a.cfg", "source.phi1 = 0\nsource.phi2 = 0\n");
  const auto r = run_cli({"simulate", "--config", cfg, "--model", "eq27", "--out", dir_.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = read_rows(dir_ / "pattern.csv");
  ASSERT_EQ(rows.size(), 2001u);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i][1] > rows[best][1]) best = i;
  EXPECT_NEAR(rows[best][0], 0.0, 1e-12);
  EXPECT_TRUE(fs::exists(dir_ / "pattern.svg"));
}

TEST_F(CliTest, SimulateFourChannelDarkAtPi) {
  const auto cfg = write_config("b.cfg", "source.phi1 = 0\nsource.phi2 = 3.141592653589793\n");
  const auto r = run_cli({"simulate", "--config", cfg, "--model", "eq18", "--out", dir_.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = read_rows(dir_ / "pattern.csv");
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 5u);
    for (std::size_t c = 1; c < 5; ++c) ASSERT_LE(row[c], 1e-12);
  }
}

TEST_F(CliTest, SimulateFinalParamsPeakNearTarget) {
  const auto cfg = write_config(
      "c.cfg", "source.theta1 = 1.6470\nsource.phi1 = 1.5674\nsource.theta2 = 1.6470\n"
               "source.phi2 = -1.5674\n");
  const auto r = run_cli({"simulate", "--config", cfg, "--out", dir_.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Pattern p = io::pattern_from_csv(slurp(dir_ / "pattern.csv"));
  EXPECT_NEAR(fringe_peak(p, 0.04, 0.04), 0.04, 1e-3);
}

TEST_F(CliTest, SimulatePaperLiteralGrating) {
  const auto cfg = write_config("d.cfg", "source.phi1 = 0\nsource.phi2 = 0\n");
  const auto r = run_cli({"simulate", "--config", cfg, "--model", "eq18", "--grating",
                          "paper-literal", "--out", dir_.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(run_cli({"simulate", "--grating", "fancy", "--out", dir_.string()}).code,
            kConfigError);
  EXPECT_EQ(run_cli({"simulate", "--model", "eq99", "--out", dir_.string()}).code, kConfigError);
}

TEST_F(CliTest, SimulateTrainModeWritesHistory) {
  const auto cfg = write_config("e.cfg", "source.mode = train\noptimizer.max_epochs = 5\n");
  const auto r = run_cli({"simulate", "--config", cfg, "--out", dir_.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(read_rows(dir_ / "history.csv").size(), 5u);
}

TEST_F(CliTest, SteerDefaults) {
  const auto r = run_cli({"steer", "--out", dir_.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string hist = slurp(dir_ / "history.csv");
  EXPECT_EQ(hist.substr(0, hist.find('\n')), io::kHistoryHeader);
  const auto rows = read_rows(dir_ / "history.csv");
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0][0], 1.0);
  EXPECT_EQ(rows[0][2], 1.6708);
  EXPECT_EQ(rows[0][3], 0.1);

  const auto j = nlohmann::json::parse(slurp(dir_ / "result.json"));
  EXPECT_TRUE(j.at("success").get<bool>());
  EXPECT_NEAR(j.at("peak_angle").get<double>(), 0.04, 1e-3);
  EXPECT_NEAR(std::abs(j.at("delta_phi").get<double>()), kPi, 0.15);
  EXPECT_TRUE(fs::exists(dir_ / "pattern.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "loss.svg"));
  EXPECT_TRUE(fs::exists(dir_ / "pattern.svg"));
}

TEST_F(CliTest, SteerZeroEpochs) {
  const auto r = run_cli({"steer", "--epochs", "0", "--out", dir_.string()});
  EXPECT_EQ(r.code, kNotConverged);
  EXPECT_EQ(slurp(dir_ / "history.csv"), std::string(io::kHistoryHeader) + "\n");
}

TEST_F(CliTest, SteerDiverged) {
  const auto cfg = write_config("f.cfg", "optimizer.learning_rate = 1e308\n");
  const auto r = run_cli({"steer", "--config", cfg, "--out", dir_.string()});
  EXPECT_EQ(r.code, kDiverged);
  EXPECT_GE(read_rows(dir_ / "history.csv").size(), 1u);
}

TEST_F(CliTest, GradcheckDeterministic) {
  const auto a = dir_ / "a";
  const auto b = dir_ / "b";
  EXPECT_EQ(run_cli({"gradcheck", "--points", "1", "--seed", "7", "--out", a.string()}).code, kOk);
  EXPECT_EQ(run_cli({"gradcheck", "--points", "1", "--seed", "7", "--out", b.string()}).code, kOk);
  EXPECT_EQ(slurp(a / "gradcheck.json"), slurp(b / "gradcheck.json"));
}

TEST_F(CliTest, GradcheckHundredPoints) {
  const auto r = run_cli({"gradcheck", "--points", "100", "--out", dir_.string()});
  EXPECT_EQ(r.code, kOk) << r.out;
  const auto j = nlohmann::json::parse(slurp(dir_ / "gradcheck.json"));
  EXPECT_LE(j.at("max_rel_error").get<double>(), 1e-6);
  EXPECT_EQ(j.at("n_points").get<int>(), 100);
  EXPECT_EQ(run_cli({"gradcheck", "--points", "0", "--out", dir_.string()}).code, kConfigError);
}

TEST_F(CliTest, LayersUniform) {
  const auto cfg = write_config(
      "g.cfg", "source.theta1 = 1.5707963267948966\nsource.theta2 = 1.5707963267948966\n");
  ASSERT_EQ(run_cli({"layers", "--config", cfg, "-k", "1", "--out", dir_.string()}).code, kOk);
  const auto rows = read_rows(dir_ / "layer_1.csv");
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 4u);
    for (double x : row) EXPECT_NEAR(x, 0.0625, 1e-15);
  }
}

TEST_F(CliTest, LayersSecondSumsToOne) {
  ASSERT_EQ(run_cli({"layers", "-k", "2", "--out", dir_.string()}).code, kOk);
  const auto rows = read_rows(dir_ / "layer_2.csv");
  ASSERT_EQ(rows.size(), 16u);
  double sum = 0.0;
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 16u);
    for (double x : row) sum += x;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_TRUE(fs::exists(dir_ / "layer_1.csv"));
}

TEST_F(CliTest, LayersBeyondCap) {
  const auto r = run_cli({"layers", "-k", "5", "--out", dir_.string()});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("65536"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"layers", "-k", "0", "--out", dir_.string()}).code, kConfigError);
}

TEST_F(CliTest, InvalidConfigNamesField) {
  const auto cfg = write_config("h.cfg", "geometry.d = -3\n");
  const auto r = run_cli({"steer", "--config", cfg, "--out", dir_.string()});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("geometry.d"), std::string::npos) << r.err;

  const auto unknown = write_config("i.cfg", "geometry.slits = 2\n");
  const auto u = run_cli({"simulate", "--config", unknown, "--out", dir_.string()});
  EXPECT_EQ(u.code, kConfigError);
  EXPECT_NE(u.err.find("geometry.slits"), std::string::npos);

  EXPECT_EQ(run_cli({"steer", "--target", "0.5", "--out", dir_.string()}).code, kConfigError);
  EXPECT_EQ(run_cli({"bogus"}).code, kConfigError);
  EXPECT_EQ(run_cli({}).code, kConfigError);
}

TEST_F(CliTest, MissingConfigIsIoError) {
  EXPECT_EQ(run_cli({"simulate", "--config", (dir_ / "absent.cfg").string()}).code, kIoError);
}

TEST_F(CliTest, WriteFailureIsIoError) {
  std::ofstream(dir_ / "blocker") << "x";
  const auto r = run_cli({"simulate", "--out", (dir_ / "blocker" / "sub").string()});
  EXPECT_EQ(r.code, kIoError);
  EXPECT_NE(r.err.find("io error"), std::string::npos);
}

TEST_F(CliTest, SweepSmall) {
  const auto cfg = write_config("j.cfg", "experiment.sweep_targets = -0.02, 0.04\n");
  const auto r = run_cli({"sweep", "--config", cfg, "--out", dir_.string()});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  const auto j = nlohmann::json::parse(slurp(dir_ / "sweep.json"));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[1].at("success").get<bool>());
  EXPECT_EQ(read_rows(dir_ / "sweep.csv").size(), 2u);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, kOk); }

TEST_F(CliTest, BinarySmoke) {
  const std::string cmd = std::string(FRINGESTEER_BIN) + " layers -k 1 --out " +
                          dir_.string() + " > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "layer_1.csv"));
}

}  // namespace
}  // namespace fringe::cli
