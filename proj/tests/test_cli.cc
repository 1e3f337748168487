// Copyright 2026 The phireg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "phireg/cli.h"
#include "phireg/dynamics.h"
#include "phireg/games.h"
#include "phireg/report.h"

namespace phireg {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Run(std::vector<std::string> args) {
  args.insert(args.begin(), "phireg_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("phireg_cli_test_" + name);
}

TEST_CASE("default run on the micro game") {
  const CliRun r = Run({"--T", "100"});
  CHECK(r.code == kExitOk);
  const auto rows = ParseCsv(r.out);
  REQUIRE(!rows.empty());
  CHECK(r.out.substr(0, r.out.find('\n')) == kCsvHeader);
  // Checkpoints 1, 2, 4, ..., 64, 100 for two players.
  CHECK(rows.size() == 1 + 2 * 8);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(Run({"--T", "0"}).code == kExitConfig);
  CHECK(Run({"--eta", "-1"}).code == kExitConfig);
  CHECK(Run({"--game", "nope"}).code == kExitConfig);
  CHECK(Run({"--alg", "sgd"}).code == kExitConfig);
  CHECK(Run({"--mode", "nash"}).code == kExitConfig);
  CHECK(Run({"--T", "10", "--checkpoints", "5,3"}).code == kExitConfig);
  CHECK(Run({"--T", "10", "--checkpoints", "20"}).code == kExitConfig);
  const CliRun r = Run({"--unknown-flag"});
  CHECK(r.code == kExitConfig);
  CHECK(!r.err.empty());
}

TEST_CASE("three-player kuhn with the CFR baseline") {
  const CliRun r = Run({"--game", "kuhn:players=3,ranks=3", "--alg", "cfr-rm", "--T", "50",
                        "--mode", "efcce"});
  REQUIRE(r.code == kExitOk);
  const auto rows = ParseCsv(r.out);
  CHECK(rows.size() == 1 + 3 * 7);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    REQUIRE(rows[k].size() == 5);
    for (int c = 2; c < 5; ++c) CHECK(std::isfinite(std::stod(rows[k][c])));
  }
}

TEST_CASE("explicit checkpoints and parse-back") {
  const CliRun r = Run({"--T", "2", "--checkpoints", "1,2"});
  REQUIRE(r.code == kExitOk);
  const auto rows = ParseCsv(r.out);
  REQUIRE(rows.size() == 5);
  DynamicsConfig cfg;
  cfg.T = 2;
  cfg.checkpoints = {1, 2};
  const DynamicsLog log = RunDynamics(IndexedGame(MakeMicro()), cfg);
  for (std::size_t k = 0; k < log.records.size(); ++k) {
    const auto& rec = log.records[k];
    const auto& row = rows[k + 1];
    CHECK(std::stoi(row[0]) == rec.t);
    CHECK(std::stoi(row[1]) == rec.player);
    CHECK(std::abs(std::stod(row[2]) - rec.trigger_regret) <= 1e-11 * (1 + std::abs(rec.trigger_regret)));
    CHECK(std::abs(std::stod(row[3]) - rec.external_regret) <= 1e-11 * (1 + std::abs(rec.external_regret)));
    CHECK(std::abs(std::stod(row[4]) - rec.trigger_regret / rec.t) <= 1e-11);
  }
}

TEST_CASE("reruns are byte identical and files match stdout") {
  const std::vector<std::string> args = {"--game", "kuhn:players=2,ranks=3", "--T", "40",
                                         "--seed", "7"};
  const CliRun a = Run(args);
  const CliRun b = Run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);

  const auto csv = TempPath("out.csv");
  const auto json_path = TempPath("out.json");
  std::vector<std::string> with_files = args;
  with_files.insert(with_files.end(), {"--out-csv", csv.string(), "--out-json", json_path.string()});
  const CliRun c = Run(with_files);
  REQUIRE(c.code == kExitOk);
  std::ifstream csv_in(csv);
  std::stringstream csv_text;
  csv_text << csv_in.rdbuf();
  CHECK(csv_text.str() == a.out);

  std::ifstream json_in(json_path);
  const auto summary = nlohmann::json::parse(json_in);
  DynamicsConfig cfg;
  cfg.T = 40;
  const DynamicsLog log = RunDynamics(IndexedGame(MakeKuhn(2, 3)), cfg);
  CHECK(summary["equilibrium_gap"].get<double>() == EquilibriumGap(log));
  CHECK(summary["config"]["seed"].get<int>() == 7);
  CHECK(summary["config"]["algorithm"] == "lrl-oftrl");
  CHECK(summary["players"].size() == 2);
  for (const auto& p : summary["players"]) {
    CHECK(p["max_fixed_point_residual"].get<double>() <= 1e-9);
  }
  std::filesystem::remove(csv);
  std::filesystem::remove(json_path);
}

}  // namespace
}  // namespace phireg
