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

#include "phireg/cli.h"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phireg/dynamics.h"
#include "phireg/games.h"
#include "phireg/lrl_oftrl.h"
#include "phireg/report.h"

namespace phireg {
namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> ParseCheckpoints(const std::string& text) {
  if (text.empty() || text == "pow2") return {};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw ConfigError("--checkpoints: '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Uncoupled trigger-regret dynamics in extensive-form games"};
  std::string game_spec = "micro";
  std::string alg = "lrl-oftrl";
  std::string mode = "efce";
  int T = 1000;
  double eta = 1.0;
  std::optional<double> eta_delta;
  std::string checkpoints = "pow2";
  std::string out_csv, out_json;
  std::uint64_t seed = 0;

  app.add_option("--game", game_spec, "Game spec, e.g. kuhn:players=3,ranks=3");
  app.add_option("--alg", alg, "lrl-oftrl | cfr-rm | cfr-rm+");
  app.add_option("--mode", mode, "efce | efcce");
  app.add_option("--T", T, "Number of iterations");
  app.add_option("--eta", eta, "Learning rate of the local learners");
  app.add_option("--eta-delta", eta_delta,
                 "Learning rate over triggers (default eta / (2|Σ_i|))");
  app.add_option("--checkpoints", checkpoints, "Comma list, or pow2");
  app.add_option("--out-csv", out_csv, "Regret curves (default: stdout)");
  app.add_option("--out-json", out_json, "Run summary");
  app.add_option("--seed", seed, "Echoed into the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  DynamicsConfig config;
  std::ofstream csv_file, json_file;
  try {
    const auto parsed_alg = ParseAlgorithm(alg);
    if (!parsed_alg) throw ConfigError("--alg: unknown algorithm '" + alg + "'");
    const auto parsed_mode = ParseMode(mode);
    if (!parsed_mode) throw ConfigError("--mode: unknown mode '" + mode + "'");
    if (T < 1) throw ConfigError("--T must be at least 1");
    if (!(eta > 0)) throw ConfigError("--eta must be positive");
    if (eta_delta && !(*eta_delta > 0)) {
      throw ConfigError("--eta-delta must be positive");
    }
    config.algorithm = *parsed_alg;
    config.mode = *parsed_mode;
    config.T = T;
    config.eta = eta;
    config.eta_delta = eta_delta;
    config.seed = seed;
    config.checkpoints = ParseCheckpoints(checkpoints);
    config.record_history = false;
    if (!out_csv.empty()) {
      csv_file.open(out_csv);
      if (!csv_file) throw ConfigError("--out-csv: cannot write " + out_csv);
    }
    if (!out_json.empty()) {
      json_file.open(out_json);
      if (!json_file) throw ConfigError("--out-json: cannot write " + out_json);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::optional<IndexedGame> game;
  try {
    game.emplace(LoadGame(game_spec));
  } catch (const GameError& e) {
    err << "error: --game: " << e.what() << '\n';
    return kExitConfig;
  }

  DynamicsLog log;
  try {
    log = RunDynamics(*game, config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "runtime failure: " << e.what() << '\n';
    return kExitRuntime;
  }

  if (csv_file.is_open()) {
    EmitCsv(log, csv_file);
  } else {
    EmitCsv(log, out);
  }
  if (json_file.is_open()) EmitSummary(log, json_file);
  if ((csv_file.is_open() && !csv_file) || (json_file.is_open() && !json_file)) {
    err << "runtime failure: could not finish writing output\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace phireg
