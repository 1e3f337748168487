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

#include "phireg/report.h"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace phireg {

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void EmitCsv(const DynamicsLog& log, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : log.records) {
    out << r.t << ',' << r.player << ',' << FormatDouble(r.trigger_regret)
        << ',' << FormatDouble(r.external_regret) << ','
        << FormatDouble(r.trigger_regret / r.t) << '\n';
  }
}

void EmitSummary(const DynamicsLog& log, std::ostream& out) {
  using nlohmann::json;
  const DynamicsConfig& c = log.config;
  json config = {
      {"game", log.game},
      {"algorithm", AlgorithmName(c.algorithm)},
      {"mode", ModeName(c.mode)},
      {"T", c.T},
      {"eta", c.eta},
      {"eta_delta", log.eta_delta},
      {"checkpoints", log.checkpoints},
      {"seed", c.seed},
  };
  json players = json::array();
  for (const auto& r : log.final_records()) {
    players.push_back({{"player", r.player},
                       {"t", r.t},
                       {"trigger_regret", r.trigger_regret},
                       {"external_regret", r.external_regret},
                       {"avg_regret", r.trigger_regret / r.t},
                       {"max_fixed_point_residual", log.max_residual[r.player]}});
  }
  json summary = {{"config", config},
                  {"players", players},
                  {"equilibrium_gap", EquilibriumGap(log)},
                  {"wall_seconds", log.wall_seconds}};
  out << summary.dump(2) << '\n';
}

}  // namespace phireg
