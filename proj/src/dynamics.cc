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

#include "phireg/dynamics.h"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "phireg/fixed_point.h"
#include "phireg/regret_eval.h"

namespace phireg {

std::span<const CheckpointRecord> DynamicsLog::final_records() const {
  const std::size_t n = eta_delta.size();
  if (records.size() < n) return {};
  return std::span<const CheckpointRecord>(records).last(n);
}

std::vector<int> PowerOfTwoCheckpoints(int T) {
  std::vector<int> out;
  for (long long c = 1; c < T; c *= 2) out.push_back(static_cast<int>(c));
  out.push_back(T);
  return out;
}

DynamicsLog RunDynamics(const IndexedGame& game, const DynamicsConfig& config,
                        const StepObserver& observer) {
  if (config.T < 1) throw std::invalid_argument("T must be at least 1");
  if (!(config.eta > 0)) throw std::invalid_argument("eta must be positive");
  if (config.eta_delta && !(*config.eta_delta > 0)) {
    throw std::invalid_argument("eta-delta must be positive");
  }
  std::vector<int> checkpoints = config.checkpoints.empty()
                                     ? PowerOfTwoCheckpoints(config.T)
                                     : config.checkpoints;
  for (std::size_t k = 0; k < checkpoints.size(); ++k) {
    if (checkpoints[k] < 1 || checkpoints[k] > config.T ||
        (k > 0 && checkpoints[k] <= checkpoints[k - 1])) {
      throw std::invalid_argument(
          "checkpoints must be strictly increasing and within [1, T]");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const int n = game.num_players();
  LearnerConfig learner{config.algorithm, config.eta, config.eta_delta,
                        config.epsilon};

  DynamicsLog log;
  log.game = game.game().name();
  log.config = config;
  log.checkpoints = checkpoints;
  log.max_residual.assign(n, 0.0);
  if (config.record_history) {
    log.strategies.resize(n);
    log.utilities.resize(n);
  }

  std::vector<PsiMinimizer> psi;
  std::vector<TriggerRegretAccumulator> trigger;
  std::vector<PolytopeRegretAccumulator> external;
  for (int i = 0; i < n; ++i) {
    psi.emplace_back(game.index(i), config.mode, learner);
    trigger.emplace_back(game.index(i), config.mode);
    external.emplace_back(game.index(i));
    log.eta_delta.push_back(psi.back().eta_delta());
  }

  Profile x(n);
  std::vector<SeqVec> u(n);
  std::vector<PlayerStep> steps(n);
  std::size_t next_checkpoint = 0;
  for (int t = 1; t <= config.T; ++t) {
    ForEach(n, config.policy, [&](int i) {
      const TriggerProfile& phi = psi[i].NextStrategy();
      x[i] = FixedPoint(game.index(i), phi);
      steps[i].profile = &phi;
      steps[i].residual = FixedPointResidual(game.index(i), phi, x[i]);
    });
    ForEach(n, config.policy, [&](int i) {
      u[i] = UtilityGradient(game, i, x);
      psi[i].ObserveUtility({u[i], x[i]});
      trigger[i].Add(x[i], u[i]);
      external[i].Add(x[i], u[i]);
    });
    for (int i = 0; i < n; ++i) {
      log.max_residual[i] = std::max(log.max_residual[i], steps[i].residual);
      if (config.record_history) {
        log.strategies[i].push_back(x[i]);
        log.utilities[i].push_back(u[i]);
      }
      steps[i].strategy = &x[i];
      steps[i].utility = &u[i];
      steps[i].minimizer = &psi[i];
    }
    if (next_checkpoint < checkpoints.size() &&
        checkpoints[next_checkpoint] == t) {
      for (int i = 0; i < n; ++i) {
        log.records.push_back({t, i, trigger[i].Value(), external[i].Value(),
                               psi[i].Regret(), psi[i].DeltaRegret(),
                               psi[i].PositiveLocalRegretSum()});
      }
      ++next_checkpoint;
    }
    if (observer) observer(t, steps);
  }
  log.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return log;
}

double EquilibriumGap(const DynamicsLog& log) {
  const auto last = log.final_records();
  std::vector<double> regrets;
  std::vector<int> rounds;
  for (const auto& r : last) {
    regrets.push_back(r.trigger_regret);
    rounds.push_back(r.t);
  }
  return EquilibriumGap(regrets, rounds);
}

}  // namespace phireg
