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

#ifndef PHIREG_DYNAMICS_H_
#define PHIREG_DYNAMICS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phireg/deviations.h"
#include "phireg/parallel.h"
#include "phireg/psi_minimizer.h"
#include "phireg/sequence_form.h"

namespace phireg {

struct DynamicsConfig {
  Algorithm algorithm = Algorithm::kLrlOftrl;
  Mode mode = Mode::kEfce;
  int T = 1000;
  double eta = 1.0;
  // Overrides eta / (2 |Σ_i|) for every player when set.
  std::optional<double> eta_delta;
  double epsilon = kBaselineEpsilon;
  // The learners are deterministic; the seed is only echoed into the log.
  std::uint64_t seed = 0;
  // Strictly increasing, each in [1, T]. Empty means powers of two plus T.
  std::vector<int> checkpoints;
  // Keep every x^t and u^t in the log.
  bool record_history = true;
  ExecPolicy policy = ExecPolicy::kSerial;
};

// What one player did in one round.
struct PlayerStep {
  const TriggerProfile* profile = nullptr;
  const SeqVec* strategy = nullptr;
  const SeqVec* utility = nullptr;
  const PsiMinimizer* minimizer = nullptr;
  double residual = 0;  // ‖φ(x) − x‖_∞
};

// Called after every round, once all players have observed their utility.
using StepObserver = std::function<void(int t, std::span<const PlayerStep>)>;

struct CheckpointRecord {
  int t = 0;
  int player = 0;
  double trigger_regret = 0;   // hindsight, from the realized play
  double external_regret = 0;  // over Q_i
  double psi_regret = 0;       // the composed minimizer's own account
  double delta_regret = 0;
  double local_regret = 0;     // Σ_σ̂ max{0, Reg_σ̂}
};

struct DynamicsLog {
  std::string game;
  DynamicsConfig config;
  std::vector<double> eta_delta;  // per player
  std::vector<int> checkpoints;
  // [player][t - 1]; empty unless config.record_history.
  std::vector<std::vector<SeqVec>> strategies;
  std::vector<std::vector<SeqVec>> utilities;
  // Ordered by checkpoint, then player.
  std::vector<CheckpointRecord> records;
  std::vector<double> max_residual;  // per player, over all rounds
  double wall_seconds = 0;

  int num_players() const { return static_cast<int>(eta_delta.size()); }
  // Records of the last checkpoint, one per player.
  std::span<const CheckpointRecord> final_records() const;
};

std::vector<int> PowerOfTwoCheckpoints(int T);

// Throws std::invalid_argument on a bad configuration; learner failures
// (SolverError) and fixed-point errors propagate.
DynamicsLog RunDynamics(const IndexedGame& game, const DynamicsConfig& config,
                        const StepObserver& observer = {});

double EquilibriumGap(const DynamicsLog& log);

}  // namespace phireg

#endif  // PHIREG_DYNAMICS_H_
