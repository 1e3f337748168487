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

#include "phireg/regret_eval.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phireg {

TriggerRegretAccumulator::TriggerRegretAccumulator(const PlayerTreeIndex& index,
                                                   Mode mode)
    : index_(&index), mode_(mode) {
  const int n = NumTriggers(index, mode);
  weighted_.resize(n);
  for (int t = 0; t < n; ++t) {
    weighted_[t].assign(
        index.subtree(TriggerInfoset(index, mode, t)).to_global.size(), 0.0);
  }
  replaced_.assign(n, 0.0);
}

void TriggerRegretAccumulator::Add(std::span<const double> x,
                                   std::span<const double> u) {
  if (static_cast<int>(x.size()) != index_->num_seqs() ||
      static_cast<int>(u.size()) != index_->num_seqs()) {
    throw std::invalid_argument("trigger regret: dimension mismatch");
  }
  for (std::size_t t = 0; t < weighted_.size(); ++t) {
    const int ti = static_cast<int>(t);
    const Subtree& sub = index_->subtree(TriggerInfoset(*index_, mode_, ti));
    const double mass = x[TriggerMassSeq(*index_, mode_, ti)];
    for (std::size_t l = 0; l < sub.to_global.size(); ++l) {
      weighted_[t][l] += mass * u[sub.to_global[l]];
    }
    for (int s : TriggerReplaced(*index_, mode_, ti)) {
      replaced_[t] += x[s] * u[s];
    }
  }
  ++rounds_;
}

double TriggerRegretAccumulator::TriggerValue(int t) const {
  const Subtree& sub = index_->subtree(TriggerInfoset(*index_, mode_, t));
  return sub.domain.BestResponseValue(weighted_[t]) - replaced_[t];
}

double TriggerRegretAccumulator::Value() const {
  if (rounds_ == 0) throw std::invalid_argument("trigger regret: no rounds");
  double best = -INFINITY;
  for (std::size_t t = 0; t < weighted_.size(); ++t) {
    best = std::max(best, TriggerValue(static_cast<int>(t)));
  }
  return best;
}

double TriggerRegret(const PlayerTreeIndex& index, Mode mode,
                     std::span<const std::vector<double>> strategies,
                     std::span<const std::vector<double>> utilities) {
  if (strategies.empty() || strategies.size() != utilities.size()) {
    throw std::invalid_argument(
        "trigger regret: history must be nonempty and of matching lengths");
  }
  TriggerRegretAccumulator acc(index, mode);
  for (std::size_t t = 0; t < strategies.size(); ++t) {
    acc.Add(strategies[t], utilities[t]);
  }
  return acc.Value();
}

PolytopeRegretAccumulator::PolytopeRegretAccumulator(
    const PlayerTreeIndex& index)
    : tracker_(index.domain()) {}

void PolytopeRegretAccumulator::Add(std::span<const double> x,
                                    std::span<const double> u) {
  // x[∅] = 1 for every strategy, so u[∅] cancels from the regret.
  tracker_.Add(x.subspan(1), u.subspan(1));
}

double ExternalRegretOverPolytope(
    const PlayerTreeIndex& index,
    std::span<const std::vector<double>> strategies,
    std::span<const std::vector<double>> utilities) {
  if (strategies.empty() || strategies.size() != utilities.size()) {
    throw std::invalid_argument(
        "external regret: history must be nonempty and of matching lengths");
  }
  PolytopeRegretAccumulator acc(index);
  for (std::size_t t = 0; t < strategies.size(); ++t) {
    acc.Add(strategies[t], utilities[t]);
  }
  return acc.Value();
}

double EquilibriumGap(std::span<const double> regrets,
                      std::span<const int> rounds) {
  if (regrets.empty() || regrets.size() != rounds.size()) {
    throw std::invalid_argument("equilibrium gap: one entry per player");
  }
  for (int r : rounds) {
    if (r != rounds[0] || r <= 0) {
      throw std::invalid_argument(
          "equilibrium gap: players must share a positive horizon");
    }
  }
  double worst = 0;
  for (double r : regrets) worst = std::max(worst, r);
  return worst / rounds[0];
}

}  // namespace phireg
