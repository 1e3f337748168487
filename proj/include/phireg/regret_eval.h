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

#ifndef PHIREG_REGRET_EVAL_H_
#define PHIREG_REGRET_EVAL_H_

#include <span>
#include <vector>

#include "phireg/deviations.h"
#include "phireg/regret_minimizer.h"
#include "phireg/tree_index.h"

namespace phireg {

// Hindsight (coarse) trigger regret of a strategy/utility history, updated one
// round at a time. For every trigger it accumulates the weighted subtree
// utility w[σ] = Σ_τ x^τ[mass] · u^τ[σ] over Σ_j and the utility b of the
// play the trigger replaces; the regret is max over triggers of
// BR(w) − b. Linearity makes the best λ-mixture a single trigger.
class TriggerRegretAccumulator {
 public:
  TriggerRegretAccumulator(const PlayerTreeIndex& index, Mode mode);

  void Add(std::span<const double> x, std::span<const double> u);
  double Value() const;
  // Regret against trigger t alone.
  double TriggerValue(int t) const;
  int rounds() const { return rounds_; }

 private:
  const PlayerTreeIndex* index_;
  Mode mode_;
  std::vector<std::vector<double>> weighted_;  // local subtree coordinates
  std::vector<double> replaced_;
  int rounds_ = 0;
};

// One-shot versions. Both throw std::invalid_argument on an empty history.
double TriggerRegret(const PlayerTreeIndex& index, Mode mode,
                     std::span<const std::vector<double>> strategies,
                     std::span<const std::vector<double>> utilities);

// External regret over Q_i of a history in global coordinates.
double ExternalRegretOverPolytope(
    const PlayerTreeIndex& index,
    std::span<const std::vector<double>> strategies,
    std::span<const std::vector<double>> utilities);

// Incremental form of ExternalRegretOverPolytope.
class PolytopeRegretAccumulator {
 public:
  explicit PolytopeRegretAccumulator(const PlayerTreeIndex& index);
  void Add(std::span<const double> x, std::span<const double> u);
  double Value() const { return tracker_.Value(); }

 private:
  ExternalRegretTracker tracker_;
};

// max_i max{0, regret_i} / T. Throws std::invalid_argument when the players'
// round counts differ or are zero.
double EquilibriumGap(std::span<const double> regrets,
                      std::span<const int> rounds);

}  // namespace phireg

#endif  // PHIREG_REGRET_EVAL_H_
