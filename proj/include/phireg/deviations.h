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

#ifndef PHIREG_DEVIATIONS_H_
#define PHIREG_DEVIATIONS_H_

#include <span>
#include <vector>

#include "phireg/tree_index.h"

namespace phireg {

enum class Mode { kEfce, kEfcce };

// Triggers are numbered densely. In EFCE mode trigger t is the sequence
// t + 1 (every non-empty sequence); in EFCCE mode it is infoset t.
int NumTriggers(const PlayerTreeIndex& index, Mode mode);
// Information set whose subtree the continuation lives in.
int TriggerInfoset(const PlayerTreeIndex& index, Mode mode, int t);
// Sequence whose mass activates the deviation: σ̂ itself, or σ_j.
int TriggerMassSeq(const PlayerTreeIndex& index, Mode mode, int t);
// Sequences whose own play is discarded when the deviation fires.
std::span<const int> TriggerReplaced(const PlayerTreeIndex& index, Mode mode,
                                     int t);

// A point of Ψ_i (EFCE) or Ψ̃_i (EFCCE): a distribution over triggers and one
// continuation per trigger, each stored in global coordinates.
struct TriggerProfile {
  Mode mode = Mode::kEfce;
  std::vector<double> lambda;
  std::vector<SeqVec> continuations;
};

// U = u ⊗ x, kept factored.
struct RankOneUtility {
  std::span<const double> u;
  std::span<const double> x;
};

// M_{σ̂→q} x. Throws std::invalid_argument unless sigma_hat ∈ Σ*_i.
SeqVec ApplyTriggerDeviation(const PlayerTreeIndex& index, int sigma_hat,
                             std::span<const double> q,
                             std::span<const double> x);
// M_{j→q} x. Throws std::invalid_argument unless j ∈ 𝒥_i.
SeqVec ApplyCoarseDeviation(const PlayerTreeIndex& index, int j,
                            std::span<const double> q,
                            std::span<const double> x);
SeqVec ApplyDeviation(const PlayerTreeIndex& index, Mode mode, int t,
                      std::span<const double> q, std::span<const double> x);

// <M x, u> in O(|Σ_i|) without forming M.
double DeviationValue(const PlayerTreeIndex& index, Mode mode, int t,
                      std::span<const double> q, const RankOneUtility& U);

// The part of U that the continuation of trigger t interacts with, in the
// local coordinates of subtree(TriggerInfoset(t)): v[σ] = u[σ] · x[mass].
std::vector<double> LocalUtilityForTrigger(const PlayerTreeIndex& index,
                                           Mode mode, int t,
                                           const RankOneUtility& U);

// φ(x) = Σ_t λ[t] · M_t x.
SeqVec ApplyProfile(const PlayerTreeIndex& index, const TriggerProfile& phi,
                    std::span<const double> x);
// ‖φ(x) − x‖_∞.
double FixedPointResidual(const PlayerTreeIndex& index,
                          const TriggerProfile& phi, std::span<const double> x);

}  // namespace phireg

#endif  // PHIREG_DEVIATIONS_H_
