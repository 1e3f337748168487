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

#include "phireg/deviations.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace phireg {
namespace {

void CheckSizes(const PlayerTreeIndex& index, std::span<const double> q,
                std::span<const double> x) {
  const auto n = static_cast<std::size_t>(index.num_seqs());
  if (q.size() != n || x.size() != n) {
    throw std::invalid_argument("deviation: vectors must span all sequences");
  }
}

void CheckTrigger(const PlayerTreeIndex& index, Mode mode, int t) {
  if (t < 0 || t >= NumTriggers(index, mode)) {
    throw std::invalid_argument("deviation: trigger " + std::to_string(t) +
                                " out of range");
  }
}

}  // namespace

int NumTriggers(const PlayerTreeIndex& index, Mode mode) {
  return mode == Mode::kEfce ? index.num_seqs() - 1 : index.num_infosets();
}

int TriggerInfoset(const PlayerTreeIndex& index, Mode mode, int t) {
  return mode == Mode::kEfce ? index.seq_infoset(t + 1) : t;
}

int TriggerMassSeq(const PlayerTreeIndex& index, Mode mode, int t) {
  return mode == Mode::kEfce ? t + 1 : index.infoset(t).parent_seq;
}

std::span<const int> TriggerReplaced(const PlayerTreeIndex& index, Mode mode,
                                     int t) {
  return mode == Mode::kEfce ? index.seq_descendants(t + 1)
                             : index.subtree_seqs(t);
}

SeqVec ApplyDeviation(const PlayerTreeIndex& index, Mode mode, int t,
                      std::span<const double> q, std::span<const double> x) {
  CheckTrigger(index, mode, t);
  CheckSizes(index, q, x);
  SeqVec out(x.begin(), x.end());
  for (int s : TriggerReplaced(index, mode, t)) out[s] = 0.0;
  const double mass = x[TriggerMassSeq(index, mode, t)];
  for (int s : index.subtree_seqs(TriggerInfoset(index, mode, t))) {
    out[s] += q[s] * mass;
  }
  return out;
}

SeqVec ApplyTriggerDeviation(const PlayerTreeIndex& index, int sigma_hat,
                             std::span<const double> q,
                             std::span<const double> x) {
  if (sigma_hat <= PlayerTreeIndex::kEmptySeq ||
      sigma_hat >= index.num_seqs()) {
    throw std::invalid_argument("trigger sequence " +
                                std::to_string(sigma_hat) + " is not in Σ*");
  }
  return ApplyDeviation(index, Mode::kEfce, sigma_hat - 1, q, x);
}

SeqVec ApplyCoarseDeviation(const PlayerTreeIndex& index, int j,
                            std::span<const double> q,
                            std::span<const double> x) {
  if (j < 0 || j >= index.num_infosets()) {
    throw std::invalid_argument("trigger infoset " + std::to_string(j) +
                                " does not exist");
  }
  return ApplyDeviation(index, Mode::kEfcce, j, q, x);
}

double DeviationValue(const PlayerTreeIndex& index, Mode mode, int t,
                      std::span<const double> q, const RankOneUtility& U) {
  CheckTrigger(index, mode, t);
  CheckSizes(index, q, U.x);
  double kept = 0;
  for (std::size_t s = 0; s < U.u.size(); ++s) kept += U.x[s] * U.u[s];
  for (int s : TriggerReplaced(index, mode, t)) kept -= U.x[s] * U.u[s];
  double cont = 0;
  for (int s : index.subtree_seqs(TriggerInfoset(index, mode, t))) {
    cont += q[s] * U.u[s];
  }
  return kept + U.x[TriggerMassSeq(index, mode, t)] * cont;
}

std::vector<double> LocalUtilityForTrigger(const PlayerTreeIndex& index,
                                           Mode mode, int t,
                                           const RankOneUtility& U) {
  CheckTrigger(index, mode, t);
  const Subtree& sub = index.subtree(TriggerInfoset(index, mode, t));
  const double mass = U.x[TriggerMassSeq(index, mode, t)];
  std::vector<double> v(sub.to_global.size());
  for (std::size_t l = 0; l < v.size(); ++l) {
    v[l] = U.u[sub.to_global[l]] * mass;
  }
  return v;
}

SeqVec ApplyProfile(const PlayerTreeIndex& index, const TriggerProfile& phi,
                    std::span<const double> x) {
  const int n = NumTriggers(index, phi.mode);
  if (static_cast<int>(phi.lambda.size()) != n ||
      static_cast<int>(phi.continuations.size()) != n) {
    throw std::invalid_argument("trigger profile does not match the index");
  }
  SeqVec out(index.num_seqs(), 0.0);
  for (int t = 0; t < n; ++t) {
    const SeqVec m = ApplyDeviation(index, phi.mode, t, phi.continuations[t], x);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] += phi.lambda[t] * m[s];
  }
  return out;
}

double FixedPointResidual(const PlayerTreeIndex& index,
                          const TriggerProfile& phi,
                          std::span<const double> x) {
  const SeqVec y = ApplyProfile(index, phi, x);
  double worst = 0;
  for (std::size_t s = 0; s < y.size(); ++s) {
    worst = std::max(worst, std::abs(y[s] - x[s]));
  }
  return worst;
}

}  // namespace phireg
