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

#ifndef PHIREG_SEQUENCE_FORM_H_
#define PHIREG_SEQUENCE_FORM_H_

#include <optional>
#include <span>
#include <vector>

#include "phireg/game.h"
#include "phireg/tree_index.h"

namespace phireg {

// A game together with every player's sequence index and a flat table of
// terminals. Immutable once built; safe to share across threads.
class IndexedGame {
 public:
  explicit IndexedGame(GameTree game);

  struct Leaf {
    double chance = 1.0;          // product of chance probabilities
    std::vector<int> seqs;        // last sequence of each player
    std::vector<double> payoffs;  // normalized
  };

  const GameTree& game() const { return game_; }
  int num_players() const { return game_.num_players(); }
  const PlayerTreeIndex& index(int player) const { return indices_[player]; }
  std::span<const Leaf> leaves() const { return leaves_; }

 private:
  GameTree game_;
  std::vector<PlayerTreeIndex> indices_;
  std::vector<Leaf> leaves_;
};

// Joint strategy profile: one sequence-form vector per player.
using Profile = std::vector<SeqVec>;

// Gradient of player i's expected utility with respect to x_i:
//   u[σ] = Σ_{z: seq_i(z)=σ} payoff_i(z) · chance(z) · Π_{i'≠i} x_{i'}[seq_{i'}(z)].
// The player's own entry of `profile` is ignored.
SeqVec UtilityGradient(const IndexedGame& g, int player, const Profile& profile);

// Expected utility of every player under the profile.
std::vector<double> ExpectedUtilities(const IndexedGame& g,
                                      const Profile& profile);

struct BestResponse {
  SeqVec strategy;  // pure, global coordinates (zero outside the subtree)
  double value = 0;
};

// Maximizes <x, u> over Π_i (root = nullopt) or over Π_j (root = j); ties go
// to the lowest action index.
BestResponse ComputeBestResponse(const PlayerTreeIndex& index,
                                 std::span<const double> u,
                                 std::optional<int> root = std::nullopt);

double Dot(std::span<const double> a, std::span<const double> b);

}  // namespace phireg

#endif  // PHIREG_SEQUENCE_FORM_H_
