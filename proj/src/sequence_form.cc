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

#include "phireg/sequence_form.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace phireg {
namespace {

void CollectLeaves(const GameTree& game,
                   const std::vector<PlayerTreeIndex>& indices, int node_id,
                   double chance, std::vector<int>& seqs,
                   std::vector<IndexedGame::Leaf>& out) {
  const Node& node = game.node(node_id);
  switch (node.kind) {
    case NodeKind::kTerminal:
      out.push_back({chance, seqs, node.payoffs});
      return;
    case NodeKind::kChance:
      for (std::size_t a = 0; a < node.children.size(); ++a) {
        CollectLeaves(game, indices, node.children[a],
                      chance * node.chance_probs[a], seqs, out);
      }
      return;
    case NodeKind::kDecision: {
      const PlayerTreeIndex& idx = indices[node.player];
      const int j = idx.FindInfoset(node.infoset_key);
      const int saved = seqs[node.player];
      for (std::size_t a = 0; a < node.children.size(); ++a) {
        seqs[node.player] = idx.infoset(j).first_seq + static_cast<int>(a);
        CollectLeaves(game, indices, node.children[a], chance, seqs, out);
      }
      seqs[node.player] = saved;
      return;
    }
  }
}

void CheckProfile(const IndexedGame& g, const Profile& profile, int skip) {
  if (static_cast<int>(profile.size()) != g.num_players()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) +
                                " entries for a " +
                                std::to_string(g.num_players()) +
                                "-player game");
  }
  for (int p = 0; p < g.num_players(); ++p) {
    if (p == skip) continue;
    if (static_cast<int>(profile[p].size()) != g.index(p).num_seqs()) {
      throw std::invalid_argument("profile entry of player " +
                                  std::to_string(p) +
                                  " does not match its sequence index");
    }
  }
}

}  // namespace

IndexedGame::IndexedGame(GameTree game) : game_(std::move(game)) {
  for (int p = 0; p < game_.num_players(); ++p) {
    indices_.push_back(BuildIndex(game_, p));
  }
  std::vector<int> seqs(game_.num_players(), PlayerTreeIndex::kEmptySeq);
  CollectLeaves(game_, indices_, game_.root(), 1.0, seqs, leaves_);
}

SeqVec UtilityGradient(const IndexedGame& g, int player,
                       const Profile& profile) {
  CheckProfile(g, profile, player);
  SeqVec u(g.index(player).num_seqs(), 0.0);
  for (const auto& leaf : g.leaves()) {
    double w = leaf.chance * leaf.payoffs[player];
    for (int p = 0; p < g.num_players() && w != 0.0; ++p) {
      if (p != player) w *= profile[p][leaf.seqs[p]];
    }
    u[leaf.seqs[player]] += w;
  }
  return u;
}

std::vector<double> ExpectedUtilities(const IndexedGame& g,
                                      const Profile& profile) {
  CheckProfile(g, profile, -1);
  std::vector<double> value(g.num_players(), 0.0);
  for (const auto& leaf : g.leaves()) {
    double reach = leaf.chance;
    for (int p = 0; p < g.num_players(); ++p) reach *= profile[p][leaf.seqs[p]];
    for (int p = 0; p < g.num_players(); ++p) {
      value[p] += reach * leaf.payoffs[p];
    }
  }
  return value;
}

BestResponse ComputeBestResponse(const PlayerTreeIndex& index,
                                 std::span<const double> u,
                                 std::optional<int> root) {
  if (static_cast<int>(u.size()) != index.num_seqs()) {
    throw std::invalid_argument("best response: utility has wrong length");
  }
  BestResponse br;
  br.strategy.assign(index.num_seqs(), 0.0);
  if (!root) {
    std::vector<double> local(index.num_seqs() - 1);
    br.value = u[PlayerTreeIndex::kEmptySeq] +
               index.domain().BestResponse(u.subspan(1), local);
    br.strategy[PlayerTreeIndex::kEmptySeq] = 1.0;
    for (std::size_t l = 0; l < local.size(); ++l) br.strategy[l + 1] = local[l];
    return br;
  }
  const Subtree& sub = index.subtree(*root);
  std::vector<double> local_u(sub.to_global.size()), local(sub.to_global.size());
  for (std::size_t l = 0; l < local_u.size(); ++l) local_u[l] = u[sub.to_global[l]];
  br.value = sub.domain.BestResponse(local_u, local);
  for (std::size_t l = 0; l < local.size(); ++l) {
    br.strategy[sub.to_global[l]] = local[l];
  }
  return br;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace phireg
