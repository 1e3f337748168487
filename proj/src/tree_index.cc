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

#include "phireg/tree_index.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace phireg {

PerfectRecallError::PerfectRecallError(int player, const std::string& key)
    : GameError("perfect recall violated for player " + std::to_string(player) +
                " at information set '" + key + "'"),
      key_(key) {}

namespace {

struct IndexWalker {
  const GameTree& game;
  int player;
  std::map<std::string, int> infoset_ids;
  std::vector<PlayerTreeIndex::Infoset> infosets;
  int next_seq = 1;

  void Walk(int node_id, int seq) {
    const Node& node = game.node(node_id);
    if (node.kind == NodeKind::kTerminal) return;
    if (node.kind == NodeKind::kDecision && node.player == player) {
      auto [it, inserted] = infoset_ids.emplace(
          node.infoset_key, static_cast<int>(infosets.size()));
      if (inserted) {
        PlayerTreeIndex::Infoset info;
        info.key = node.infoset_key;
        info.parent_seq = seq;
        info.first_seq = next_seq;
        info.num_actions = static_cast<int>(node.children.size());
        next_seq += info.num_actions;
        infosets.push_back(std::move(info));
      } else if (infosets[it->second].parent_seq != seq) {
        throw PerfectRecallError(player, node.infoset_key);
      }
      const int first = infosets[it->second].first_seq;
      for (std::size_t a = 0; a < node.children.size(); ++a) {
        Walk(node.children[a], first + static_cast<int>(a));
      }
      return;
    }
    for (int c : node.children) Walk(c, seq);
  }
};

}  // namespace

int PlayerTreeIndex::FindInfoset(const std::string& key) const {
  for (int j = 0; j < num_infosets(); ++j) {
    if (infosets_[j].key == key) return j;
  }
  return -1;
}

bool PlayerTreeIndex::Precedes(int a, int b) const {
  if (a == kEmptySeq) return true;
  if (b == kEmptySeq) return false;
  const auto& path = seq_path_[b];
  return std::binary_search(path.begin(), path.end(), a);
}

bool PlayerTreeIndex::InSubtree(int s, int j) const {
  if (s == kEmptySeq) return false;
  const auto& path = infoset_path_[seq_infoset_[s]];
  return std::binary_search(path.begin(), path.end(), j);
}

PlayerTreeIndex BuildIndex(const GameTree& game, int player) {
  if (player < 0 || player >= game.num_players()) {
    throw GameError("BuildIndex: unknown player " + std::to_string(player));
  }
  IndexWalker walker{game, player, {}, {}, 1};
  walker.Walk(game.root(), PlayerTreeIndex::kEmptySeq);

  PlayerTreeIndex idx;
  idx.player_ = player;
  idx.infosets_ = std::move(walker.infosets);
  const int n_seq = walker.next_seq;
  const int n_inf = idx.num_infosets();

  idx.seq_infoset_.assign(n_seq, -1);
  for (int j = 0; j < n_inf; ++j) {
    const auto& info = idx.infosets_[j];
    for (int a = 0; a < info.num_actions; ++a) {
      idx.seq_infoset_[info.first_seq + a] = j;
    }
    idx.max_actions_ = std::max(idx.max_actions_, info.num_actions);
  }

  idx.infoset_path_.resize(n_inf);
  for (int j = 0; j < n_inf; ++j) {
    const int parent = idx.infosets_[j].parent_seq;
    if (parent != PlayerTreeIndex::kEmptySeq) {
      idx.infoset_path_[j] = idx.infoset_path_[idx.seq_infoset_[parent]];
    }
    idx.infoset_path_[j].push_back(j);
  }

  idx.seq_path_.resize(n_seq);
  idx.seq_desc_.resize(n_seq);
  idx.subtree_seqs_.resize(n_inf);
  for (int s = 1; s < n_seq; ++s) {
    const int parent = idx.seq_parent(s);
    if (parent != PlayerTreeIndex::kEmptySeq) {
      idx.seq_path_[s] = idx.seq_path_[parent];
    }
    idx.seq_path_[s].push_back(s);
    idx.depth_ = std::max(idx.depth_, static_cast<int>(idx.seq_path_[s].size()));
    for (int anc : idx.seq_path_[s]) idx.seq_desc_[anc].push_back(s);
    for (int j : idx.infoset_path_[idx.seq_infoset_[s]]) {
      idx.subtree_seqs_[j].push_back(s);
    }
  }

  std::vector<int> parents, actions;
  for (const auto& info : idx.infosets_) {
    parents.push_back(info.parent_seq == PlayerTreeIndex::kEmptySeq
                          ? TreeDomain::kRootParent
                          : info.parent_seq - 1);
    actions.push_back(info.num_actions);
  }
  idx.domain_ = TreeDomain(parents, actions);
  idx.q_norm_ = 1.0 + (n_inf > 0 ? idx.domain_.MaxL1() : 0.0);

  idx.subtrees_.resize(n_inf);
  std::vector<int> to_local(n_seq, -1);
  for (int j = 0; j < n_inf; ++j) {
    Subtree& sub = idx.subtrees_[j];
    sub.infoset = j;
    std::vector<int> sub_parents, sub_actions;
    for (int k = j; k < n_inf; ++k) {
      if (!std::binary_search(idx.infoset_path_[k].begin(),
                              idx.infoset_path_[k].end(), j)) {
        continue;
      }
      const auto& info = idx.infosets_[k];
      sub_parents.push_back(k == j ? TreeDomain::kRootParent
                                   : to_local[info.parent_seq]);
      sub_actions.push_back(info.num_actions);
      for (int a = 0; a < info.num_actions; ++a) {
        to_local[info.first_seq + a] = static_cast<int>(sub.to_global.size());
        sub.to_global.push_back(info.first_seq + a);
      }
    }
    sub.domain = TreeDomain(sub_parents, sub_actions);
  }
  return idx;
}

double FlowViolation(const PlayerTreeIndex& index, std::span<const double> x) {
  if (static_cast<int>(x.size()) != index.num_seqs()) {
    throw std::invalid_argument("FlowViolation: vector has wrong length");
  }
  double worst = std::abs(x[PlayerTreeIndex::kEmptySeq] - 1.0);
  worst = std::max(worst, index.domain().FlowViolation(x.subspan(1), 1.0));
  return worst;
}

double SubtreeFlowViolation(const PlayerTreeIndex& index, int j,
                            std::span<const double> q) {
  const Subtree& sub = index.subtree(j);
  std::vector<double> local(sub.to_global.size());
  for (std::size_t l = 0; l < local.size(); ++l) local[l] = q[sub.to_global[l]];
  return sub.domain.FlowViolation(local, 1.0);
}

bool IsSequenceForm(const PlayerTreeIndex& index, std::span<const double> x,
                    double tol) {
  return static_cast<int>(x.size()) == index.num_seqs() &&
         FlowViolation(index, x) <= tol;
}

SeqVec BehavioralToSequence(const PlayerTreeIndex& index,
                            const std::vector<std::vector<double>>& behavior) {
  if (static_cast<int>(behavior.size()) != index.num_infosets()) {
    throw std::invalid_argument("BehavioralToSequence: wrong infoset count");
  }
  SeqVec x(index.num_seqs(), 0.0);
  x[PlayerTreeIndex::kEmptySeq] = 1.0;
  for (int j = 0; j < index.num_infosets(); ++j) {
    const auto& info = index.infoset(j);
    for (int a = 0; a < info.num_actions; ++a) {
      x[info.first_seq + a] = x[info.parent_seq] * behavior[j][a];
    }
  }
  return x;
}

SeqVec UniformStrategy(const PlayerTreeIndex& index) {
  std::vector<std::vector<double>> behavior;
  for (int j = 0; j < index.num_infosets(); ++j) {
    const int n = index.infoset(j).num_actions;
    behavior.emplace_back(n, 1.0 / n);
  }
  return BehavioralToSequence(index, behavior);
}

SeqVec ConditionalBelow(const PlayerTreeIndex& index, int j,
                        std::span<const double> x) {
  SeqVec q(index.num_seqs(), 0.0);
  for (int s : index.subtree_seqs(j)) {
    const int k = index.seq_infoset(s);
    const auto& info = index.infoset(k);
    if (s != info.first_seq) continue;
    const double in = k == j ? 1.0 : q[info.parent_seq];
    const double mass = x[info.parent_seq];
    for (int a = 0; a < info.num_actions; ++a) {
      const double cond =
          mass > 0 ? x[info.first_seq + a] / mass : 1.0 / info.num_actions;
      q[info.first_seq + a] = in * cond;
    }
  }
  return q;
}

}  // namespace phireg
