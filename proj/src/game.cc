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

#include "phireg/game.h"

#include <cmath>
#include <map>
#include <utility>

namespace phireg {

GameBuilder::GameBuilder(int num_players) : num_players_(num_players) {
  if (num_players < 1) throw GameError("a game needs at least one player");
}

int GameBuilder::Terminal(std::vector<double> payoffs) {
  if (static_cast<int>(payoffs.size()) != num_players_) {
    throw GameError("terminal payoff vector has wrong length");
  }
  Node n;
  n.kind = NodeKind::kTerminal;
  n.payoffs = std::move(payoffs);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int GameBuilder::Decision(int player, std::string infoset_key,
                          std::vector<int> children) {
  if (player < 0 || player >= num_players_) {
    throw GameError("decision node owned by unknown player");
  }
  Node n;
  n.kind = NodeKind::kDecision;
  n.player = player;
  n.infoset_key = std::move(infoset_key);
  n.children = std::move(children);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int GameBuilder::Chance(std::vector<double> probs, std::vector<int> children) {
  if (probs.size() != children.size()) {
    throw GameError("chance node needs one probability per child");
  }
  Node n;
  n.kind = NodeKind::kChance;
  n.chance_probs = std::move(probs);
  n.children = std::move(children);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

GameTree GameBuilder::Finish(int root, std::string name) {
  const int n = static_cast<int>(nodes_.size());
  if (root < 0 || root >= n) throw GameError("root node out of range");

  std::vector<int> parent_count(n, 0);
  for (const Node& node : nodes_) {
    if (node.kind != NodeKind::kTerminal && node.children.empty()) {
      throw GameError("non-terminal node without actions");
    }
    for (int c : node.children) {
      if (c < 0 || c >= n) throw GameError("child index out of range");
      ++parent_count[c];
    }
    if (node.kind == NodeKind::kChance) {
      double total = 0;
      for (double p : node.chance_probs) {
        if (!(p >= 0)) throw GameError("negative chance probability");
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-12) {
        throw GameError("chance probabilities do not sum to 1");
      }
    }
  }
  if (parent_count[root] != 0) throw GameError("root has a parent");

  // Reachability from the root; together with in-degree <= 1 this is a tree.
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {root};
  int reached = 0;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (seen[id]) throw GameError("node reachable along two paths");
    seen[id] = 1;
    ++reached;
    for (int c : nodes_[id].children) stack.push_back(c);
  }
  for (int id = 0; id < n; ++id) {
    if (parent_count[id] > 1) throw GameError("node has several parents");
  }
  if (reached != n) throw GameError("tree contains unreachable nodes");

  // Nodes in one information set must agree on their action count.
  std::map<std::pair<int, std::string>, std::size_t> arity;
  for (const Node& node : nodes_) {
    if (node.kind != NodeKind::kDecision) continue;
    auto [it, inserted] =
        arity.emplace(std::make_pair(node.player, node.infoset_key),
                      node.children.size());
    if (!inserted && it->second != node.children.size()) {
      throw GameError("information set '" + node.infoset_key +
                      "' has nodes with different action counts");
    }
  }

  double max_abs = 0;
  for (const Node& node : nodes_) {
    for (double u : node.payoffs) max_abs = std::max(max_abs, std::abs(u));
  }
  if (max_abs > 0) {
    for (Node& node : nodes_) {
      for (double& u : node.payoffs) u /= max_abs;
    }
  }

  GameTree tree;
  tree.name_ = std::move(name);
  tree.num_players_ = num_players_;
  tree.root_ = root;
  tree.nodes_ = std::move(nodes_);
  tree.max_abs_raw_payoff_ = max_abs > 0 ? max_abs : 1.0;
  nodes_.clear();
  return tree;
}

}  // namespace phireg
