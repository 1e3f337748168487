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

#ifndef PHIREG_GAME_H_
#define PHIREG_GAME_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace phireg {

// Raised for malformed trees, bad game specs and perfect-recall violations.
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NodeKind { kChance, kDecision, kTerminal };

struct Node {
  NodeKind kind = NodeKind::kTerminal;
  // Owning player for decision nodes, -1 otherwise.
  int player = -1;
  // Nodes of one player sharing a key form one information set.
  std::string infoset_key;
  std::vector<int> children;
  // Chance nodes only; parallel to `children`.
  std::vector<double> chance_probs;
  // Terminal nodes only; one entry per player.
  std::vector<double> payoffs;
};

// Immutable rooted game tree. Payoffs are stored normalized into [-1, 1].
class GameTree {
 public:
  const std::string& name() const { return name_; }
  int num_players() const { return num_players_; }
  int root() const { return root_; }
  const Node& node(int id) const { return nodes_[id]; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  // Largest |payoff| before normalization; stored payoffs were divided by it.
  double max_abs_raw_payoff() const { return max_abs_raw_payoff_; }

 private:
  friend class GameBuilder;
  std::string name_;
  int num_players_ = 0;
  int root_ = -1;
  std::vector<Node> nodes_;
  double max_abs_raw_payoff_ = 1.0;
};

// Bottom-up construction: children are created before their parent, and the
// root is handed to Finish(), which validates and normalizes.
class GameBuilder {
 public:
  explicit GameBuilder(int num_players);

  int Terminal(std::vector<double> payoffs);
  int Decision(int player, std::string infoset_key, std::vector<int> children);
  int Chance(std::vector<double> probs, std::vector<int> children);

  // Divides payoffs by the largest absolute raw payoff (if nonzero) and checks
  // the tree invariants. The builder is left empty afterwards.
  GameTree Finish(int root, std::string name);

 private:
  int num_players_;
  std::vector<Node> nodes_;
};

}  // namespace phireg

#endif  // PHIREG_GAME_H_
