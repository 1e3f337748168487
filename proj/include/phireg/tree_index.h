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

#ifndef PHIREG_TREE_INDEX_H_
#define PHIREG_TREE_INDEX_H_

#include <span>
#include <string>
#include <vector>

#include "phireg/game.h"
#include "phireg/tree_domain.h"

namespace phireg {

class PerfectRecallError : public GameError {
 public:
  PerfectRecallError(int player, const std::string& infoset_key);
  const std::string& infoset_key() const { return key_; }

 private:
  std::string key_;
};

// Sequence-form vectors are plain vectors indexed by global sequence id. For
// a subtree polytope Q_j the entries outside the subtree are zero.
using SeqVec = std::vector<double>;

// A subtree polytope Q_j as a standalone TreeDomain, with the map from its
// local coordinates back to global sequence ids.
struct Subtree {
  int infoset = -1;
  TreeDomain domain;
  std::vector<int> to_global;
};

// Per-player view of the game: information sets, sequences and the
// precedence relation between them. Sequence 0 is the empty sequence;
// sequences of one information set are contiguous, and information sets
// (hence sequences) are numbered in pre-order of first occurrence, so every
// ancestor has a smaller id than its descendants.
class PlayerTreeIndex {
 public:
  static constexpr int kEmptySeq = 0;

  struct Infoset {
    std::string key;
    int parent_seq = kEmptySeq;
    int first_seq = 1;
    int num_actions = 0;
  };

  int player() const { return player_; }
  int num_seqs() const { return static_cast<int>(seq_infoset_.size()); }
  int num_infosets() const { return static_cast<int>(infosets_.size()); }
  const Infoset& infoset(int j) const { return infosets_[j]; }
  // -1 for the empty sequence.
  int seq_infoset(int s) const { return seq_infoset_[s]; }
  int seq_action(int s) const { return s - infosets_[seq_infoset_[s]].first_seq; }
  // Parent sequence of a non-empty sequence.
  int seq_parent(int s) const { return infosets_[seq_infoset_[s]].parent_seq; }
  int FindInfoset(const std::string& key) const;

  // a ⪯ b (the empty sequence precedes everything).
  bool Precedes(int a, int b) const;
  // s ⪰ j: sequence s lies in the subtree rooted at infoset j.
  bool InSubtree(int s, int j) const;

  // Sequences of Σ_j in increasing order.
  std::span<const int> subtree_seqs(int j) const { return subtree_seqs_[j]; }
  // Information sets j' ⪯ j, root first, ending with j.
  std::span<const int> infoset_path(int j) const { return infoset_path_[j]; }
  // Non-empty sequences σ ⪯ s, root first, ending with s.
  std::span<const int> seq_path(int s) const { return seq_path_[s]; }
  // Sequences σ ⪰ s (including s) in increasing order; empty for s = ∅.
  std::span<const int> seq_descendants(int s) const { return seq_desc_[s]; }

  // Longest chain of the player's own decisions.
  int depth() const { return depth_; }
  int max_actions() const { return max_actions_; }
  // Largest l1 norm of a vector in Q_i (the empty sequence included).
  double q_norm() const { return q_norm_; }

  // Q_i without its fixed empty-sequence coordinate; local id = global id - 1.
  const TreeDomain& domain() const { return domain_; }
  const Subtree& subtree(int j) const { return subtrees_[j]; }

 private:
  friend PlayerTreeIndex BuildIndex(const GameTree& game, int player);

  int player_ = 0;
  std::vector<Infoset> infosets_;
  std::vector<int> seq_infoset_;
  std::vector<std::vector<int>> subtree_seqs_;
  std::vector<std::vector<int>> infoset_path_;
  std::vector<std::vector<int>> seq_path_;
  std::vector<std::vector<int>> seq_desc_;
  int depth_ = 0;
  int max_actions_ = 0;
  double q_norm_ = 1.0;
  TreeDomain domain_;
  std::vector<Subtree> subtrees_;
};

// Throws PerfectRecallError when two nodes of one information set are reached
// through different own sequences.
PlayerTreeIndex BuildIndex(const GameTree& game, int player);

// Largest violation of x[∅] = 1, the flow constraints and nonnegativity.
double FlowViolation(const PlayerTreeIndex& index, std::span<const double> x);
// Same for a subtree vector q ∈ Q_j stored in global coordinates.
double SubtreeFlowViolation(const PlayerTreeIndex& index, int j,
                            std::span<const double> q);
bool IsSequenceForm(const PlayerTreeIndex& index, std::span<const double> x,
                    double tol = 1e-9);

// Pushes a behavioral strategy (one distribution per information set) into
// sequence form.
SeqVec BehavioralToSequence(const PlayerTreeIndex& index,
                            const std::vector<std::vector<double>>& behavior);
SeqVec UniformStrategy(const PlayerTreeIndex& index);

// Conditional play of x below infoset j, as a vector of Q_j in global
// coordinates (uniform where x puts no mass).
SeqVec ConditionalBelow(const PlayerTreeIndex& index, int j,
                        std::span<const double> x);

}  // namespace phireg

#endif  // PHIREG_TREE_INDEX_H_
