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

#ifndef PHIREG_TREE_DOMAIN_H_
#define PHIREG_TREE_DOMAIN_H_

#include <span>
#include <vector>

namespace phireg {

// A sequence-form domain: a forest of decision points hanging below a single
// root mass. Coordinates are the sequences (decision point, action); those of
// one decision point are contiguous, and every decision point is listed after
// the decision point owning its parent sequence. A probability simplex is the
// one-decision-point case; the subtree polytope rooted at an information set
// is the one-root case; a full sequence-form polytope minus its empty
// sequence has one root per root information set.
class TreeDomain {
 public:
  static constexpr int kRootParent = -1;

  struct DecisionPoint {
    int parent_seq = kRootParent;
    int first_seq = 0;
    int num_actions = 0;
  };

  TreeDomain() = default;
  // `parent_seq[k]` is the parent sequence of decision point k, which must be
  // kRootParent or a sequence of an earlier decision point.
  TreeDomain(std::span<const int> parent_seq, std::span<const int> num_actions);

  static TreeDomain Simplex(int d);

  int num_seqs() const { return num_seqs_; }
  int num_points() const { return static_cast<int>(points_.size()); }
  const DecisionPoint& point(int k) const { return points_[k]; }
  int seq_point(int s) const { return seq_point_[s]; }
  std::span<const int> children(int s) const { return seq_children_[s]; }
  std::span<const int> roots() const { return roots_; }

  // Sequence-form vector of the uniform behavioral strategy, root mass 1.
  std::vector<double> Uniform() const;
  // Largest l1 norm of a point with root mass 1 (attained at a pure point).
  double MaxL1() const;
  // Largest deviation from the flow constraints when the root mass is `mass`.
  double FlowViolation(std::span<const double> x, double mass = 1.0) const;
  // Pure point maximizing <x, u>, ties to the lowest action index. Writes the
  // point into `out` and returns the value.
  double BestResponse(std::span<const double> u, std::span<double> out) const;
  double BestResponseValue(std::span<const double> u) const;

 private:
  int num_seqs_ = 0;
  std::vector<DecisionPoint> points_;
  std::vector<int> seq_point_;
  std::vector<std::vector<int>> seq_children_;
  std::vector<int> roots_;
};

}  // namespace phireg

#endif  // PHIREG_TREE_DOMAIN_H_
