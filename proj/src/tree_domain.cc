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

#include "phireg/tree_domain.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phireg {

TreeDomain::TreeDomain(std::span<const int> parent_seq,
                       std::span<const int> num_actions) {
  if (parent_seq.size() != num_actions.size()) {
    throw std::invalid_argument("TreeDomain: mismatched decision point data");
  }
  points_.resize(parent_seq.size());
  for (std::size_t k = 0; k < parent_seq.size(); ++k) {
    if (num_actions[k] < 1) {
      throw std::invalid_argument("TreeDomain: decision point without actions");
    }
    if (parent_seq[k] != kRootParent &&
        (parent_seq[k] < 0 || parent_seq[k] >= num_seqs_)) {
      throw std::invalid_argument("TreeDomain: parent sequence not earlier");
    }
    points_[k] = {parent_seq[k], num_seqs_, num_actions[k]};
    num_seqs_ += num_actions[k];
  }
  seq_point_.resize(num_seqs_);
  seq_children_.resize(num_seqs_);
  for (int k = 0; k < num_points(); ++k) {
    const DecisionPoint& p = points_[k];
    for (int a = 0; a < p.num_actions; ++a) seq_point_[p.first_seq + a] = k;
    if (p.parent_seq == kRootParent) {
      roots_.push_back(k);
    } else {
      seq_children_[p.parent_seq].push_back(k);
    }
  }
}

TreeDomain TreeDomain::Simplex(int d) {
  const int parent[] = {kRootParent};
  const int actions[] = {d};
  return TreeDomain(parent, actions);
}

std::vector<double> TreeDomain::Uniform() const {
  std::vector<double> x(num_seqs_);
  for (const DecisionPoint& p : points_) {
    const double mass = p.parent_seq == kRootParent ? 1.0 : x[p.parent_seq];
    for (int a = 0; a < p.num_actions; ++a) {
      x[p.first_seq + a] = mass / p.num_actions;
    }
  }
  return x;
}

double TreeDomain::MaxL1() const {
  std::vector<double> ones(num_seqs_, 1.0), scratch(num_seqs_);
  return BestResponse(ones, scratch);
}

double TreeDomain::FlowViolation(std::span<const double> x, double mass) const {
  double worst = 0;
  for (const DecisionPoint& p : points_) {
    double total = 0;
    for (int a = 0; a < p.num_actions; ++a) total += x[p.first_seq + a];
    const double in = p.parent_seq == kRootParent ? mass : x[p.parent_seq];
    worst = std::max(worst, std::abs(total - in));
  }
  for (int s = 0; s < num_seqs_; ++s) worst = std::max(worst, -x[s]);
  return worst;
}

double TreeDomain::BestResponse(std::span<const double> u,
                                std::span<double> out) const {
  // value[s]: best utility collectable at and below sequence s.
  std::vector<double> value(u.begin(), u.begin() + num_seqs_);
  std::vector<int> choice(points_.size());
  std::vector<double> point_value(points_.size());
  for (int k = num_points() - 1; k >= 0; --k) {
    const DecisionPoint& p = points_[k];
    int best = 0;
    for (int a = 0; a < p.num_actions; ++a) {
      const int s = p.first_seq + a;
      for (int c : seq_children_[s]) value[s] += point_value[c];
      if (value[s] > value[p.first_seq + best]) best = a;
    }
    choice[k] = best;
    point_value[k] = value[p.first_seq + best];
  }
  std::fill(out.begin(), out.begin() + num_seqs_, 0.0);
  double total = 0;
  for (int k = 0; k < num_points(); ++k) {
    const DecisionPoint& p = points_[k];
    const bool reached =
        p.parent_seq == kRootParent || out[p.parent_seq] > 0.5;
    if (!reached) continue;
    out[p.first_seq + choice[k]] = 1.0;
  }
  for (int r : roots_) total += point_value[r];
  return total;
}

double TreeDomain::BestResponseValue(std::span<const double> u) const {
  std::vector<double> scratch(num_seqs_);
  return BestResponse(u, scratch);
}

}  // namespace phireg
