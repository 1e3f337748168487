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

#ifndef PHIREG_REGRET_MATCHING_H_
#define PHIREG_REGRET_MATCHING_H_

#include <span>
#include <vector>

#include "phireg/regret_minimizer.h"
#include "phireg/tree_domain.h"

namespace phireg {

// Strategy proportional to the positive parts of `regrets`; uniform when no
// entry is positive.
void RegretMatchingStrategy(std::span<const double> regrets,
                            std::span<double> out);

// RM (plus = false) or RM+ (plus = true) on the d-simplex. With epsilon > 0
// every output is mixed with that much uniform mass, which keeps it interior.
class RegretMatching : public RegretMinimizer {
 public:
  RegretMatching(int d, bool plus, double epsilon = 0.0);

  int dimension() const override { return static_cast<int>(regrets_.size()); }
  std::span<const double> regrets() const { return regrets_; }

 protected:
  std::span<const double> DoNextStrategy() override;
  void DoObserveUtility(std::span<const double> u) override;

 private:
  bool plus_;
  double epsilon_;
  std::vector<double> regrets_;
  std::vector<double> x_;
};

// CFR over a TreeDomain: one RM/RM+ rule per decision point, driven by
// counterfactual values. Outputs are sequence-form points of the domain.
class CfrLearner : public RegretMinimizer {
 public:
  CfrLearner(TreeDomain domain, bool plus, double epsilon = 0.0);

  int dimension() const override { return domain_.num_seqs(); }
  const TreeDomain& domain() const { return domain_; }
  // Current behavioral strategy, indexed like the sequences.
  std::span<const double> behavior() const { return behavior_; }

 protected:
  std::span<const double> DoNextStrategy() override;
  void DoObserveUtility(std::span<const double> u) override;

 private:
  TreeDomain domain_;
  bool plus_;
  double epsilon_;
  std::vector<double> regrets_;   // per sequence
  std::vector<double> behavior_;  // per sequence
  std::vector<double> x_;
  std::vector<double> cfv_;
  std::vector<double> point_value_;
};

}  // namespace phireg

#endif  // PHIREG_REGRET_MATCHING_H_
