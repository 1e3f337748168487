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

#include "phireg/regret_matching.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace phireg {
namespace {

void MixUniform(std::span<double> x, double epsilon) {
  if (epsilon <= 0) return;
  const double share = epsilon / static_cast<double>(x.size());
  for (double& v : x) v = (1.0 - epsilon) * v + share;
}

}  // namespace

void RegretMatchingStrategy(std::span<const double> regrets,
                            std::span<double> out) {
  double total = 0;
  for (double r : regrets) total += std::max(r, 0.0);
  if (total > 0) {
    for (std::size_t a = 0; a < regrets.size(); ++a) {
      out[a] = std::max(regrets[a], 0.0) / total;
    }
  } else {
    std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(out.size()));
  }
}

RegretMatching::RegretMatching(int d, bool plus, double epsilon)
    : plus_(plus), epsilon_(epsilon), regrets_(d, 0.0), x_(d) {
  if (d < 1) throw std::invalid_argument("RegretMatching: need d >= 1");
}

std::span<const double> RegretMatching::DoNextStrategy() {
  RegretMatchingStrategy(regrets_, x_);
  MixUniform(x_, epsilon_);
  return x_;
}

void RegretMatching::DoObserveUtility(std::span<const double> u) {
  double value = 0;
  for (std::size_t a = 0; a < u.size(); ++a) value += x_[a] * u[a];
  for (std::size_t a = 0; a < u.size(); ++a) {
    regrets_[a] += u[a] - value;
    if (plus_) regrets_[a] = std::max(regrets_[a], 0.0);
  }
}

CfrLearner::CfrLearner(TreeDomain domain, bool plus, double epsilon)
    : domain_(std::move(domain)),
      plus_(plus),
      epsilon_(epsilon),
      regrets_(domain_.num_seqs(), 0.0),
      behavior_(domain_.num_seqs()),
      x_(domain_.num_seqs()),
      cfv_(domain_.num_seqs()),
      point_value_(domain_.num_points()) {}

std::span<const double> CfrLearner::DoNextStrategy() {
  for (int k = 0; k < domain_.num_points(); ++k) {
    const auto& pt = domain_.point(k);
    std::span<double> b(behavior_.data() + pt.first_seq, pt.num_actions);
    RegretMatchingStrategy(
        std::span<const double>(regrets_.data() + pt.first_seq,
                                pt.num_actions),
        b);
    MixUniform(b, epsilon_);
    const double in =
        pt.parent_seq == TreeDomain::kRootParent ? 1.0 : x_[pt.parent_seq];
    for (int a = 0; a < pt.num_actions; ++a) {
      x_[pt.first_seq + a] = in * b[a];
    }
  }
  return x_;
}

void CfrLearner::DoObserveUtility(std::span<const double> u) {
  for (int k = domain_.num_points() - 1; k >= 0; --k) {
    const auto& pt = domain_.point(k);
    double value = 0;
    for (int a = 0; a < pt.num_actions; ++a) {
      const int s = pt.first_seq + a;
      double c = u[s];
      for (int child : domain_.children(s)) c += point_value_[child];
      cfv_[s] = c;
      value += behavior_[s] * c;
    }
    point_value_[k] = value;
    for (int a = 0; a < pt.num_actions; ++a) {
      const int s = pt.first_seq + a;
      regrets_[s] += cfv_[s] - value;
      if (plus_) regrets_[s] = std::max(regrets_[s], 0.0);
    }
  }
}

}  // namespace phireg
