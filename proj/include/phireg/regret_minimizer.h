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

#ifndef PHIREG_REGRET_MINIMIZER_H_
#define PHIREG_REGRET_MINIMIZER_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "phireg/tree_domain.h"

namespace phireg {

class AlternationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Online linear optimization over a TreeDomain. Every round is one call to
// NextStrategy() followed by one call to ObserveUtility(); any other order
// throws AlternationError.
class RegretMinimizer {
 public:
  virtual ~RegretMinimizer() = default;

  std::span<const double> NextStrategy() {
    if (awaiting_utility_) {
      throw AlternationError("NextStrategy called twice without a utility");
    }
    awaiting_utility_ = true;
    return DoNextStrategy();
  }

  void ObserveUtility(std::span<const double> u) {
    if (!awaiting_utility_) {
      throw AlternationError("ObserveUtility called without NextStrategy");
    }
    if (static_cast<int>(u.size()) != dimension()) {
      throw std::invalid_argument("utility dimension mismatch");
    }
    awaiting_utility_ = false;
    DoObserveUtility(u);
  }

  virtual int dimension() const = 0;

 protected:
  virtual std::span<const double> DoNextStrategy() = 0;
  virtual void DoObserveUtility(std::span<const double> u) = 0;

 private:
  bool awaiting_utility_ = false;
};

// Running external regret of a strategy sequence over a domain: the best
// fixed point in hindsight against the summed utilities, minus the realized
// utility.
class ExternalRegretTracker {
 public:
  explicit ExternalRegretTracker(TreeDomain domain);

  void Add(std::span<const double> x, std::span<const double> u);
  double Value() const;
  int rounds() const { return rounds_; }
  std::span<const double> cumulative_utility() const { return cum_u_; }
  double realized() const { return realized_; }

 private:
  TreeDomain domain_;
  std::vector<double> cum_u_;
  double realized_ = 0;
  int rounds_ = 0;
};

// Exact hindsight regret of the history (x^(t), u^(t)) over `domain`.
// Throws std::invalid_argument on an empty history.
double ExternalRegret(const TreeDomain& domain,
                      std::span<const std::vector<double>> strategies,
                      std::span<const std::vector<double>> utilities);

}  // namespace phireg

#endif  // PHIREG_REGRET_MINIMIZER_H_
