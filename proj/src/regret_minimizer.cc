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

#include "phireg/regret_minimizer.h"

#include <utility>

namespace phireg {

ExternalRegretTracker::ExternalRegretTracker(TreeDomain domain)
    : domain_(std::move(domain)), cum_u_(domain_.num_seqs(), 0.0) {}

void ExternalRegretTracker::Add(std::span<const double> x,
                                std::span<const double> u) {
  if (static_cast<int>(x.size()) != domain_.num_seqs() ||
      static_cast<int>(u.size()) != domain_.num_seqs()) {
    throw std::invalid_argument("ExternalRegretTracker: dimension mismatch");
  }
  double inner = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cum_u_[k] += u[k];
    inner += x[k] * u[k];
  }
  realized_ += inner;
  ++rounds_;
}

double ExternalRegretTracker::Value() const {
  return domain_.BestResponseValue(cum_u_) - realized_;
}

double ExternalRegret(const TreeDomain& domain,
                      std::span<const std::vector<double>> strategies,
                      std::span<const std::vector<double>> utilities) {
  if (strategies.empty() || strategies.size() != utilities.size()) {
    throw std::invalid_argument(
        "ExternalRegret: history must be nonempty and of matching lengths");
  }
  ExternalRegretTracker tracker(domain);
  for (std::size_t t = 0; t < strategies.size(); ++t) {
    tracker.Add(strategies[t], utilities[t]);
  }
  return tracker.Value();
}

}  // namespace phireg
