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

#ifndef PHIREG_LRL_OFTRL_H_
#define PHIREG_LRL_OFTRL_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "phireg/regret_minimizer.h"
#include "phireg/tree_domain.h"

namespace phireg {

// Raised when the barrier solver fails to reach its tolerance.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point (λ, y) of the lifted set {(λ, y) : λ ∈ [0, 1], y ∈ λ·D}. Lifted
// vectors put the λ slot first.
struct LiftedPoint {
  double lambda = 1.0;
  std::vector<double> y;

  // The underlying domain point y / λ.
  std::vector<double> Point() const;
};

struct BarrierSolveStats {
  int newton_steps = 0;
  // Newton decrement at the returned point: the norm of the projected
  // gradient measured in the local norm of the iterate.
  double residual = 0;
  // True when the optimum sits on λ = 1.
  bool lambda_at_one = true;
};

inline constexpr double kBarrierTolerance = 1e-10;
inline constexpr int kMaxNewtonSteps = 100;

// Lifted utility (-<x, u>, u).
std::vector<double> LiftUtility(std::span<const double> u,
                                std::span<const double> x);

// argmax over the lifted set of  eta·<s, (λ, y)> + log λ + Σ log y,
// where `s` has the λ slot first. Damped Newton on the tree-structured KKT
// system; `warm` (if given) seeds the iteration. Throws SolverError if the
// decrement does not fall below kBarrierTolerance within kMaxNewtonSteps.
LiftedPoint LrlOftrlStep(const TreeDomain& domain, std::span<const double> s,
                         double eta, const LiftedPoint* warm = nullptr,
                         BarrierSolveStats* stats = nullptr);

// Optimistic FTRL with a log barrier over the lifted domain; the prediction
// is the last observed lifted utility.
class LrlOftrl : public RegretMinimizer {
 public:
  LrlOftrl(TreeDomain domain, double eta);

  int dimension() const override { return domain_.num_seqs(); }
  const TreeDomain& domain() const { return domain_; }
  double eta() const { return eta_; }
  const LiftedPoint& lifted() const { return point_; }
  const BarrierSolveStats& last_stats() const { return stats_; }

 protected:
  std::span<const double> DoNextStrategy() override;
  void DoObserveUtility(std::span<const double> u) override;

 private:
  TreeDomain domain_;
  double eta_;
  std::vector<double> cumulative_;  // Σ_τ lifted utilities
  std::vector<double> last_;        // most recent lifted utility
  std::vector<double> scratch_;
  LiftedPoint point_;
  bool has_point_ = false;
  std::vector<double> x_;
  BarrierSolveStats stats_;
};

}  // namespace phireg

#endif  // PHIREG_LRL_OFTRL_H_
