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

#include "phireg/lrl_oftrl.h"

#include <cmath>
#include <string>

namespace phireg {

std::vector<double> LiftedPoint::Point() const {
  std::vector<double> x(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) x[k] = y[k] / lambda;
  return x;
}

std::vector<double> LiftUtility(std::span<const double> u,
                                std::span<const double> x) {
  if (u.size() != x.size()) {
    throw std::invalid_argument("LiftUtility: dimension mismatch");
  }
  std::vector<double> lifted(u.size() + 1);
  double inner = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    inner += u[k] * x[k];
    lifted[k + 1] = u[k];
  }
  lifted[0] = -inner;
  return lifted;
}

namespace {

// Newton iteration for  max eta·<s, (λ, y)> + log λ + Σ log y  subject to the
// flow constraints of `domain` scaled by λ. The Hessian is diagonal, so the
// KKT system is eliminated bottom-up over the decision points: each subtree
// contributes a concave quadratic in its incoming flow, summarized by a
// "conductance" P_k and a marginal value mu_k.
class BarrierNewton {
 public:
  BarrierNewton(const TreeDomain& domain, std::span<const double> s,
                double eta)
      : domain_(domain),
        s_(s),
        eta_(eta),
        p_(domain.num_seqs()),
        c_(domain.num_seqs()),
        cond_(domain.num_points()),
        mu_(domain.num_points()),
        dy_(domain.num_seqs()) {}

  // Runs Newton from (lambda, y) in place. With `free_lambda` false, λ stays
  // fixed and kappa() reports the derivative of the optimal value in λ.
  // Returns the final decrement.
  double Solve(double& lambda, std::vector<double>& y, bool free_lambda,
               int& steps) {
    double prev = INFINITY;
    for (int it = 0;; ++it) {
      double dl = 0;
      const double dec = Direction(lambda, y, free_lambda, dl);
      const bool stalled = dec <= kBarrierTolerance && dec > 0.5 * prev;
      if (dec <= 1e-12 || stalled) return dec;
      if (it == kMaxNewtonSteps) {
        if (dec <= kBarrierTolerance) return dec;
        throw SolverError("barrier Newton did not converge (decrement " +
                          std::to_string(dec) + " after " +
                          std::to_string(kMaxNewtonSteps) + " steps)");
      }
      const double step = dec > 0.25 ? 1.0 / (1.0 + dec) : 1.0;
      lambda += step * dl;
      for (std::size_t k = 0; k < y.size(); ++k) y[k] += step * dy_[k];
      prev = dec;
      ++steps;
    }
  }

  double kappa() const { return kappa_; }

 private:
  double Direction(double lambda, const std::vector<double>& y,
                   bool free_lambda, double& dl) {
    for (int k = domain_.num_points() - 1; k >= 0; --k) {
      const auto& pt = domain_.point(k);
      double total = 0, weighted = 0;
      for (int a = 0; a < pt.num_actions; ++a) {
        const int q = pt.first_seq + a;
        double inv = 1.0 / (y[q] * y[q]);
        double c = eta_ * s_[q + 1] + 1.0 / y[q];
        for (int child : domain_.children(q)) {
          inv += 1.0 / cond_[child];
          c += mu_[child];
        }
        p_[q] = 1.0 / inv;
        c_[q] = c;
        total += p_[q];
        weighted += p_[q] * c;
      }
      cond_[k] = total;
      mu_[k] = weighted / total;
    }
    const double gl = eta_ * s_[0] + 1.0 / lambda;
    double inv = 1.0 / (lambda * lambda), cl = gl;
    for (int r : domain_.roots()) {
      inv += 1.0 / cond_[r];
      cl += mu_[r];
    }
    kappa_ = cl;
    dl = free_lambda ? cl / inv : 0.0;

    double dec2 = (dl / lambda) * (dl / lambda);
    for (int k = 0; k < domain_.num_points(); ++k) {
      const auto& pt = domain_.point(k);
      const double in = pt.parent_seq == TreeDomain::kRootParent
                            ? dl
                            : dy_[pt.parent_seq];
      const double m = mu_[k] - in / cond_[k];
      for (int a = 0; a < pt.num_actions; ++a) {
        const int q = pt.first_seq + a;
        dy_[q] = p_[q] * (c_[q] - m);
        dec2 += (dy_[q] / y[q]) * (dy_[q] / y[q]);
      }
    }
    return std::sqrt(dec2);
  }

  const TreeDomain& domain_;
  std::span<const double> s_;
  double eta_;
  std::vector<double> p_, c_, cond_, mu_, dy_;
  double kappa_ = 0;
};

// Rescales y so that it satisfies the flow constraints with root mass `mass`
// exactly, keeping its conditional (behavioral) proportions.
void Renormalize(const TreeDomain& domain, std::vector<double>& y,
                 double mass) {
  for (int k = 0; k < domain.num_points(); ++k) {
    const auto& pt = domain.point(k);
    const double in =
        pt.parent_seq == TreeDomain::kRootParent ? mass : y[pt.parent_seq];
    double total = 0;
    for (int a = 0; a < pt.num_actions; ++a) total += y[pt.first_seq + a];
    for (int a = 0; a < pt.num_actions; ++a) {
      y[pt.first_seq + a] *= in / total;
    }
  }
}

}  // namespace

LiftedPoint LrlOftrlStep(const TreeDomain& domain, std::span<const double> s,
                         double eta, const LiftedPoint* warm,
                         BarrierSolveStats* stats) {
  if (static_cast<int>(s.size()) != domain.num_seqs() + 1) {
    throw std::invalid_argument("LrlOftrlStep: utility sum has wrong length");
  }
  if (!(eta > 0)) throw std::invalid_argument("LrlOftrlStep: eta must be > 0");
  BarrierSolveStats local;
  BarrierSolveStats& st = stats ? *stats : local;
  st = BarrierSolveStats{};

  BarrierNewton newton(domain, s, eta);

  // λ pinned at 1 first; the bound is optimal iff the value still increases
  // in λ there.
  std::vector<double> y = warm ? warm->y : domain.Uniform();
  Renormalize(domain, y, 1.0);
  double lambda = 1.0;
  st.residual = newton.Solve(lambda, y, /*free_lambda=*/false, st.newton_steps);
  if (newton.kappa() >= 0) return {1.0, std::move(y)};

  // Interior optimum in λ: the value is concave in λ and decreasing at 1, so
  // the λ-free problem is bounded and its maximizer has λ < 1.
  double lambda2 = warm && warm->lambda < 1.0 ? warm->lambda : 0.5;
  std::vector<double> y2 = y;
  for (double& v : y2) v *= lambda2;
  st.residual = newton.Solve(lambda2, y2, /*free_lambda=*/true, st.newton_steps);
  if (lambda2 >= 1.0) return {1.0, std::move(y)};
  st.lambda_at_one = false;
  return {lambda2, std::move(y2)};
}

LrlOftrl::LrlOftrl(TreeDomain domain, double eta)
    : domain_(std::move(domain)),
      eta_(eta),
      cumulative_(domain_.num_seqs() + 1, 0.0),
      last_(domain_.num_seqs() + 1, 0.0),
      scratch_(domain_.num_seqs() + 1, 0.0) {
  if (!(eta > 0)) throw std::invalid_argument("LrlOftrl: eta must be > 0");
}

std::span<const double> LrlOftrl::DoNextStrategy() {
  for (std::size_t k = 0; k < scratch_.size(); ++k) {
    scratch_[k] = last_[k] + cumulative_[k];
  }
  point_ = LrlOftrlStep(domain_, scratch_, eta_, has_point_ ? &point_ : nullptr,
                        &stats_);
  has_point_ = true;
  x_ = point_.Point();
  return x_;
}

void LrlOftrl::DoObserveUtility(std::span<const double> u) {
  last_ = LiftUtility(u, x_);
  for (std::size_t k = 0; k < last_.size(); ++k) cumulative_[k] += last_[k];
}

}  // namespace phireg
