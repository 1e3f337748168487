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

#include "phireg/fixed_point.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace phireg {
namespace {

constexpr double kStochasticTolerance = 1e-9;
constexpr double kStationaryResidual = 1e-11;
constexpr double kUnderflow = 1e-300;

void CheckLambda(const PlayerTreeIndex& index, const TriggerProfile& phi) {
  const int n = NumTriggers(index, phi.mode);
  if (static_cast<int>(phi.lambda.size()) != n ||
      static_cast<int>(phi.continuations.size()) != n) {
    throw std::invalid_argument("trigger profile does not match the index");
  }
  for (int t = 0; t < n; ++t) {
    if (!(phi.lambda[t] > 0)) {
      throw std::invalid_argument("fixed point needs λ > 0; trigger " +
                                  std::to_string(t) + " has " +
                                  std::to_string(phi.lambda[t]));
    }
  }
}

}  // namespace

Eigen::VectorXd StationaryDistribution(const Eigen::MatrixXd& W) {
  const Eigen::Index d = W.rows();
  if (d == 0 || W.cols() != d) {
    throw std::invalid_argument("stationary distribution: W must be square");
  }
  for (Eigen::Index c = 0; c < d; ++c) {
    if (std::abs(W.col(c).sum() - 1.0) > kStochasticTolerance) {
      throw std::invalid_argument("stationary distribution: column " +
                                  std::to_string(c) + " does not sum to 1");
    }
  }
  if ((W.array() <= 0.0).any()) {
    throw std::invalid_argument(
        "stationary distribution: entries must be strictly positive");
  }
  if (d == 1) return Eigen::VectorXd::Ones(1);

  // Grassmann-Taksar-Heyman elimination on the row-stochastic transpose.
  // Only sums of nonnegative terms appear, so even stationary entries many
  // orders of magnitude below the others keep full relative accuracy.
  Eigen::MatrixXd P = W.transpose();
  for (Eigen::Index n = d - 1; n > 0; --n) {
    const double out = P.row(n).head(n).sum();
    P.col(n).head(n) /= out;
    P.topLeftCorner(n, n) += P.col(n).head(n) * P.row(n).head(n);
  }
  Eigen::VectorXd b(d);
  b(0) = 1.0;
  for (Eigen::Index j = 1; j < d; ++j) {
    b(j) = b.head(j).dot(P.col(j).head(j));
  }
  b /= b.sum();

  const double residual = (W * b - b).cwiseAbs().maxCoeff();
  if (residual > kStationaryResidual) {
    throw std::runtime_error("stationary distribution: residual " +
                             std::to_string(residual));
  }
  return b;
}

SeqVec FixedPointEfcce(const PlayerTreeIndex& index, const TriggerProfile& phi) {
  if (phi.mode != Mode::kEfcce) {
    throw std::invalid_argument("FixedPointEfcce: profile is not coarse");
  }
  CheckLambda(index, phi);
  SeqVec x(index.num_seqs(), 0.0);
  x[PlayerTreeIndex::kEmptySeq] = 1.0;
  // Pre-order numbering puts every ancestor first, so x[σ_j'] is final by the
  // time infoset j is reached.
  for (int j = 0; j < index.num_infosets(); ++j) {
    const auto& info = index.infoset(j);
    double weight = 0;
    for (int jp : index.infoset_path(j)) weight += phi.lambda[jp];
    for (int a = 0; a < info.num_actions; ++a) {
      const int s = info.first_seq + a;
      double acc = 0;
      for (int jp : index.infoset_path(j)) {
        acc += phi.lambda[jp] * phi.continuations[jp][s] *
               x[index.infoset(jp).parent_seq];
      }
      x[s] = acc / weight;
    }
  }
  return x;
}

Eigen::MatrixXd EfceTransition(const PlayerTreeIndex& index,
                               const TriggerProfile& phi,
                               std::span<const double> x, int j) {
  const auto lambda_of = [&](int seq) { return phi.lambda[seq - 1]; };
  const auto cont_of = [&](int seq) -> const SeqVec& {
    return phi.continuations[seq - 1];
  };
  const auto& info = index.infoset(j);
  const int d = info.num_actions;
  const double parent = x[info.parent_seq];
  // λ mass of the triggers strictly above j, i.e. those on the path to σ_j.
  double above = 0;
  if (info.parent_seq != PlayerTreeIndex::kEmptySeq) {
    for (int s : index.seq_path(info.parent_seq)) above += lambda_of(s);
  }
  // r[a]: inflow into (j, a) from triggers at strict ancestors of j.
  Eigen::VectorXd r = Eigen::VectorXd::Zero(d);
  const auto path = index.infoset_path(j);
  for (std::size_t p = 0; p + 1 < path.size(); ++p) {
    const auto& anc = index.infoset(path[p]);
    for (int ap = 0; ap < anc.num_actions; ++ap) {
      const int sh = anc.first_seq + ap;
      const double w = lambda_of(sh) * x[sh];
      for (int a = 0; a < d; ++a) r[a] += w * cont_of(sh)[info.first_seq + a];
    }
  }
  Eigen::MatrixXd W(d, d);
  for (int ac = 0; ac < d; ++ac) {
    const int sc = info.first_seq + ac;
    const double slack = 1.0 - above - lambda_of(sc);
    for (int ar = 0; ar < d; ++ar) {
      W(ar, ac) = r[ar] / parent +
                  lambda_of(sc) * cont_of(sc)[info.first_seq + ar] +
                  (ar == ac ? slack : 0.0);
    }
  }
  return W;
}

SeqVec FixedPointEfce(const PlayerTreeIndex& index, const TriggerProfile& phi) {
  if (phi.mode != Mode::kEfce) {
    throw std::invalid_argument("FixedPointEfce: profile is not an EFCE one");
  }
  CheckLambda(index, phi);
  SeqVec x(index.num_seqs(), 0.0);
  x[PlayerTreeIndex::kEmptySeq] = 1.0;
  for (int j = 0; j < index.num_infosets(); ++j) {
    const auto& info = index.infoset(j);
    const double parent = x[info.parent_seq];
    if (parent < kUnderflow) {
      throw std::runtime_error("FixedPointEfce: mass reaching infoset " +
                               info.key + " underflows");
    }
    const Eigen::MatrixXd W = EfceTransition(index, phi, x, j);
    if ((W.array() <= 0.0).any()) {
      throw std::runtime_error("FixedPointEfce: non-positive transition at " +
                               info.key);
    }
    const Eigen::VectorXd b = StationaryDistribution(W);
    for (int a = 0; a < info.num_actions; ++a) {
      x[info.first_seq + a] = parent * b[a];
    }
  }
  return x;
}

SeqVec FixedPoint(const PlayerTreeIndex& index, const TriggerProfile& phi) {
  return phi.mode == Mode::kEfce ? FixedPointEfce(index, phi)
                                 : FixedPointEfcce(index, phi);
}

}  // namespace phireg
