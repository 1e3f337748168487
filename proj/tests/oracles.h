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

// Reference implementations used only by the tests. Each one is written the
// slow, obvious way so it shares as little code as possible with the library.

#ifndef PHIREG_TESTS_ORACLES_H_
#define PHIREG_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "phireg/deviations.h"
#include "phireg/game.h"
#include "phireg/sequence_form.h"
#include "phireg/tree_domain.h"
#include "phireg/tree_index.h"

namespace phireg::testing {

using Rng = std::mt19937_64;

inline double Uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Random point of the open simplex.
inline std::vector<double> RandomSimplex(int d, Rng& rng, double floor = 0.01) {
  std::vector<double> p(d);
  double total = 0;
  for (double& v : p) total += (v = floor + Uniform01(rng));
  for (double& v : p) v /= total;
  return p;
}

inline std::vector<std::vector<double>> RandomBehavior(
    const PlayerTreeIndex& index, Rng& rng, double floor = 0.01) {
  std::vector<std::vector<double>> behavior;
  for (int j = 0; j < index.num_infosets(); ++j) {
    behavior.push_back(RandomSimplex(index.infoset(j).num_actions, rng, floor));
  }
  return behavior;
}

inline SeqVec RandomStrategy(const PlayerTreeIndex& index, Rng& rng,
                             double floor = 0.01) {
  return BehavioralToSequence(index, RandomBehavior(index, rng, floor));
}

// Strictly positive point of Q_j in global coordinates.
inline SeqVec RandomContinuation(const PlayerTreeIndex& index, int j, Rng& rng) {
  SeqVec q(index.num_seqs(), 0.0);
  for (int s : index.subtree_seqs(j)) {
    const int k = index.seq_infoset(s);
    if (index.seq_action(s) != 0) continue;
    const auto p = RandomSimplex(index.infoset(k).num_actions, rng);
    const double in = k == j ? 1.0 : q[index.infoset(k).parent_seq];
    for (std::size_t a = 0; a < p.size(); ++a) q[s + a] = in * p[a];
  }
  return q;
}

inline std::vector<double> RandomUtility(int n, Rng& rng) {
  std::vector<double> u(n);
  for (double& v : u) v = 2.0 * Uniform01(rng) - 1.0;
  return u;
}

inline TriggerProfile RandomProfile(const PlayerTreeIndex& index, Mode mode,
                                    Rng& rng) {
  TriggerProfile phi;
  phi.mode = mode;
  const int n = NumTriggers(index, mode);
  phi.lambda = RandomSimplex(n, rng);
  for (int t = 0; t < n; ++t) {
    phi.continuations.push_back(
        RandomContinuation(index, TriggerInfoset(index, mode, t), rng));
  }
  return phi;
}

// Every pure point of a TreeDomain (one per joint choice of actions, so
// points that differ only off-path repeat).
inline std::vector<std::vector<double>> EnumeratePure(const TreeDomain& dom) {
  std::vector<std::vector<double>> out;
  std::vector<int> choice(dom.num_points(), 0);
  while (true) {
    std::vector<double> x(dom.num_seqs(), 0.0);
    for (int k = 0; k < dom.num_points(); ++k) {
      const auto& pt = dom.point(k);
      const double in =
          pt.parent_seq == TreeDomain::kRootParent ? 1.0 : x[pt.parent_seq];
      x[pt.first_seq + choice[k]] = in;
    }
    out.push_back(std::move(x));
    int k = 0;
    while (k < dom.num_points() && ++choice[k] == dom.point(k).num_actions) {
      choice[k++] = 0;
    }
    if (k == dom.num_points()) break;
  }
  return out;
}

inline double BruteForceMax(const TreeDomain& dom, std::span<const double> u) {
  double best = -INFINITY;
  for (const auto& x : EnumeratePure(dom)) {
    double v = 0;
    for (std::size_t k = 0; k < x.size(); ++k) v += x[k] * u[k];
    best = std::max(best, v);
  }
  return best;
}

// M_{σ̂→q} or M_{j→q} as a dense matrix, entry by entry from the definition:
// column c maps to row c unless c is cut off by the trigger, and the column
// of the trigger's mass sequence additionally feeds q into the subtree.
inline Eigen::MatrixXd DenseDeviation(const PlayerTreeIndex& index, Mode mode,
                                      int t, std::span<const double> q) {
  const int n = index.num_seqs();
  const int j = TriggerInfoset(index, mode, t);
  const int mass = TriggerMassSeq(index, mode, t);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const bool cut = mode == Mode::kEfce ? index.Precedes(t + 1, c)
                                           : index.InSubtree(c, j);
      double v = (r == c && !cut) ? 1.0 : 0.0;
      if (c == mass && index.InSubtree(r, j)) v += q[r];
      M(r, c) = v;
    }
  }
  return M;
}

inline Eigen::MatrixXd DenseProfile(const PlayerTreeIndex& index,
                                    const TriggerProfile& phi) {
  const int n = index.num_seqs();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t t = 0; t < phi.lambda.size(); ++t) {
    M += phi.lambda[t] * DenseDeviation(index, phi.mode, static_cast<int>(t),
                                        phi.continuations[t]);
  }
  return M;
}

inline Eigen::VectorXd AsEigen(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                           static_cast<Eigen::Index>(v.size()));
}

// Walks the game tree and calls visit(node, chance_reach, last_seq per
// player) at every terminal. Sequence ids come from the indices.
inline void WalkTerminals(
    const GameTree& game, const std::vector<PlayerTreeIndex>& indices,
    const std::function<void(const Node&, double, const std::vector<int>&)>&
        visit) {
  std::function<void(int, double, std::vector<int>&)> rec =
      [&](int id, double chance, std::vector<int>& seqs) {
        const Node& node = game.node(id);
        if (node.kind == NodeKind::kTerminal) {
          visit(node, chance, seqs);
          return;
        }
        for (std::size_t a = 0; a < node.children.size(); ++a) {
          if (node.kind == NodeKind::kChance) {
            rec(node.children[a], chance * node.chance_probs[a], seqs);
            continue;
          }
          const auto& idx = indices[node.player];
          const int saved = seqs[node.player];
          seqs[node.player] = idx.infoset(idx.FindInfoset(node.infoset_key))
                                  .first_seq +
                              static_cast<int>(a);
          rec(node.children[a], chance, seqs);
          seqs[node.player] = saved;
        }
      };
  std::vector<int> seqs(game.num_players(), PlayerTreeIndex::kEmptySeq);
  rec(game.root(), 1.0, seqs);
}

using History = std::vector<std::vector<double>>;

// Trigger regret straight from the definition: every trigger, every pure
// continuation, dense deviation matrices.
inline double BruteTriggerRegret(const PlayerTreeIndex& idx, Mode mode,
                                 const History& xs, const History& us) {
  double best = -INFINITY;
  for (int t = 0; t < NumTriggers(idx, mode); ++t) {
    const Subtree& sub = idx.subtree(TriggerInfoset(idx, mode, t));
    for (const auto& local : EnumeratePure(sub.domain)) {
      SeqVec q(idx.num_seqs(), 0.0);
      for (std::size_t l = 0; l < local.size(); ++l) q[sub.to_global[l]] = local[l];
      const Eigen::MatrixXd M = DenseDeviation(idx, mode, t, q);
      double gain = 0;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const Eigen::VectorXd x = AsEigen(xs[k]);
        gain += AsEigen(us[k]).dot(M * x - x);
      }
      best = std::max(best, gain);
    }
  }
  return best;
}

// Fixed point of a dense deviation map restricted to Q_i: (M − I) x = 0
// together with x[∅] = 1 and the flow constraints, by least squares. M alone
// has extra fixed points off Q_i, so the flow rows are needed.
inline Eigen::VectorXd DenseFixedPoint(const PlayerTreeIndex& index,
                                       const Eigen::MatrixXd& M) {
  const int n = index.num_seqs();
  const int m = index.num_infosets();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + m + 1, n);
  A.topRows(n) = M - Eigen::MatrixXd::Identity(n, n);
  for (int j = 0; j < m; ++j) {
    const auto& info = index.infoset(j);
    for (int a = 0; a < info.num_actions; ++a) A(n + j, info.first_seq + a) = 1.0;
    A(n + j, info.parent_seq) -= 1.0;
  }
  A(n + m, 0) = 1.0;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + m + 1);
  rhs(n + m) = 1.0;
  return A.colPivHouseholderQr().solve(rhs);
}

// Stationary distribution by power iteration on a column-stochastic matrix.
inline Eigen::VectorXd PowerIteration(const Eigen::MatrixXd& W,
                                      double tol = 1e-15, int max_iter = 200000) {
  Eigen::VectorXd b = Eigen::VectorXd::Constant(W.rows(), 1.0 / W.rows());
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd next = W * b;
    next /= next.sum();
    const double change = (next - b).cwiseAbs().maxCoeff();
    b = next;
    if (change < tol) break;
  }
  return b;
}

}  // namespace phireg::testing

#endif  // PHIREG_TESTS_ORACLES_H_
