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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.h"
#include "phireg/dynamics.h"
#include "phireg/games.h"
#include "phireg/regret_eval.h"

namespace phireg {
namespace {

using testing::Rng;
using testing::History;

const SeqVec kMicroX = {1, 0.6, 0.4, 0.3, 0.7};

TEST_CASE("trigger regret of a single round on the micro game") {
  const PlayerTreeIndex idx = BuildIndex(MakeMicro(), 0);
  const History xs = {kMicroX};
  const History us = {{0, 1, 0, 0, 2}};
  // Best EFCE move: on σ̂ = 3 (mass 0.3) play 4 instead, gaining 0.3 · 2.
  CHECK(TriggerRegret(idx, Mode::kEfce, xs, us) == doctest::Approx(0.6).epsilon(1e-15));
  TriggerRegretAccumulator acc(idx, Mode::kEfce);
  acc.Add(xs[0], us[0]);
  CHECK(acc.TriggerValue(0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(acc.TriggerValue(1) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(acc.TriggerValue(2) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(acc.TriggerValue(3) == doctest::Approx(0.0).epsilon(1e-15));
  // Coarse: replace all of B (value 1.4) by the sequence worth 2.
  CHECK(TriggerRegret(idx, Mode::kEfcce, xs, us) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK_THROWS_AS(TriggerRegret(idx, Mode::kEfce, History{}, History{}),
                  std::invalid_argument);
}

TEST_CASE("trigger regret matches brute force on random micro histories") {
  Rng rng(21);
  const PlayerTreeIndex idx = BuildIndex(MakeMicro(), 0);
  for (Mode mode : {Mode::kEfce, Mode::kEfcce}) {
    for (int rep = 0; rep < 100; ++rep) {
      History xs, us;
      for (int k = 0; k < 20; ++k) {
        xs.push_back(testing::RandomStrategy(idx, rng));
        us.push_back(testing::RandomUtility(idx.num_seqs(), rng));
      }
      CHECK(std::abs(TriggerRegret(idx, mode, xs, us) -
                     testing::BruteTriggerRegret(idx, mode, xs, us)) <= 1e-12);
    }
  }
}

TEST_CASE("incremental regret equals recomputation from scratch") {
  Rng rng(22);
  const PlayerTreeIndex idx = BuildIndex(MakeKuhn(2, 3), 1);
  for (Mode mode : {Mode::kEfce, Mode::kEfcce}) {
    TriggerRegretAccumulator acc(idx, mode);
    PolytopeRegretAccumulator ext(idx);
    History xs, us;
    for (int k = 0; k < 30; ++k) {
      xs.push_back(testing::RandomStrategy(idx, rng));
      us.push_back(testing::RandomUtility(idx.num_seqs(), rng));
      acc.Add(xs.back(), us.back());
      ext.Add(xs.back(), us.back());
      CHECK(acc.rounds() == k + 1);
      CHECK(std::abs(acc.Value() - TriggerRegret(idx, mode, xs, us)) <= 1e-12);
      CHECK(std::abs(ext.Value() - ExternalRegretOverPolytope(idx, xs, us)) <= 1e-12);
    }
  }
}

TEST_CASE("external regret over Q_i against enumeration") {
  Rng rng(23);
  const PlayerTreeIndex idx = BuildIndex(MakeMicro(), 0);
  History xs, us;
  for (int k = 0; k < 20; ++k) {
    xs.push_back(testing::RandomStrategy(idx, rng));
    us.push_back(testing::RandomUtility(idx.num_seqs(), rng));
  }
  std::vector<double> total(idx.num_seqs() - 1, 0.0);
  double realized = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    realized += Dot(xs[k], us[k]);
    for (int s = 1; s < idx.num_seqs(); ++s) total[s - 1] += us[k][s];
  }
  double empty = 0;
  for (const auto& u : us) empty += u[0];
  const double best = empty + testing::BruteForceMax(idx.domain(), total);
  CHECK(std::abs(ExternalRegretOverPolytope(idx, xs, us) - (best - realized)) <= 1e-12);
}

TEST_CASE("no pure trigger deviation beats the trigger regret") {
  Rng rng(24);
  const IndexedGame g(MakeKuhn(2, 3));
  DynamicsConfig cfg;
  cfg.T = 60;
  const DynamicsLog log = RunDynamics(g, cfg);
  const PlayerTreeIndex& idx = g.index(0);
  const double regret = TriggerRegret(idx, cfg.mode, log.strategies[0], log.utilities[0]);
  CHECK(std::abs(regret - log.final_records()[0].trigger_regret) <= 1e-12);
  for (int rep = 0; rep < 50; ++rep) {
    const int t = static_cast<int>(rng() % NumTriggers(idx, cfg.mode));
    const Subtree& sub = idx.subtree(TriggerInfoset(idx, cfg.mode, t));
    SeqVec q(idx.num_seqs(), 0.0);
    // Random pure continuation: one action per infoset of Σ_j.
    for (int s : idx.subtree_seqs(sub.infoset)) {
      const int k = idx.seq_infoset(s);
      if (idx.seq_action(s) != 0) continue;
      const double in = k == sub.infoset ? 1.0 : q[idx.infoset(k).parent_seq];
      const int pick = static_cast<int>(rng() % idx.infoset(k).num_actions);
      q[s + pick] = in;
    }
    REQUIRE(SubtreeFlowViolation(idx, sub.infoset, q) == 0.0);
    double gain = 0;
    for (int k = 0; k < cfg.T; ++k) {
      gain += DeviationValue(idx, cfg.mode, t, q, {log.utilities[0][k], log.strategies[0][k]}) -
              Dot(log.strategies[0][k], log.utilities[0][k]);
    }
    CHECK(gain <= regret + 1e-12);
  }
}

TEST_CASE("equilibrium gap") {
  const std::vector<double> regrets = {0.5, -1.0};
  const std::vector<int> rounds = {10, 10};
  CHECK(EquilibriumGap(regrets, rounds) == doctest::Approx(0.05));
  const std::vector<double> negative = {-0.5, -1.0};
  CHECK(EquilibriumGap(negative, rounds) == 0.0);
  const std::vector<int> mismatched = {10, 11};
  CHECK_THROWS_AS(EquilibriumGap(regrets, mismatched), std::invalid_argument);
  const std::vector<int> zero = {0, 0};
  CHECK_THROWS_AS(EquilibriumGap(regrets, zero), std::invalid_argument);
}

TEST_CASE("power-of-two checkpoints") {
  CHECK(PowerOfTwoCheckpoints(1) == std::vector<int>{1});
  CHECK(PowerOfTwoCheckpoints(8) == std::vector<int>{1, 2, 4, 8});
  CHECK(PowerOfTwoCheckpoints(10) == std::vector<int>{1, 2, 4, 8, 10});
}

TEST_CASE("dynamics configuration is validated") {
  const IndexedGame g(MakeMicro());
  DynamicsConfig cfg;
  cfg.T = 0;
  CHECK_THROWS_AS(RunDynamics(g, cfg), std::invalid_argument);
  cfg.T = 10;
  cfg.eta = 0;
  CHECK_THROWS_AS(RunDynamics(g, cfg), std::invalid_argument);
  cfg.eta = 1;
  for (const std::vector<int>& bad :
       {std::vector<int>{0, 5}, std::vector<int>{5, 5}, std::vector<int>{4, 2},
        std::vector<int>{11}}) {
    cfg.checkpoints = bad;
    CHECK_THROWS_AS(RunDynamics(g, cfg), std::invalid_argument);
  }
}

TEST_CASE("one round of dynamics") {
  const IndexedGame g(MakeMicro());
  for (Mode mode : {Mode::kEfce, Mode::kEfcce}) {
    DynamicsConfig cfg;
    cfg.mode = mode;
    cfg.T = 1;
    const DynamicsLog log = RunDynamics(g, cfg);
    REQUIRE(log.records.size() == 2);
    for (const auto& r : log.records) {
      CHECK(r.t == 1);
      CHECK(std::abs(r.psi_regret - r.trigger_regret) <= 1e-12);
      CHECK(log.strategies[r.player].size() == 1);
      CHECK(IsSequenceForm(g.index(r.player), log.strategies[r.player][0]));
    }
    CHECK(log.max_residual[0] <= 1e-9);
  }
}

TEST_CASE("dynamics books on the micro game") {
  const IndexedGame g(MakeMicro());
  for (Algorithm alg : {Algorithm::kLrlOftrl, Algorithm::kCfrRm, Algorithm::kCfrRmPlus}) {
    for (Mode mode : {Mode::kEfce, Mode::kEfcce}) {
      DynamicsConfig cfg;
      cfg.algorithm = alg;
      cfg.mode = mode;
      cfg.T = 100;
      int calls = 0;
      const DynamicsLog log = RunDynamics(g, cfg, [&](int t, std::span<const PlayerStep> steps) {
        ++calls;
        CHECK(t == calls);
        REQUIRE(steps.size() == 2);
        for (const auto& s : steps) CHECK(s.residual <= 1e-9);
      });
      CHECK(calls == 100);
      CHECK(log.checkpoints == PowerOfTwoCheckpoints(100));
      CHECK(log.records.size() == 2 * log.checkpoints.size());
      for (const auto& r : log.records) {
        CAPTURE(r.t);
        CHECK(std::abs(r.psi_regret - r.trigger_regret) <= 1e-8 * r.t);
        CHECK(std::max(0.0, r.psi_regret) <=
              std::max(0.0, r.delta_regret) + r.local_regret + 1e-9);
        // The hindsight value recomputed from the logged play.
        const std::span<const std::vector<double>> xs(log.strategies[r.player].data(), r.t);
        const std::span<const std::vector<double>> us(log.utilities[r.player].data(), r.t);
        CHECK(std::abs(TriggerRegret(g.index(r.player), mode, xs, us) - r.trigger_regret) <=
              1e-12);
        CHECK(std::abs(ExternalRegretOverPolytope(g.index(r.player), xs, us) -
                       r.external_regret) <= 1e-12);
      }
      const auto fin = log.final_records();
      double gap = 0;
      for (const auto& r : fin) gap = std::max(gap, std::max(0.0, r.trigger_regret) / 100);
      CHECK(EquilibriumGap(log) == doctest::Approx(gap).epsilon(1e-15));
    }
  }
}

TEST_CASE("utilities handed to each player are the gradients of the play") {
  const IndexedGame g(MakeKuhn(3, 4));
  DynamicsConfig cfg;
  cfg.T = 5;
  const DynamicsLog log = RunDynamics(g, cfg);
  for (int t = 0; t < cfg.T; ++t) {
    Profile profile;
    for (int p = 0; p < 3; ++p) profile.push_back(log.strategies[p][t]);
    for (int p = 0; p < 3; ++p) {
      const SeqVec u = UtilityGradient(g, p, profile);
      for (std::size_t s = 0; s < u.size(); ++s) CHECK(u[s] == log.utilities[p][t][s]);
    }
  }
}

TEST_CASE("serial and parallel dynamics agree bit for bit") {
  const IndexedGame g(MakeKuhn(3, 3));
  for (Algorithm alg : {Algorithm::kLrlOftrl, Algorithm::kCfrRm}) {
    DynamicsConfig cfg;
    cfg.algorithm = alg;
    cfg.T = 64;
    const DynamicsLog serial = RunDynamics(g, cfg);
    cfg.policy = ExecPolicy::kParallel;
    const DynamicsLog parallel = RunDynamics(g, cfg);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t k = 0; k < serial.records.size(); ++k) {
      const auto& a = serial.records[k];
      const auto& b = parallel.records[k];
      CHECK(a.trigger_regret == b.trigger_regret);
      CHECK(a.external_regret == b.external_regret);
      CHECK(a.psi_regret == b.psi_regret);
      CHECK(a.delta_regret == b.delta_regret);
      CHECK(a.local_regret == b.local_regret);
    }
    CHECK(serial.strategies == parallel.strategies);
  }
}

}  // namespace
}  // namespace phireg
