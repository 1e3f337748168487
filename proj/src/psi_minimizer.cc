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

#include "phireg/psi_minimizer.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phireg/lrl_oftrl.h"
#include "phireg/regret_matching.h"
#include "phireg/sequence_form.h"

namespace phireg {
namespace {

std::unique_ptr<RegretMinimizer> MakeLearner(const TreeDomain& domain,
                                             Algorithm algorithm, double eta,
                                             double epsilon) {
  switch (algorithm) {
    case Algorithm::kLrlOftrl:
      return std::make_unique<LrlOftrl>(domain, eta);
    case Algorithm::kCfrRm:
      return std::make_unique<CfrLearner>(domain, false, epsilon);
    case Algorithm::kCfrRmPlus:
      return std::make_unique<CfrLearner>(domain, true, epsilon);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kLrlOftrl:
      return "lrl-oftrl";
    case Algorithm::kCfrRm:
      return "cfr-rm";
    case Algorithm::kCfrRmPlus:
      return "cfr-rm+";
  }
  return "?";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a :
       {Algorithm::kLrlOftrl, Algorithm::kCfrRm, Algorithm::kCfrRmPlus}) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

std::string_view ModeName(Mode mode) {
  return mode == Mode::kEfce ? "efce" : "efcce";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "efce") return Mode::kEfce;
  if (name == "efcce") return Mode::kEfcce;
  return std::nullopt;
}

PsiMinimizer::PsiMinimizer(const PlayerTreeIndex& index, Mode mode,
                           const LearnerConfig& config, ExecPolicy policy)
    : index_(&index),
      mode_(mode),
      policy_(policy),
      eta_delta_(config.eta_delta.value_or(config.eta /
                                           (2.0 * index.num_seqs()))),
      delta_tracker_(TreeDomain::Simplex(std::max(NumTriggers(index, mode), 1))) {
  if (!(config.eta > 0) || !(eta_delta_ > 0)) {
    throw std::invalid_argument("PsiMinimizer: learning rates must be > 0");
  }
  const int n = NumTriggers(index, mode);
  if (n == 0) {
    throw std::invalid_argument("PsiMinimizer: player has no decisions");
  }
  for (int t = 0; t < n; ++t) {
    const TreeDomain& dom = index.subtree(TriggerInfoset(index, mode, t)).domain;
    locals_.push_back(MakeLearner(dom, config.algorithm, config.eta,
                                  config.epsilon));
    local_trackers_.emplace_back(dom);
  }
  const TreeDomain simplex = TreeDomain::Simplex(n);
  switch (config.algorithm) {
    case Algorithm::kLrlOftrl:
      delta_ = std::make_unique<LrlOftrl>(simplex, eta_delta_);
      break;
    case Algorithm::kCfrRm:
      delta_ = std::make_unique<RegretMatching>(n, false, config.epsilon);
      break;
    case Algorithm::kCfrRmPlus:
      delta_ = std::make_unique<RegretMatching>(n, true, config.epsilon);
      break;
  }
  q_local_.resize(n);
  kept_.assign(n, 0.0);
  u_delta_.assign(n, 0.0);
  profile_.mode = mode;
  profile_.lambda.assign(n, 0.0);
  profile_.continuations.assign(n, SeqVec(index.num_seqs(), 0.0));
}

PsiMinimizer::~PsiMinimizer() = default;
PsiMinimizer::PsiMinimizer(PsiMinimizer&&) noexcept = default;
PsiMinimizer& PsiMinimizer::operator=(PsiMinimizer&&) noexcept = default;

const TriggerProfile& PsiMinimizer::NextStrategy() {
  if (awaiting_utility_) {
    throw AlternationError("NextStrategy called twice without a utility");
  }
  ForEach(num_triggers(), policy_, [&](int t) {
    const auto q = locals_[t]->NextStrategy();
    q_local_[t].assign(q.begin(), q.end());
    const Subtree& sub = index_->subtree(TriggerInfoset(*index_, mode_, t));
    SeqVec& cont = profile_.continuations[t];
    for (std::size_t l = 0; l < q.size(); ++l) cont[sub.to_global[l]] = q[l];
  });
  const auto lambda = delta_->NextStrategy();
  profile_.lambda.assign(lambda.begin(), lambda.end());
  awaiting_utility_ = true;
  return profile_;
}

void PsiMinimizer::ObserveUtility(const RankOneUtility& U) {
  if (!awaiting_utility_) {
    throw AlternationError("ObserveUtility called without NextStrategy");
  }
  if (static_cast<int>(U.u.size()) != index_->num_seqs() ||
      static_cast<int>(U.x.size()) != index_->num_seqs()) {
    throw std::invalid_argument("PsiMinimizer: utility dimension mismatch");
  }
  const double whole = Dot(U.x, U.u);
  ForEach(num_triggers(), policy_, [&](int t) {
    const std::vector<double> v = LocalUtilityForTrigger(*index_, mode_, t, U);
    u_delta_[t] = DeviationValue(*index_, mode_, t, profile_.continuations[t], U);
    double replaced = 0;
    for (int s : TriggerReplaced(*index_, mode_, t)) replaced += U.x[s] * U.u[s];
    kept_[t] += whole - replaced;
    local_trackers_[t].Add(q_local_[t], v);
    locals_[t]->ObserveUtility(v);
  });
  delta_tracker_.Add(profile_.lambda, u_delta_);
  realized_ += Dot(profile_.lambda, u_delta_);
  delta_->ObserveUtility(u_delta_);
  awaiting_utility_ = false;
}

double PsiMinimizer::PositiveLocalRegretSum() const {
  double sum = 0;
  for (const auto& tracker : local_trackers_) {
    sum += std::max(0.0, tracker.Value());
  }
  return sum;
}

double PsiMinimizer::Regret() const {
  double best = -INFINITY;
  for (int t = 0; t < num_triggers(); ++t) {
    const TreeDomain& dom =
        index_->subtree(TriggerInfoset(*index_, mode_, t)).domain;
    best = std::max(best, kept_[t] + dom.BestResponseValue(
                                         local_trackers_[t].cumulative_utility()));
  }
  return best - realized_;
}

}  // namespace phireg
