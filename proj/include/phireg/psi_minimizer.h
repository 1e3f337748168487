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

#ifndef PHIREG_PSI_MINIMIZER_H_
#define PHIREG_PSI_MINIMIZER_H_

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "phireg/deviations.h"
#include "phireg/parallel.h"
#include "phireg/regret_minimizer.h"
#include "phireg/tree_index.h"

namespace phireg {

enum class Algorithm { kLrlOftrl, kCfrRm, kCfrRmPlus };

std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

// Uniform mass mixed into every RM/RM+ output so fixed points stay unique.
inline constexpr double kBaselineEpsilon = 1e-12;

struct LearnerConfig {
  Algorithm algorithm = Algorithm::kLrlOftrl;
  double eta = 1.0;
  // Learning rate of the simplex learner over triggers; when unset,
  // eta / (2 |Σ_i|).
  std::optional<double> eta_delta;
  double epsilon = kBaselineEpsilon;
};

// Regret minimizer over the deviation set Ψ_i (or Ψ̃_i): one local learner
// per trigger over its subtree polytope, combined by a simplex learner R_Δ
// over triggers. Alternation rules are those of RegretMinimizer.
//
// Besides driving the learners, the minimizer keeps its own books: the
// external regret of every local learner, of R_Δ, and of the composition as
// a whole, all measured on the utilities it was fed.
class PsiMinimizer {
 public:
  PsiMinimizer(const PlayerTreeIndex& index, Mode mode,
               const LearnerConfig& config,
               ExecPolicy policy = ExecPolicy::kSerial);
  ~PsiMinimizer();
  PsiMinimizer(PsiMinimizer&&) noexcept;
  PsiMinimizer& operator=(PsiMinimizer&&) noexcept;

  const TriggerProfile& NextStrategy();
  void ObserveUtility(const RankOneUtility& U);

  Mode mode() const { return mode_; }
  int num_triggers() const { return static_cast<int>(locals_.size()); }
  double eta_delta() const { return eta_delta_; }
  int rounds() const { return delta_tracker_.rounds(); }

  // u_Δ of the most recent observation.
  std::span<const double> last_delta_utility() const { return u_delta_; }

  double LocalRegret(int t) const { return local_trackers_[t].Value(); }
  double DeltaRegret() const { return delta_tracker_.Value(); }
  // Σ_t max{0, Reg_t} over the local learners.
  double PositiveLocalRegretSum() const;
  // max_{φ ∈ Ψ} Σ_τ <φ(x^τ), u^τ> − Σ_τ <φ^τ(x^τ), u^τ>.
  double Regret() const;
  double realized() const { return realized_; }

 private:
  const PlayerTreeIndex* index_;
  Mode mode_;
  ExecPolicy policy_;
  double eta_delta_;
  std::vector<std::unique_ptr<RegretMinimizer>> locals_;
  std::unique_ptr<RegretMinimizer> delta_;
  std::vector<ExternalRegretTracker> local_trackers_;
  ExternalRegretTracker delta_tracker_;
  std::vector<std::vector<double>> q_local_;
  std::vector<double> kept_;  // Σ_τ utility of the play a trigger leaves intact
  std::vector<double> u_delta_;
  double realized_ = 0;
  TriggerProfile profile_;
  bool awaiting_utility_ = false;
};

}  // namespace phireg

#endif  // PHIREG_PSI_MINIMIZER_H_
