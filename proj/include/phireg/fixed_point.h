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

#ifndef PHIREG_FIXED_POINT_H_
#define PHIREG_FIXED_POINT_H_

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "phireg/deviations.h"
#include "phireg/tree_index.h"

namespace phireg {

// Unique b with W b = b, Σ b = 1 for a column-stochastic W with strictly
// positive entries, by GTH elimination (a direct solve that never subtracts,
// so tiny entries keep their relative accuracy). Throws std::invalid_argument
// when W is not square, not stochastic within 1e-9, or has a non-positive
// entry, and std::runtime_error if the residual exceeds 1e-11.
Eigen::VectorXd StationaryDistribution(const Eigen::MatrixXd& W);

// Fixed point of a coarse-trigger profile, built top-down. Throws
// std::invalid_argument when some λ entry is not positive.
SeqVec FixedPointEfcce(const PlayerTreeIndex& index, const TriggerProfile& phi);

// Fixed point of a trigger profile, one information set at a time in
// pre-order; the behavior at each set is the stationary distribution of a
// small Markov chain. Throws std::invalid_argument for non-positive λ and
// std::runtime_error when the parent mass underflows or W loses positivity.
SeqVec FixedPointEfce(const PlayerTreeIndex& index, const TriggerProfile& phi);

// The chain whose stationary distribution gives the behavior at infoset j,
// given x already fixed on the infosets before j. Column-stochastic exactly
// when x is a fixed point there.
Eigen::MatrixXd EfceTransition(const PlayerTreeIndex& index,
                               const TriggerProfile& phi,
                               std::span<const double> x, int j);

SeqVec FixedPoint(const PlayerTreeIndex& index, const TriggerProfile& phi);

}  // namespace phireg

#endif  // PHIREG_FIXED_POINT_H_
