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

#ifndef PHIREG_GAMES_H_
#define PHIREG_GAMES_H_

#include <string>

#include "phireg/game.h"

namespace phireg {

// N-player Kuhn poker: ante 1, one card each from `ranks` distinct cards, a
// single betting round. Before any bet a player may check or bet 1; after a
// bet every remaining player, wrapping around, folds or calls.
GameTree MakeKuhn(int players, int ranks);

// Two-player Goofspiel with `ranks` cards per suit. Chance fixes the prize
// order at the root, prizes are revealed one per round, player 2 does not see
// player 1's card of the current round, and the last forced card is played
// automatically. Each player's payoff is the sum of prizes they won.
GameTree MakeGoofspiel(int ranks);

struct SheriffParams {
  int item_value = 5;      // v
  int item_penalty = 1;    // p
  int sheriff_penalty = 1; // s
  int max_items = 5;       // m_max
  int max_bribe = 2;       // b_max
  int rounds = 2;          // r
};

// Two-player Sheriff. The smuggler (player 1) loads m items, then for each
// bargaining round offers a bribe that the sheriff accepts or rejects. Only
// the last round's response is binding. An accepted final bribe b pays the
// smuggler p*m - b and the sheriff b; otherwise the sheriff inspects or not.
GameTree MakeSheriff(const SheriffParams& params);

// The two-player example tree used throughout the tests: chance splits into
// two branches, player 2 acts once in each, and player 1 then acts in
// information set A (sequences 1, 2) or B (sequences 3, 4).
GameTree MakeMicro();

// Parses a game spec such as "kuhn:players=3,ranks=3", "goofspiel:ranks=3",
// "sheriff:v=5,p=1,s=1,mmax=5,bmax=2,rounds=2" or "micro".
GameTree LoadGame(const std::string& spec);

}  // namespace phireg

#endif  // PHIREG_GAMES_H_
