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

#include "phireg/games.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <string_view>
#include <vector>

namespace phireg {
namespace {

// ---------------------------------------------------------------- Kuhn poker

struct KuhnBuilder {
  int players;
  GameBuilder& b;

  // History characters: 'p' check, 'b' bet, 'f' fold, 'c' call.
  int Build(const std::vector<int>& cards, std::string& hist) {
    const auto bet = hist.find('b');
    int actor;
    std::string moves;
    if (bet == std::string::npos) {
      if (static_cast<int>(hist.size()) == players) return Showdown(cards, hist);
      actor = static_cast<int>(hist.size());
      moves = "pb";
    } else {
      const int responses = static_cast<int>(hist.size() - bet - 1);
      if (responses == players - 1) return Showdown(cards, hist);
      actor = (static_cast<int>(bet) + 1 + responses) % players;
      moves = "fc";
    }
    std::vector<int> children;
    for (char m : moves) {
      hist.push_back(m);
      children.push_back(Build(cards, hist));
      hist.pop_back();
    }
    std::string key = std::to_string(cards[actor]) + "|" + hist;
    return b.Decision(actor, std::move(key), std::move(children));
  }

  int Showdown(const std::vector<int>& cards, const std::string& hist) {
    std::vector<double> contrib(players, 1.0);
    std::vector<char> in(players, 1);
    const auto bet = hist.find('b');
    if (bet != std::string::npos) {
      const int bettor = static_cast<int>(bet);
      contrib[bettor] += 1;
      for (std::size_t k = bet + 1; k < hist.size(); ++k) {
        const int p = (bettor + static_cast<int>(k - bet)) % players;
        if (hist[k] == 'c') {
          contrib[p] += 1;
        } else {
          in[p] = 0;
        }
      }
    }
    int winner = -1;
    for (int p = 0; p < players; ++p) {
      if (in[p] && (winner < 0 || cards[p] > cards[winner])) winner = p;
    }
    const double pot = std::accumulate(contrib.begin(), contrib.end(), 0.0);
    std::vector<double> payoff(players);
    for (int p = 0; p < players; ++p) payoff[p] = -contrib[p];
    payoff[winner] += pot;
    return b.Terminal(std::move(payoff));
  }
};

void EnumerateDeals(int players, int ranks, std::vector<int>& cur,
                    std::vector<char>& used,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == players) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c < ranks; ++c) {
    if (used[c]) continue;
    used[c] = 1;
    cur.push_back(c);
    EnumerateDeals(players, ranks, cur, used, out);
    cur.pop_back();
    used[c] = 0;
  }
}

// ----------------------------------------------------------------- Goofspiel

struct GoofspielBuilder {
  GameBuilder& b;

  static std::string HandKey(const std::vector<int>& prizes, int round,
                             const std::vector<std::pair<int, int>>& played) {
    std::string key = "p";
    for (int k = 0; k <= round; ++k) key += std::to_string(prizes[k]);
    key += "|";
    for (auto [c0, c1] : played) {
      key += std::to_string(c0) + std::to_string(c1) + ",";
    }
    return key;
  }

  int Build(const std::vector<int>& prizes, int round,
            std::vector<std::pair<int, int>>& played,
            std::vector<int> hand0, std::vector<int> hand1,
            std::array<double, 2> score) {
    if (hand0.size() == 1) {
      // Last card is forced for both players.
      Resolve(prizes[round], hand0[0], hand1[0], score);
      return b.Terminal({score[0], score[1]});
    }
    const std::string key = HandKey(prizes, round, played);
    std::vector<int> p0_children;
    for (std::size_t i0 = 0; i0 < hand0.size(); ++i0) {
      std::vector<int> p1_children;
      for (std::size_t i1 = 0; i1 < hand1.size(); ++i1) {
        const int c0 = hand0[i0], c1 = hand1[i1];
        std::vector<int> rest0 = hand0, rest1 = hand1;
        rest0.erase(rest0.begin() + i0);
        rest1.erase(rest1.begin() + i1);
        std::array<double, 2> next = score;
        Resolve(prizes[round], c0, c1, next);
        played.emplace_back(c0, c1);
        p1_children.push_back(
            Build(prizes, round + 1, played, rest0, rest1, next));
        played.pop_back();
      }
      p0_children.push_back(b.Decision(1, "1|" + key, std::move(p1_children)));
    }
    return b.Decision(0, "0|" + key, std::move(p0_children));
  }

  static void Resolve(int prize, int c0, int c1, std::array<double, 2>& score) {
    if (c0 > c1) score[0] += prize;
    if (c1 > c0) score[1] += prize;
  }
};

// ------------------------------------------------------------------- Sheriff

struct SheriffBuilder {
  SheriffParams p;
  GameBuilder& b;

  int Root() {
    std::vector<int> children;
    for (int m = 0; m <= p.max_items; ++m) {
      children.push_back(Round(m, 0, ""));
    }
    return b.Decision(0, "S|", std::move(children));
  }

  // `hist` is the public bargaining transcript: "<bribe>,<a|r>;" per round.
  int Round(int m, int round, const std::string& hist) {
    const bool last = round + 1 == p.rounds;
    std::vector<int> bribes;
    for (int bribe = 0; bribe <= p.max_bribe; ++bribe) {
      const std::string offer = hist + std::to_string(bribe) + ",";
      int reject, accept;
      if (last) {
        reject = Inspection(m, offer + "r");
        accept = b.Terminal({static_cast<double>(p.item_penalty * m - bribe),
                             static_cast<double>(bribe)});
      } else {
        reject = Round(m, round + 1, offer + "r;");
        accept = Round(m, round + 1, offer + "a;");
      }
      bribes.push_back(b.Decision(1, "H|" + offer, {reject, accept}));
    }
    return b.Decision(0, "S|" + std::to_string(m) + "|" + hist,
                      std::move(bribes));
  }

  int Inspection(int m, const std::string& hist) {
    const int pass = b.Terminal({static_cast<double>(p.item_value * m), 0.0});
    int inspect;
    if (m > 0) {
      inspect = b.Terminal({-static_cast<double>(p.item_penalty * m),
                            static_cast<double>(p.item_penalty * m)});
    } else {
      inspect = b.Terminal({static_cast<double>(p.sheriff_penalty),
                            -static_cast<double>(p.sheriff_penalty)});
    }
    return b.Decision(1, "I|" + hist, {pass, inspect});
  }
};

// ------------------------------------------------------------- spec parsing

std::map<std::string, int> ParseParams(std::string_view text,
                                       const std::string& game) {
  std::map<std::string, int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw GameError("malformed parameter '" + std::string(item) +
                      "' for game " + game);
    }
    std::string key(item.substr(0, eq));
    std::string_view value = item.substr(eq + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw GameError("parameter " + key + " of game " + game +
                      " is not an integer");
    }
    out[key] = v;
  }
  return out;
}

int Take(std::map<std::string, int>& params, const std::string& key,
         int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  int v = it->second;
  params.erase(it);
  return v;
}

void RejectLeftovers(const std::map<std::string, int>& params,
                     const std::string& game) {
  if (!params.empty()) {
    throw GameError("unknown parameter '" + params.begin()->first +
                    "' for game " + game);
  }
}

}  // namespace

GameTree MakeKuhn(int players, int ranks) {
  if (players < 2) throw GameError("kuhn needs at least 2 players");
  if (ranks < players) {
    throw GameError("kuhn: not enough ranks (" + std::to_string(ranks) +
                    ") to deal one card to each of " +
                    std::to_string(players) + " players");
  }
  std::vector<std::vector<int>> deals;
  std::vector<int> cur;
  std::vector<char> used(ranks, 0);
  EnumerateDeals(players, ranks, cur, used, deals);

  GameBuilder b(players);
  KuhnBuilder kb{players, b};
  std::vector<int> children;
  for (const auto& deal : deals) {
    std::string hist;
    children.push_back(kb.Build(deal, hist));
  }
  std::vector<double> probs(deals.size(), 1.0 / deals.size());
  const int root = b.Chance(std::move(probs), std::move(children));
  return b.Finish(root, "kuhn:players=" + std::to_string(players) +
                            ",ranks=" + std::to_string(ranks));
}

GameTree MakeGoofspiel(int ranks) {
  if (ranks < 1) throw GameError("goofspiel needs at least one rank");
  std::vector<int> prizes(ranks);
  std::iota(prizes.begin(), prizes.end(), 1);
  std::vector<std::vector<int>> orders;
  do {
    orders.push_back(prizes);
  } while (std::next_permutation(prizes.begin(), prizes.end()));

  GameBuilder b(2);
  GoofspielBuilder gb{b};
  std::vector<int> children;
  for (const auto& order : orders) {
    std::vector<std::pair<int, int>> played;
    children.push_back(gb.Build(order, 0, played, prizes, prizes, {0.0, 0.0}));
  }
  std::vector<double> probs(orders.size(), 1.0 / orders.size());
  const int root = b.Chance(std::move(probs), std::move(children));
  return b.Finish(root, "goofspiel:ranks=" + std::to_string(ranks));
}

GameTree MakeSheriff(const SheriffParams& params) {
  if (params.rounds < 1) throw GameError("sheriff needs at least one round");
  if (params.max_items < 0 || params.max_bribe < 0) {
    throw GameError("sheriff item and bribe bounds must be nonnegative");
  }
  GameBuilder b(2);
  SheriffBuilder sb{params, b};
  const int root = sb.Root();
  return b.Finish(
      root, "sheriff:v=" + std::to_string(params.item_value) +
                ",p=" + std::to_string(params.item_penalty) +
                ",s=" + std::to_string(params.sheriff_penalty) +
                ",mmax=" + std::to_string(params.max_items) +
                ",bmax=" + std::to_string(params.max_bribe) +
                ",rounds=" + std::to_string(params.rounds));
}

GameTree MakeMicro() {
  GameBuilder b(2);
  // Left branch: player 2 picks s0/s1, player 1 then acts in A.
  const int a_s0 = b.Decision(0, "A", {b.Terminal({1.0, 0.0}),
                                       b.Terminal({0.0, 0.5})});
  const int a_s1 = b.Decision(0, "A", {b.Terminal({0.0, 1.0}),
                                       b.Terminal({0.5, 0.0})});
  const int left = b.Decision(1, "S", {a_s0, a_s1});
  // Right branch: player 2 picks r0/r1, player 1 then acts in B.
  const int b_r0 = b.Decision(0, "B", {b.Terminal({0.5, -0.5}),
                                       b.Terminal({-1.0, 1.0})});
  const int b_r1 = b.Decision(0, "B", {b.Terminal({-0.5, 0.5}),
                                       b.Terminal({1.0, -1.0})});
  const int right = b.Decision(1, "R", {b_r0, b_r1});
  const int root = b.Chance({0.5, 0.5}, {left, right});
  return b.Finish(root, "micro");
}

GameTree LoadGame(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string_view rest =
      colon == std::string::npos ? std::string_view{}
                                 : std::string_view(spec).substr(colon + 1);
  auto params = ParseParams(rest, name);
  if (name == "kuhn") {
    const int players = Take(params, "players", 2);
    const int ranks = Take(params, "ranks", 3);
    RejectLeftovers(params, name);
    return MakeKuhn(players, ranks);
  }
  if (name == "goofspiel") {
    const int ranks = Take(params, "ranks", 3);
    RejectLeftovers(params, name);
    return MakeGoofspiel(ranks);
  }
  if (name == "sheriff") {
    SheriffParams p;
    p.item_value = Take(params, "v", p.item_value);
    p.item_penalty = Take(params, "p", p.item_penalty);
    p.sheriff_penalty = Take(params, "s", p.sheriff_penalty);
    p.max_items = Take(params, "mmax", p.max_items);
    p.max_bribe = Take(params, "bmax", p.max_bribe);
    p.rounds = Take(params, "rounds", p.rounds);
    RejectLeftovers(params, name);
    return MakeSheriff(p);
  }
  if (name == "micro") {
    RejectLeftovers(params, name);
    return MakeMicro();
  }
  throw GameError("unknown game '" + name + "'");
}

}  // namespace phireg
