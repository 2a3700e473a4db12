// Copyright 2026 The betgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BETGAMES_SCENARIOS_HPP
#define BETGAMES_SCENARIOS_HPP

#include <string>
#include <vector>

#include "betgames/game.hpp"

namespace betgames::scenarios {

// Three pirates split 300 coins. Everyone cooperating (or one lone defector,
// or all three defecting) splits evenly; exactly two defectors grab 150 each
// and leave the third with nothing. All-cooperate is a Nash equilibrium that
// a two-pirate coalition can break.
template <class R>
Game<R> pirates() {
  Game<R> g;
  g.players = {"P1", "P2", "P3"};
  g.actions.assign(3, {"Cooperate", "Defect"});
  g.utilities.assign(3, std::vector<R>(8, R(0)));
  std::vector<int> digits(3);
  for (std::size_t p = 0; p < 8; ++p) {
    int defectors = 0;
    for (int i = 0; i < 3; ++i) {
      digits[i] = static_cast<int>((p >> (2 - i)) & 1);  // row-major, player 0 slowest
      defectors += digits[i];
    }
    for (int i = 0; i < 3; ++i) {
      R u(100);
      if (defectors == 2) u = digits[i] == 1 ? R(150) : R(0);
      g.utilities[i][p] = u;
    }
  }
  g.finalize();
  return g;
}

template <class R>
StrategyProfile<R> pirates_sigma() {
  StrategyProfile<R> s;
  s.play.assign(3, {std::vector<R>{R(1), R(0)}});  // everyone cooperates
  return s;
}

// Majority vote: n players pick 0 or 1 and win iff their value is played by
// at least half the table. The uniform profile is a mixed Nash equilibrium
// vulnerable to any coalition that agrees on a value.
template <class R>
Game<R> majority(int n = 3) {
  Game<R> g;
  for (int i = 0; i < n; ++i) g.players.push_back("P" + std::to_string(i + 1));
  g.actions.assign(n, {"0", "1"});
  const std::size_t profiles = std::size_t{1} << n;
  g.utilities.assign(n, std::vector<R>(profiles, R(0)));
  for (std::size_t p = 0; p < profiles; ++p) {
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += static_cast<int>((p >> (n - 1 - i)) & 1);
    for (int i = 0; i < n; ++i) {
      const int own = static_cast<int>((p >> (n - 1 - i)) & 1);
      const int same = own == 1 ? ones : n - ones;
      g.utilities[i][p] = same >= n - same ? R(1) : R(0);
    }
  }
  g.finalize();
  return g;
}

// The odd-sum parity game: three players with pairwise-independent but
// correlated types drawn uniformly from the odd-sum triples; everyone scores
// when the action sum is odd. Uniform play and play-your-type are both Nash,
// worth 1/2 and 1.
template <class R>
Game<R> parity() {
  Game<R> g;
  g.players = {"P1", "P2", "P3"};
  g.actions.assign(3, {"0", "1"});
  g.types.assign(3, {"0", "1"});
  g.prior.assign(8, R(0));
  for (std::size_t t = 0; t < 8; ++t) {
    const int sum = static_cast<int>((t >> 2 & 1) + (t >> 1 & 1) + (t & 1));
    if (sum % 2 == 1) g.prior[t] = R(1) / R(4);
  }
  g.utilities.assign(3, std::vector<R>(16, R(0)));
  for (std::size_t p = 0; p < 8; ++p) {
    const int sum = static_cast<int>((p >> 2 & 1) + (p >> 1 & 1) + (p & 1));
    const R u = sum % 2 == 1 ? R(1) : R(0);
    for (int i = 0; i < 3; ++i)
      for (int t = 0; t < 2; ++t) g.utilities[i][static_cast<std::size_t>(t) * 8 + p] = u;
  }
  g.finalize();
  return g;
}

template <class R>
StrategyProfile<R> parity_sigma() {
  StrategyProfile<R> s;
  const std::vector<R> half{R(1) / R(2), R(1) / R(2)};
  s.play.assign(3, {half, half});
  return s;
}

template <class R>
StrategyProfile<R> parity_tau() {  // play your own type
  StrategyProfile<R> s;
  s.play.assign(3, {std::vector<R>{R(1), R(0)}, std::vector<R>{R(0), R(1)}});
  return s;
}

// Independent-type coordination: everyone scores iff all actions agree, with
// the payoff scaled by one's own type. Types are independent fair coins, so
// the independent-action-bets construction applies; the uniform profile is a
// Nash equilibrium that coalitions of two can improve on by agreeing.
template <class R>
Game<R> coordination() {
  Game<R> g;
  g.players = {"P1", "P2", "P3"};
  g.actions.assign(3, {"0", "1"});
  g.types.assign(3, {"lo", "hi"});
  g.prior.assign(8, R(1) / R(8));
  g.utilities.assign(3, std::vector<R>(16, R(0)));
  for (std::size_t p : {std::size_t{0}, std::size_t{7}}) {  // 000 and 111
    for (int i = 0; i < 3; ++i) {
      g.utilities[i][p] = R(2);       // type "lo"
      g.utilities[i][8 + p] = R(1);   // type "hi"
    }
  }
  g.finalize();
  return g;
}

template <class R>
StrategyProfile<R> coordination_sigma() {
  StrategyProfile<R> s;
  const std::vector<R> half{R(1) / R(2), R(1) / R(2)};
  s.play.assign(3, {half, half});
  return s;
}

// Two players pick numbers in {0..n}; everyone scores 1 unless someone plays
// 0. Playing 0 is a worthless Nash equilibrium, and spreading uniformly over
// {1..n} is a better one that plain action bets cannot catch for large n.
template <class R>
Game<R> truncated_zero(int n) {
  if (n < 1) throw ValidationError("truncated scenario needs n >= 1");
  Game<R> g;
  g.players = {"P1", "P2"};
  std::vector<std::string> labels;
  for (int a = 0; a <= n; ++a) labels.push_back(std::to_string(a));
  g.actions.assign(2, labels);
  const std::size_t k = static_cast<std::size_t>(n) + 1;
  g.utilities.assign(2, std::vector<R>(k * k, R(0)));
  for (std::size_t a1 = 1; a1 <= static_cast<std::size_t>(n); ++a1)
    for (std::size_t a2 = 1; a2 <= static_cast<std::size_t>(n); ++a2) {
      g.utilities[0][a1 * k + a2] = R(1);
      g.utilities[1][a1 * k + a2] = R(1);
    }
  g.finalize();
  return g;
}

template <class R>
StrategyProfile<R> truncated_zero_sigma(const Game<R>& g) {
  return pure_profile(g, std::vector<int>{0, 0});
}

template <class R>
StrategyProfile<R> truncated_zero_tau(const Game<R>& g) {  // uniform over {1..n}
  const int k = g.num_actions(0);
  StrategyProfile<R> s;
  std::vector<R> dist(static_cast<std::size_t>(k), R(0));
  for (int a = 1; a < k; ++a) dist[a] = R(1) / R(k - 1);
  s.play.assign(2, {dist});
  return s;
}

}  // namespace betgames::scenarios

#endif  // BETGAMES_SCENARIOS_HPP
