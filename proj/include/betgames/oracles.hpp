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

#ifndef BETGAMES_ORACLES_HPP
#define BETGAMES_ORACLES_HPP

#include <span>
#include <vector>

#include "betgames/game.hpp"

namespace betgames {

namespace detail {

template <class R>
void check_shape(const Game<R>& game, const StrategyProfile<R>& prof) {
  if (static_cast<int>(prof.play.size()) != game.num_players())
    throw ValidationError("strategy profile does not match the player list");
  for (int i = 0; i < game.num_players(); ++i) {
    if (static_cast<int>(prof.play[i].size()) != game.num_types(i))
      throw ValidationError("strategy profile does not cover every type of player " +
                            game.players[i]);
    for (const auto& dist : prof.play[i])
      if (static_cast<int>(dist.size()) != game.num_actions(i))
        throw ValidationError("strategy distribution size mismatch for player " +
                              game.players[i]);
  }
}

template <class R, class F>
void for_each_support_impl(const Game<R>& game, const StrategyProfile<R>& prof,
                           std::span<const int> type_digits, std::vector<int>& digits,
                           int player, const R& weight, F& visit) {
  if (player == game.num_players()) {
    visit(std::span<const int>(digits), weight);
    return;
  }
  const auto& dist = prof.play[player][type_digits[player]];
  for (int a = 0; a < static_cast<int>(dist.size()); ++a) {
    if (!(dist[a] > R(0))) continue;
    digits[player] = a;
    const R w = weight * dist[a];
    for_each_support_impl(game, prof, type_digits, digits, player + 1, w, visit);
  }
}

// Enumerates every action profile with positive probability at the given type
// profile, passing its digits and probability weight.
template <class R, class F>
void for_each_support(const Game<R>& game, const StrategyProfile<R>& prof,
                      std::span<const int> type_digits, F&& visit) {
  std::vector<int> digits(static_cast<std::size_t>(game.num_players()), 0);
  for_each_support_impl(game, prof, type_digits, digits, 0, R(1), visit);
}

}  // namespace detail

// E[u_i] for every player: full enumeration over type profiles weighted by the
// prior and over action profiles weighted by the strategy products.
template <class R>
std::vector<R> expected_utility(const Game<R>& game, const StrategyProfile<R>& prof) {
  detail::check_shape(game, prof);
  const int n = game.num_players();
  std::vector<R> out(static_cast<std::size_t>(n), R(0));
  std::vector<int> tdig(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < game.type_space.size(); ++t) {
    if (!(game.prior[t] > R(0))) continue;
    game.type_space.decode(t, tdig);
    detail::for_each_support(game, prof, tdig, [&](std::span<const int> digits, const R& w) {
      const std::size_t pidx = game.action_space.index_of(digits);
      const R qw = game.prior[t] * w;
      for (int i = 0; i < n; ++i) out[i] += qw * game.utility(i, tdig[i], pidx);
    });
  }
  return out;
}

// E[u_i | own type], using the posterior over the other players' types.
template <class R>
R conditional_utility(const Game<R>& game, const StrategyProfile<R>& prof, int player,
                      int own_type) {
  detail::check_shape(game, prof);
  const int n = game.num_players();
  const R marginal = game.type_marginal(player, own_type);
  R out(0);
  std::vector<int> tdig(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < game.type_space.size(); ++t) {
    if (game.type_space.digit(t, player) != own_type) continue;
    if (!(game.prior[t] > R(0))) continue;
    game.type_space.decode(t, tdig);
    detail::for_each_support(game, prof, tdig, [&](std::span<const int> digits, const R& w) {
      const std::size_t pidx = game.action_space.index_of(digits);
      out += game.prior[t] * w * game.utility(player, own_type, pidx);
    });
  }
  return out / marginal;
}

// Marginal probability that `player` plays `action`, with types weighted by
// the prior.
template <class R>
R action_probability(const Game<R>& game, const StrategyProfile<R>& prof, int player,
                     int action) {
  detail::check_shape(game, prof);
  if (action < 0 || action >= game.num_actions(player))
    throw ValidationError("action index out of range for player " + game.players[player]);
  R out(0);
  for (int t = 0; t < game.num_types(player); ++t)
    out += game.type_marginal(player, t) * prof.play[player][t][action];
  return out;
}

// Probability that the players other than `player` realize `others` (a full
// profile whose slot for `player` is ignored), conditioned on `own_type`.
template <class R>
R conditional_profile_probability(const Game<R>& game, const StrategyProfile<R>& prof,
                                  int player, int own_type, std::span<const int> others) {
  detail::check_shape(game, prof);
  const int n = game.num_players();
  for (int j = 0; j < n; ++j) {
    if (j == player) continue;
    if (others[j] < 0 || others[j] >= game.num_actions(j))
      throw ValidationError("action index out of range for player " + game.players[j]);
  }
  const R marginal = game.type_marginal(player, own_type);
  R out(0);
  std::vector<int> tdig(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < game.type_space.size(); ++t) {
    if (game.type_space.digit(t, player) != own_type) continue;
    if (!(game.prior[t] > R(0))) continue;
    game.type_space.decode(t, tdig);
    R w = game.prior[t];
    for (int j = 0; j < n && w > R(0); ++j) {
      if (j == player) continue;
      w *= prof.play[j][tdig[j]][others[j]];
    }
    out += w;
  }
  return out / marginal;
}

}  // namespace betgames

#endif  // BETGAMES_ORACLES_HPP
