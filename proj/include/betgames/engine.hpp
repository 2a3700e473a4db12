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

#ifndef BETGAMES_ENGINE_HPP
#define BETGAMES_ENGINE_HPP

#include <numeric>
#include <span>
#include <vector>

#include "betgames/oracles.hpp"

namespace betgames {

namespace detail {

// Support enumeration over all players except `skip`; digits[skip] stays 0.
template <class R, class F>
void for_each_others_support_impl(const Game<R>& game, const StrategyProfile<R>& prof,
                                  std::span<const int> type_digits, int skip,
                                  std::vector<int>& digits, int player, const R& weight,
                                  F& visit) {
  if (player == game.num_players()) {
    visit(std::span<const int>(digits), weight);
    return;
  }
  if (player == skip) {
    digits[player] = 0;
    for_each_others_support_impl(game, prof, type_digits, skip, digits, player + 1, weight,
                                 visit);
    return;
  }
  const auto& dist = prof.play[player][type_digits[player]];
  for (int a = 0; a < static_cast<int>(dist.size()); ++a) {
    if (!(dist[a] > R(0))) continue;
    digits[player] = a;
    const R w = weight * dist[a];
    for_each_others_support_impl(game, prof, type_digits, skip, digits, player + 1, w, visit);
  }
}

template <class R, class F>
void for_each_others_support(const Game<R>& game, const StrategyProfile<R>& prof,
                             std::span<const int> type_digits, int skip, F&& visit) {
  std::vector<int> digits(static_cast<std::size_t>(game.num_players()), 0);
  for_each_others_support_impl(game, prof, type_digits, skip, digits, 0, R(1), visit);
}

}  // namespace detail

// values[t][a] = E[u_player | own type t, own pure action a] when the others
// follow `prof`. Pure actions suffice for best responses: expected utility is
// affine in one player's mixture.
template <class R>
std::vector<std::vector<R>> action_values(const Game<R>& game, const StrategyProfile<R>& prof,
                                          int player) {
  detail::check_shape(game, prof);
  const int n = game.num_players();
  const std::size_t own_stride = game.action_space.stride(player);
  std::vector<std::vector<R>> values(
      static_cast<std::size_t>(game.num_types(player)),
      std::vector<R>(static_cast<std::size_t>(game.num_actions(player)), R(0)));
  std::vector<int> tdig(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < game.type_space.size(); ++t) {
    if (!(game.prior[t] > R(0))) continue;
    game.type_space.decode(t, tdig);
    const int own_type = tdig[player];
    const R w0 = game.prior[t] / game.type_marginal(player, own_type);
    detail::for_each_others_support(
        game, prof, tdig, player, [&](std::span<const int> digits, const R& w) {
          const std::size_t base = game.action_space.index_of(digits);
          const R ww = w0 * w;
          auto& row = values[own_type];
          for (int a = 0; a < game.num_actions(player); ++a)
            row[a] += ww * game.utility(player, own_type, base + own_stride * a);
        });
  }
  return values;
}

template <class R>
struct BestResponse {
  std::vector<int> action;        // per own type, deterministic first-index tie-break
  std::vector<R> type_value;      // conditional value of the best action
  std::vector<R> type_current;    // conditional value of the profile's own mixture
  R value{};                      // prior-weighted best-response value
  R current{};                    // prior-weighted value of the current strategy
};

template <class R>
BestResponse<R> best_response(const Game<R>& game, const StrategyProfile<R>& prof,
                              int player) {
  const auto values = action_values(game, prof, player);
  BestResponse<R> br;
  const int num_types = game.num_types(player);
  br.action.resize(num_types);
  br.type_value.resize(num_types);
  br.type_current.assign(static_cast<std::size_t>(num_types), R(0));
  for (int t = 0; t < num_types; ++t) {
    int best = 0;
    for (int a = 1; a < game.num_actions(player); ++a)
      if (values[t][a] > values[t][best]) best = a;
    br.action[t] = best;
    br.type_value[t] = values[t][best];
    for (int a = 0; a < game.num_actions(player); ++a)
      br.type_current[t] += prof.play[player][t][a] * values[t][a];
    const R marginal = game.type_marginal(player, t);
    br.value += marginal * br.type_value[t];
    br.current += marginal * br.type_current[t];
  }
  return br;
}

template <class R>
struct TypeRegret {
  int type = 0;
  int best_action = 0;
  R best_value{};
  R current_value{};
};

template <class R>
struct PlayerRegret {
  int player = 0;
  R regret{};  // prior-weighted gain of the best pure deviation
  std::vector<TypeRegret<R>> per_type;
};

template <class R>
struct RegretCertificate {
  std::vector<PlayerRegret<R>> entries;
  R max_regret{};
  int worst_player = -1;

  bool is_nash(const R& tolerance) const { return !(max_regret > tolerance); }
};

// Nash check by exact best response, optionally restricted to a player subset
// (used for the internal-stability clause of coalition deviations).
template <class R>
RegretCertificate<R> verify_nash(const Game<R>& game, const StrategyProfile<R>& prof,
                                 std::span<const int> subset = {}) {
  std::vector<int> all;
  if (subset.empty()) {
    all.resize(static_cast<std::size_t>(game.num_players()));
    std::iota(all.begin(), all.end(), 0);
    subset = all;
  }
  RegretCertificate<R> cert;
  bool first = true;
  for (int i : subset) {
    const auto br = best_response(game, prof, i);
    PlayerRegret<R> pr;
    pr.player = i;
    pr.regret = br.value - br.current;
    for (int t = 0; t < game.num_types(i); ++t)
      pr.per_type.push_back({t, br.action[t], br.type_value[t], br.type_current[t]});
    if (first || pr.regret > cert.max_regret) {
      cert.max_regret = pr.regret;
      cert.worst_player = i;
      first = false;
    }
    cert.entries.push_back(std::move(pr));
  }
  return cert;
}

}  // namespace betgames

#endif  // BETGAMES_ENGINE_HPP
