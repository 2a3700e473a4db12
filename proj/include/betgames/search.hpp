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

#ifndef BETGAMES_SEARCH_HPP
#define BETGAMES_SEARCH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betgames/extension.hpp"
#include "betgames/linalg.hpp"
#include "betgames/parallel.hpp"

namespace betgames {

// Expected number of players betting on each event: per (target, action) for
// action bets, per (target, menu set) for set bets, per (bettor, others
// profile) for profile bets. The per-bettor totals are the bet probabilities.
template <class R>
struct BetStats {
  std::vector<std::vector<R>> per_action;  // [target][action]
  std::vector<std::vector<R>> per_set;     // [target][menu index]
  std::vector<std::vector<R>> per_profile; // [bettor][others index]
  std::vector<R> bettor_total;             // probability each player bets at all
  R max_entry{};
  int max_target = -1;
  int max_event = -1;  // action id / menu index / others index
};

template <class R>
BetStats<R> bet_stats(const Extension<R>& ext, const StrategyProfile<R>& prof) {
  detail::check_shape(ext.game, prof);
  const int n = ext.num_players();
  BetStats<R> stats;
  stats.bettor_total.assign(static_cast<std::size_t>(n), R(0));
  switch (ext.spec.construction) {
    case Construction::action_bets:
    case Construction::independent_action_bets:
      stats.per_action.resize(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        stats.per_action[j].assign(static_cast<std::size_t>(ext.base.num_actions(j)), R(0));
      break;
    case Construction::set_bets:
      stats.per_set.resize(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        stats.per_set[j].assign(ext.spec.set_menus[j].size(), R(0));
      break;
    case Construction::profile_bets:
      stats.per_profile.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        stats.per_profile[i].assign(ext.others_space(i).size(), R(0));
      break;
  }

  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < ext.game.num_types(j); ++t) {
      const R marginal = ext.game.type_marginal(j, t);
      for (std::size_t e = 0; e < ext.ext_actions[j].size(); ++e) {
        const R p = prof.play[j][t][e];
        if (!(p > R(0))) continue;
        const Bet& bet = ext.ext_actions[j][e].bet;
        if (bet.kind == BetKind::none) continue;
        stats.bettor_total[j] += marginal * p;
        if (bet.kind == BetKind::action) {
          stats.per_action[bet.target][bet.target_action] += marginal * p;
        } else if (bet.kind == BetKind::set) {
          const auto& menu = ext.spec.set_menus[bet.target];
          const auto it = std::find(menu.begin(), menu.end(), bet.action_set);
          stats.per_set[bet.target][static_cast<std::size_t>(it - menu.begin())] +=
              marginal * p;
        } else {
          std::size_t idx = 0;
          int od = 0;
          const auto& os = ext.others_space(j);
          for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            idx += os.stride(od++) * static_cast<std::size_t>(bet.others[k]);
          }
          stats.per_profile[j][idx] += marginal * p;
        }
      }
    }
  }

  auto scan = [&stats](const std::vector<std::vector<R>>& table) {
    for (int j = 0; j < static_cast<int>(table.size()); ++j)
      for (int e = 0; e < static_cast<int>(table[j].size()); ++e)
        if (stats.max_target < 0 || table[j][e] > stats.max_entry) {
          stats.max_entry = table[j][e];
          stats.max_target = j;
          stats.max_event = e;
        }
  };
  scan(stats.per_action);
  scan(stats.per_set);
  scan(stats.per_profile);
  return stats;
}

template <class R>
struct CounterDeviation {
  int member = -1;
  StrategyProfile<R> strategy;  // full profile with the member's reply swapped in
  R gain{};
  std::string method;  // "reroute" or "best-response"
};

// One examined coalition deviation. Refutes semi-strongness iff every member
// strictly gains and the internal Nash check (clause b1) finds no improvement.
template <class R>
struct DeviationReport {
  std::vector<int> coalition;
  StrategyProfile<R> profile;  // sigma outside the coalition, tau inside
  std::vector<R> gains;        // aligned with coalition
  bool all_strictly_gain = false;
  RegretCertificate<R> internal;
  bool internally_stable = false;
  std::optional<CounterDeviation<R>> counter;
  bool projection_differs = false;  // some member strays from sigma's base behavior
  bool marginal_increase = false;   // some member overplays an action relative to sigma
};

template <class R>
struct SearchConfig {
  int coalition_cap = 2;
  bool mixed_grid = false;
  std::vector<std::pair<long, long>> grid_weights{{1, 4}, {1, 2}, {3, 4}};
  std::size_t max_candidates_per_coalition = 200000;
  std::size_t max_reports = 10000;
  R tolerance = numeric_traits<R>::default_tolerance();
  R strict_eps = numeric_traits<R>::default_tolerance();
  bool parallel = true;
};

template <class R>
struct SearchResult {
  std::vector<DeviationReport<R>> reports;  // gaining candidates, deterministic order
  std::size_t candidates_checked = 0;
  std::size_t gaining = 0;
  bool refuted = false;  // a gaining, internally stable deviation was found
  bool truncated = false;
  std::vector<std::string> coverage;  // per-coalition coverage notes
};

namespace detail {

template <class R>
StrategyProfile<R> with_member_strategy(const StrategyProfile<R>& base, int member,
                                        std::vector<std::vector<R>> strategy) {
  StrategyProfile<R> out = base;
  out.play[member] = std::move(strategy);
  return out;
}

// sigma's strategy vector with coalition members replaced.
template <class R>
StrategyProfile<R> combine(const StrategyProfile<R>& sigma, std::span<const int> coalition,
                           const std::vector<std::vector<std::vector<R>>>& members) {
  StrategyProfile<R> out = sigma;
  for (std::size_t m = 0; m < coalition.size(); ++m) out.play[coalition[m]] = members[m];
  return out;
}

// Proof-shaped counter-deviation for action-bet extensions: find a coalition
// member whose loaded action draws bets, reroute that action's probability
// mass onto an underplayed action nobody bets on, keep the bets as they are,
// and confirm the gain by exact evaluation.
template <class R>
std::optional<CounterDeviation<R>> reroute_counter(const Extension<R>& ext,
                                                   const StrategyProfile<R>& profile,
                                                   std::span<const int> coalition,
                                                   const std::vector<R>& member_utilities) {
  if (ext.spec.construction != Construction::action_bets &&
      ext.spec.construction != Construction::independent_action_bets)
    return std::nullopt;
  const auto stats = bet_stats(ext, profile);
  const auto projected = ext.project(profile);
  const auto& sigma = ext.spec.sigma;

  int best_member = -1, loaded = -1, spare = -1;
  R best_load(0);
  for (std::size_t m = 0; m < coalition.size(); ++m) {
    const int i = coalition[m];
    for (int a = 0; a < ext.base.num_actions(i); ++a) {
      if (!(stats.per_action[i][a] > best_load)) continue;
      R p_tau(0), p_sigma_a(0);
      for (int t = 0; t < ext.base.num_types(i); ++t) {
        const R marg = ext.base.type_marginal(i, t);
        p_tau += marg * projected.play[i][t][a];
        p_sigma_a += marg * sigma.play[i][t][a];
      }
      if (!(p_tau > R(0))) continue;
      // an underplayed action that draws no bets at all
      for (int b = 0; b < ext.base.num_actions(i); ++b) {
        if (b == a || stats.per_action[i][b] > R(0)) continue;
        R pb_tau(0), pb_sigma(0);
        for (int t = 0; t < ext.base.num_types(i); ++t) {
          const R marg = ext.base.type_marginal(i, t);
          pb_tau += marg * projected.play[i][t][b];
          pb_sigma += marg * sigma.play[i][t][b];
        }
        if (pb_tau < pb_sigma) {
          best_member = static_cast<int>(m);
          loaded = a;
          spare = b;
          best_load = stats.per_action[i][a];
          break;
        }
      }
    }
  }
  if (best_member < 0) return std::nullopt;

  const int i = coalition[best_member];
  auto reply = profile.play[i];
  for (int t = 0; t < ext.base.num_types(i); ++t) {
    for (std::size_t e = 0; e < ext.ext_actions[i].size(); ++e) {
      if (ext.ext_actions[i][e].base != loaded || !(reply[t][e] > R(0))) continue;
      // same bet, rerouted base action
      const ExtendedAction moved{spare, ext.ext_actions[i][e].bet};
      for (std::size_t e2 = 0; e2 < ext.ext_actions[i].size(); ++e2)
        if (ext.ext_actions[i][e2] == moved) {
          reply[t][e2] += reply[t][e];
          reply[t][e] = R(0);
          break;
        }
    }
  }
  CounterDeviation<R> counter;
  counter.member = i;
  counter.strategy = with_member_strategy(profile, i, std::move(reply));
  counter.gain = expected_utility(ext.game, counter.strategy)[i] - member_utilities[best_member];
  counter.method = "reroute";
  if (!(counter.gain > R(0))) return std::nullopt;
  return counter;
}

}  // namespace detail

// Evaluates one coalition deviation: strict gains (clause a1), internal
// stability via per-member best responses (clause b1), and a counter
// deviation whenever the internal check fails.
template <class R>
DeviationReport<R> evaluate_deviation(const Game<R>& game, const StrategyProfile<R>& sigma,
                                      const std::vector<R>& sigma_utilities,
                                      std::span<const int> coalition,
                                      StrategyProfile<R> profile, const SearchConfig<R>& cfg,
                                      const Extension<R>* ext = nullptr) {
  DeviationReport<R> report;
  report.coalition.assign(coalition.begin(), coalition.end());
  report.profile = std::move(profile);

  const auto utilities = expected_utility(game, report.profile);
  report.all_strictly_gain = true;
  std::vector<R> member_utilities;
  for (int i : coalition) {
    member_utilities.push_back(utilities[i]);
    report.gains.push_back(utilities[i] - sigma_utilities[i]);
    if (!(report.gains.back() > cfg.strict_eps)) report.all_strictly_gain = false;
  }

  // Proposition-style flags: a gaining coalition must contain a member whose
  // (projected) behavior differs from sigma, and in the independent-type
  // setting a member who overplays some action.
  const StrategyProfile<R> base_behavior =
      ext ? ext->project(report.profile) : report.profile;
  const StrategyProfile<R>& base_sigma = ext ? ext->spec.sigma : sigma;
  const Game<R>& base_game = ext ? ext->base : game;
  for (int i : coalition) {
    if (base_behavior.play[i] != base_sigma.play[i]) report.projection_differs = true;
    for (int a = 0; a < base_game.num_actions(i); ++a) {
      R p_tau(0), p_sigma(0);
      for (int t = 0; t < base_game.num_types(i); ++t) {
        const R marg = base_game.type_marginal(i, t);
        p_tau += marg * base_behavior.play[i][t][a];
        p_sigma += marg * base_sigma.play[i][t][a];
      }
      if (p_tau > p_sigma) report.marginal_increase = true;
    }
  }

  if (!report.all_strictly_gain) return report;

  report.internal = verify_nash(game, report.profile, coalition);
  report.internally_stable = report.internal.is_nash(cfg.tolerance);
  if (report.internally_stable) return report;

  if (ext) {
    if (auto counter = detail::reroute_counter(*ext, report.profile, coalition,
                                               member_utilities)) {
      report.counter = std::move(counter);
      return report;
    }
  }
  // fallback: the best response of the member with the largest regret
  const int worst = report.internal.worst_player;
  const auto br = best_response(game, report.profile, worst);
  std::vector<std::vector<R>> reply(
      static_cast<std::size_t>(game.num_types(worst)),
      std::vector<R>(static_cast<std::size_t>(game.num_actions(worst)), R(0)));
  for (int t = 0; t < game.num_types(worst); ++t) reply[t][br.action[t]] = R(1);
  CounterDeviation<R> counter;
  counter.member = worst;
  counter.strategy = detail::with_member_strategy(report.profile, worst, std::move(reply));
  counter.gain = br.value - br.current;
  counter.method = "best-response";
  report.counter = std::move(counter);
  return report;
}

namespace detail {

// Pure behavioral strategies of one player, indexed type-0-slowest.
template <class R>
std::vector<std::vector<std::vector<R>>> pure_strategies(const Game<R>& game, int player) {
  const int num_types = game.num_types(player);
  const int num_actions = game.num_actions(player);
  std::size_t count = 1;
  for (int t = 0; t < num_types; ++t) count *= static_cast<std::size_t>(num_actions);
  std::vector<std::vector<std::vector<R>>> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::vector<R>> strategy(
        static_cast<std::size_t>(num_types),
        std::vector<R>(static_cast<std::size_t>(num_actions), R(0)));
    std::size_t rest = s;
    for (int t = num_types - 1; t >= 0; --t) {
      strategy[t][rest % static_cast<std::size_t>(num_actions)] = R(1);
      rest /= static_cast<std::size_t>(num_actions);
    }
    out.push_back(std::move(strategy));
  }
  return out;
}

// Grid strategies: per type, every pure action plus every two-action support
// mixed with the configured weights. Pure-everywhere combinations are skipped
// (the pure pass already covers them).
template <class R>
std::vector<std::vector<std::vector<R>>> grid_strategies(const Game<R>& game, int player,
                                                         const SearchConfig<R>& cfg) {
  const int num_types = game.num_types(player);
  const int num_actions = game.num_actions(player);
  std::vector<std::vector<R>> options;  // distributions for one type
  std::vector<bool> option_is_pure;
  for (int a = 0; a < num_actions; ++a) {
    std::vector<R> d(static_cast<std::size_t>(num_actions), R(0));
    d[a] = R(1);
    options.push_back(std::move(d));
    option_is_pure.push_back(true);
  }
  for (int a = 0; a < num_actions; ++a)
    for (int b = a + 1; b < num_actions; ++b)
      for (const auto& [num, den] : cfg.grid_weights) {
        std::vector<R> d(static_cast<std::size_t>(num_actions), R(0));
        d[a] = numeric_traits<R>::from_ratio(num, den);
        d[b] = R(1) - d[a];
        options.push_back(std::move(d));
        option_is_pure.push_back(false);
      }

  std::size_t count = 1;
  for (int t = 0; t < num_types; ++t) count *= options.size();
  std::vector<std::vector<std::vector<R>>> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::vector<R>> strategy;
    std::size_t rest = s;
    bool all_pure = true;
    for (int t = 0; t < num_types; ++t) {
      const std::size_t pick = rest % options.size();
      rest /= options.size();
      all_pure = all_pure && option_is_pure[pick];
      strategy.push_back(options[pick]);
    }
    std::reverse(strategy.begin(), strategy.end());
    if (all_pure) continue;
    out.push_back(std::move(strategy));
  }
  return out;
}

}  // namespace detail

// Bounded falsification search over coalition deviations (the quantifier over
// all mixed deviations is not enumerable): all pure joint deviations up to
// the coalition cap, plus an optional mixed grid. Results carry explicit
// coverage notes; "certified" always means certified over the searched space.
template <class R>
SearchResult<R> semi_strong_search(const Game<R>& game, const StrategyProfile<R>& sigma,
                                   const SearchConfig<R>& cfg,
                                   const Extension<R>* ext = nullptr) {
  sigma.validate(game);
  const auto sigma_utilities = expected_utility(game, sigma);
  const int n = game.num_players();

  SearchResult<R> result;
  std::vector<int> coalition;
  // coalitions in lexicographic order per size
  std::vector<std::vector<int>> coalitions;
  const int cap = std::min(cfg.coalition_cap, n);
  for (int size = 2; size <= cap; ++size) {
    std::vector<int> members(static_cast<std::size_t>(size));
    std::iota(members.begin(), members.end(), 0);
    while (true) {
      coalitions.push_back(members);
      int d = size - 1;
      while (d >= 0 && members[d] == n - size + d) --d;
      if (d < 0) break;
      ++members[d];
      for (int k = d + 1; k < size; ++k) members[k] = members[k - 1] + 1;
    }
  }

  for (const auto& members : coalitions) {
    std::vector<std::vector<std::vector<std::vector<R>>>> lists;  // per member
    for (int i : members) lists.push_back(detail::pure_strategies(game, i));
    if (cfg.mixed_grid)
      for (std::size_t m = 0; m < members.size(); ++m) {
        auto grid = detail::grid_strategies(game, members[m], cfg);
        for (auto& s : grid) lists[m].push_back(std::move(s));
      }

    std::size_t total = 1;
    bool overflow = false;
    for (const auto& list : lists) {
      if (overflow || total > cfg.max_candidates_per_coalition / list.size()) overflow = true;
      if (!overflow) total *= list.size();
    }
    std::size_t checked = total;
    if (overflow || total > cfg.max_candidates_per_coalition) {
      checked = cfg.max_candidates_per_coalition;
      result.truncated = true;
    }

    std::string note = "coalition {";
    for (std::size_t m = 0; m < members.size(); ++m)
      note += (m ? "," : "") + game.players[members[m]];
    note += "}: " + std::to_string(checked) + " candidate deviations";
    if (checked != total || overflow)
      note += overflow ? " (truncated)" : " (truncated from " + std::to_string(total) + ")";
    result.coverage.push_back(note);

    std::vector<std::pair<std::size_t, DeviationReport<R>>> found;
    parallel_for(checked, [&](std::size_t k) {
      std::vector<std::vector<std::vector<R>>> fragment;
      std::size_t rest = k;
      for (std::size_t m = members.size(); m-- > 0;) {
        fragment.push_back(lists[m][rest % lists[m].size()]);
        rest /= lists[m].size();
      }
      std::reverse(fragment.begin(), fragment.end());
      auto profile = detail::combine(sigma, members, fragment);
      auto report =
          evaluate_deviation(game, sigma, sigma_utilities, members, std::move(profile), cfg, ext);
      if (!report.all_strictly_gain) return;
#ifdef _OPENMP
#pragma omp critical
#endif
      found.emplace_back(k, std::move(report));
    }, cfg.parallel);

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    result.candidates_checked += checked;
    for (auto& [k, report] : found) {
      ++result.gaining;
      if (report.internally_stable) result.refuted = true;
      if (result.reports.size() < cfg.max_reports || report.internally_stable)
        result.reports.push_back(std::move(report));
    }
  }
  return result;
}

// Exhaustive enumeration of pure Nash equilibria (type-dependent pure
// strategies). Every returned profile passes verify_nash at the tolerance.
template <class R>
struct PureNashResult {
  std::vector<std::vector<std::vector<int>>> choices;  // [profile][player][type]
  std::vector<StrategyProfile<R>> profiles;
};

template <class R>
PureNashResult<R> enumerate_pure_nash(const Game<R>& game,
                                      R tolerance = numeric_traits<R>::default_tolerance(),
                                      std::size_t cap = std::size_t{1} << 22,
                                      bool parallel = true) {
  const int n = game.num_players();
  std::vector<std::size_t> strategy_counts;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    std::size_t c = 1;
    for (int t = 0; t < game.num_types(i); ++t) c *= static_cast<std::size_t>(game.num_actions(i));
    strategy_counts.push_back(c);
    if (total > cap / c + 1) throw ValidationError("pure-profile space exceeds the cap");
    total *= c;
  }
  if (total > cap) throw ValidationError("pure-profile space exceeds the cap");

  std::vector<std::pair<std::size_t, std::vector<std::vector<int>>>> hits;
  parallel_for(total, [&](std::size_t k) {
    std::vector<std::vector<int>> choice(static_cast<std::size_t>(n));
    std::size_t rest = k;
    for (int i = n - 1; i >= 0; --i) {
      std::size_t s = rest % strategy_counts[i];
      rest /= strategy_counts[i];
      choice[i].assign(static_cast<std::size_t>(game.num_types(i)), 0);
      for (int t = game.num_types(i) - 1; t >= 0; --t) {
        choice[i][t] = static_cast<int>(s % static_cast<std::size_t>(game.num_actions(i)));
        s /= static_cast<std::size_t>(game.num_actions(i));
      }
    }
    const auto prof = pure_profile(game, choice);
    if (!verify_nash(game, prof).is_nash(tolerance)) return;
#ifdef _OPENMP
#pragma omp critical
#endif
    hits.emplace_back(k, std::move(choice));
  }, parallel);

  std::sort(hits.begin(), hits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  PureNashResult<R> out;
  for (auto& [k, choice] : hits) {
    out.profiles.push_back(pure_profile(game, choice));
    out.choices.push_back(std::move(choice));
  }
  return out;
}

// Two-player support enumeration: for every support pair, solve the
// indifference system exactly and keep consistent, fully mixed, undominated
// solutions. Degenerate (underdetermined) systems are reported, not dropped.
template <class R>
struct SupportEnumerationResult {
  std::vector<StrategyProfile<R>> equilibria;
  std::vector<std::pair<unsigned long, unsigned long>> degenerate;  // support masks
};

template <class R>
SupportEnumerationResult<R> support_enumeration_2p(const Game<R>& game) {
  if (game.num_players() != 2 || !game.is_normal_form())
    throw ValidationError("support enumeration needs a two-player normal-form game");
  const int a0 = game.num_actions(0), a1 = game.num_actions(1);
  if (a0 > 10 || a1 > 10)
    throw ValidationError("support enumeration is limited to 10 actions per player");
  const R tol = numeric_traits<R>::default_tolerance();

  // row player's payoff u(a, b) = utilities[0][a * a1 + b], column's likewise
  auto u0 = [&game, a1](int a, int b) {
    return game.utilities[0][static_cast<std::size_t>(a) * a1 + b];
  };
  auto u1 = [&game, a1](int a, int b) {
    return game.utilities[1][static_cast<std::size_t>(a) * a1 + b];
  };

  // Solve for the opponent mixture that makes `support` indifferent.
  // Unknowns: the mixture over opp_support plus the value v.
  auto indifference = [tol](const std::vector<int>& support, const std::vector<int>& opp_support,
                            auto payoff) -> LinearSolution<R> {
    std::vector<std::vector<R>> m;
    std::vector<R> rhs;
    for (int a : support) {
      std::vector<R> row;
      for (int b : opp_support) row.push_back(payoff(a, b));
      row.push_back(R(-1));  // -v
      m.push_back(std::move(row));
      rhs.push_back(R(0));
    }
    std::vector<R> norm(opp_support.size(), R(1));
    norm.push_back(R(0));
    m.push_back(std::move(norm));
    rhs.push_back(R(1));
    return solve_linear<R>(std::move(m), std::move(rhs));
  };

  SupportEnumerationResult<R> out;
  for (unsigned long mask0 = 1; mask0 < (1ul << a0); ++mask0) {
    std::vector<int> s0;
    for (int a = 0; a < a0; ++a)
      if (mask0 & (1ul << a)) s0.push_back(a);
    for (unsigned long mask1 = 1; mask1 < (1ul << a1); ++mask1) {
      std::vector<int> s1;
      for (int b = 0; b < a1; ++b)
        if (mask1 & (1ul << b)) s1.push_back(b);
      // equal support sizes give square systems; unequal sizes only carry
      // equilibria in degenerate games, where the equal-size scan already
      // reports the degeneracy
      if (s0.size() != s1.size()) continue;

      const auto sol_y = indifference(s0, s1, u0);  // column player's mixture
      const auto sol_x = indifference(s1, s0, [&u1](int b, int a) { return u1(a, b); });
      if (sol_y.status == SolveStatus::underdetermined ||
          sol_x.status == SolveStatus::underdetermined) {
        out.degenerate.emplace_back(mask0, mask1);
        continue;
      }
      if (sol_y.status != SolveStatus::unique || sol_x.status != SolveStatus::unique) continue;

      const R v0 = sol_y.x.back(), v1 = sol_x.x.back();
      bool ok = true;
      for (std::size_t k = 0; k < s1.size() && ok; ++k) ok = sol_y.x[k] > tol;
      for (std::size_t k = 0; k < s0.size() && ok; ++k) ok = sol_x.x[k] > tol;
      if (!ok) continue;
      // off-support actions must not improve
      for (int a = 0; a < a0 && ok; ++a) {
        if (mask0 & (1ul << a)) continue;
        R value(0);
        for (std::size_t k = 0; k < s1.size(); ++k) value += sol_y.x[k] * u0(a, s1[k]);
        ok = !(value > v0 + tol);
      }
      for (int b = 0; b < a1 && ok; ++b) {
        if (mask1 & (1ul << b)) continue;
        R value(0);
        for (std::size_t k = 0; k < s0.size(); ++k) value += sol_x.x[k] * u1(s0[k], b);
        ok = !(value > v1 + tol);
      }
      if (!ok) continue;

      StrategyProfile<R> eq;
      eq.play.resize(2);
      eq.play[0].assign(1, std::vector<R>(static_cast<std::size_t>(a0), R(0)));
      eq.play[1].assign(1, std::vector<R>(static_cast<std::size_t>(a1), R(0)));
      for (std::size_t k = 0; k < s0.size(); ++k) eq.play[0][0][s0[k]] = sol_x.x[k];
      for (std::size_t k = 0; k < s1.size(); ++k) eq.play[1][0][s1[k]] = sol_y.x[k];
      if (std::find(out.equilibria.begin(), out.equilibria.end(), eq) == out.equilibria.end())
        out.equilibria.push_back(std::move(eq));
    }
  }
  return out;
}

// Free-function view matching the engine's operation list.
template <class R>
StrategyProfile<R> project_base(const Extension<R>& ext, const StrategyProfile<R>& profile) {
  return ext.project(profile);
}

}  // namespace betgames

#endif  // BETGAMES_SEARCH_HPP
