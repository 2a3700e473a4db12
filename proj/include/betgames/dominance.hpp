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

#ifndef BETGAMES_DOMINANCE_HPP
#define BETGAMES_DOMINANCE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betgames/extension.hpp"

namespace betgames {

enum class Dominance { pareto, quasi_pareto, neither };

inline const char* dominance_name(Dominance d) {
  switch (d) {
    case Dominance::pareto: return "pareto-dominates";
    case Dominance::quasi_pareto: return "quasi-pareto-dominates";
    case Dominance::neither: return "neither";
  }
  return "?";
}

template <class R>
struct DominanceVerdict {
  Dominance relation = Dominance::neither;
  bool strict = false;                  // strictly better for every player
  std::optional<int> worse_player;      // a pointwise violator when not pareto
  std::vector<int> witness_subset;      // a negative-sum subset when neither
};

// Pareto: pointwise weak dominance. Quasi-Pareto: every subset of size >= 2
// has weakly larger welfare; the worst subset of each size is the k smallest
// differences, so sorted prefix sums decide it in O(n log n). The exhaustive
// subset oracle lives in the tests.
template <class R>
DominanceVerdict<R> compare(std::span<const R> u_sigma, std::span<const R> u_tau,
                            R tol = numeric_traits<R>::default_tolerance()) {
  const int n = static_cast<int>(u_sigma.size());
  if (n < 2 || u_tau.size() != u_sigma.size())
    throw ValidationError("dominance comparison needs matching vectors of >= 2 players");
  std::vector<R> diff(static_cast<std::size_t>(n));
  DominanceVerdict<R> verdict;
  verdict.strict = true;
  bool pareto = true;
  for (int i = 0; i < n; ++i) {
    diff[i] = u_sigma[i] - u_tau[i];
    if (diff[i] < R(0) - tol) {
      pareto = false;
      if (!verdict.worse_player) verdict.worse_player = i;
    }
    if (!(diff[i] > tol)) verdict.strict = false;
  }
  if (pareto) {
    verdict.relation = Dominance::pareto;
    return verdict;
  }
  verdict.strict = false;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&diff](int a, int b) { return diff[a] < diff[b]; });
  R prefix(0);
  for (int k = 0; k < n; ++k) {
    prefix += diff[order[k]];
    if (k >= 1 && prefix < R(0) - tol) {
      verdict.relation = Dominance::neither;
      verdict.witness_subset.assign(order.begin(), order.begin() + k + 1);
      std::sort(verdict.witness_subset.begin(), verdict.witness_subset.end());
      return verdict;
    }
  }
  verdict.relation = Dominance::quasi_pareto;
  return verdict;
}

// L1 distance between the conditional distributions over the other players'
// action profiles induced by sigma and tau, given one's own type. Lives in
// [0, 2].
template <class R>
R manhattan_delta(const Game<R>& game, const StrategyProfile<R>& sigma,
                  const StrategyProfile<R>& tau, int player, int own_type) {
  const ProfileSpace others = game.action_space.without(player);
  std::vector<int> full(static_cast<std::size_t>(game.num_players()), 0);
  R out(0);
  for (std::size_t o = 0; o < others.size(); ++o) {
    int od = 0;
    for (int j = 0; j < game.num_players(); ++j)
      if (j != player) full[j] = others.digit(o, od++);
    const R p_sigma = conditional_profile_probability(game, sigma, player, own_type, full);
    const R p_tau = conditional_profile_probability(game, tau, player, own_type, full);
    out += numeric_traits<R>::abs(p_sigma - p_tau);
  }
  return out;
}

// Sign partition of the per-action probability gaps (X^> and X^<), plus the
// per-(player, type) partition over others' profiles used by the Bayesian
// analysis.
struct SupportSplit {
  std::vector<std::vector<int>> higher;  // actions played strictly more than under sigma
  std::vector<std::vector<int>> lower;   // strictly less
  std::vector<std::vector<std::vector<std::size_t>>> profile_higher;  // [player][type]
  std::vector<std::vector<std::vector<std::size_t>>> profile_lower;
};

template <class R>
SupportSplit support_split(const Game<R>& game, const StrategyProfile<R>& sigma,
                           const StrategyProfile<R>& tau, bool with_profiles = false) {
  detail::check_shape(game, sigma);
  detail::check_shape(game, tau);
  const int n = game.num_players();
  SupportSplit split;
  split.higher.resize(static_cast<std::size_t>(n));
  split.lower.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < game.num_actions(i); ++a) {
      const R p_sigma = action_probability(game, sigma, i, a);
      const R p_tau = action_probability(game, tau, i, a);
      if (p_tau > p_sigma) split.higher[i].push_back(a);
      if (p_tau < p_sigma) split.lower[i].push_back(a);
    }
  }
  if (!with_profiles) return split;

  split.profile_higher.resize(static_cast<std::size_t>(n));
  split.profile_lower.resize(static_cast<std::size_t>(n));
  std::vector<int> full(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const ProfileSpace others = game.action_space.without(i);
    split.profile_higher[i].resize(static_cast<std::size_t>(game.num_types(i)));
    split.profile_lower[i].resize(static_cast<std::size_t>(game.num_types(i)));
    for (int t = 0; t < game.num_types(i); ++t)
      for (std::size_t o = 0; o < others.size(); ++o) {
        int od = 0;
        for (int j = 0; j < n; ++j)
          if (j != i) full[j] = others.digit(o, od++);
        const R p_sigma = conditional_profile_probability(game, sigma, i, t, full);
        const R p_tau = conditional_profile_probability(game, tau, i, t, full);
        if (p_tau > p_sigma) split.profile_higher[i][t].push_back(o);
        if (p_tau < p_sigma) split.profile_lower[i][t].push_back(o);
      }
  }
  return split;
}

// Checks that every set bet played with positive probability contains the
// target's overplayed actions and avoids the underplayed ones (the shape
// forced on rational bettors; holds in every internally stable deviation).
struct SetBetShapeReport {
  bool compliant = true;
  std::string offender;  // first violation, for diagnostics
};

template <class R>
SetBetShapeReport set_bets_respect_support_split(const Extension<R>& ext,
                                                 const StrategyProfile<R>& profile) {
  if (ext.spec.construction != Construction::set_bets)
    throw ValidationError("set-bet shape check needs a set-bet extension");
  const auto split = support_split(ext.base, ext.spec.sigma, ext.project(profile));
  SetBetShapeReport report;
  for (int j = 0; j < ext.num_players() && report.compliant; ++j)
    for (int t = 0; t < ext.game.num_types(j) && report.compliant; ++t)
      for (std::size_t e = 0; e < ext.ext_actions[j].size(); ++e) {
        if (!(profile.play[j][t][e] > R(0))) continue;
        const Bet& bet = ext.ext_actions[j][e].bet;
        if (bet.kind != BetKind::set) continue;
        const int target = bet.target;
        const bool covers_higher = std::includes(bet.action_set.begin(), bet.action_set.end(),
                                                 split.higher[target].begin(),
                                                 split.higher[target].end());
        bool hits_lower = false;
        for (int a : split.lower[target])
          hits_lower = hits_lower || std::binary_search(bet.action_set.begin(),
                                                        bet.action_set.end(), a);
        if (!covers_higher || hits_lower) {
          report.compliant = false;
          report.offender = ext.game.players[j] + " plays " + ext.game.actions[j][e];
          break;
        }
      }
  return report;
}

// One inequality of the welfare chain: actual <= bound, slack = bound - actual.
template <class R>
struct ChainLink {
  std::string name;
  R actual{};
  R bound{};
  R slack{};
};

template <class R>
struct WelfareChainReport {
  std::vector<int> coalition;
  struct MemberRow {
    int player = 0;
    R base_utility{};   // u of the projected deviation
    R bet_gain{};       // w
    R bet_loss{};       // l inflicted by the other members
    R total{};          // u + w + l in the extended game
    R sigma_utility{};
  };
  std::vector<MemberRow> members;
  std::vector<ChainLink<R>> links;
  StrategyProfile<R> normalized;  // the profile actually evaluated
  R aggregate_total{};
  R aggregate_sigma{};

  bool all_nonnegative(R tol = numeric_traits<R>::default_tolerance()) const {
    for (const auto& link : links)
      if (link.slack < R(0) - tol) return false;
    return true;
  }
};

// Per-link verification of the aggregate-welfare argument for profile-bet
// extensions: members keep tau's base behavior but their bets are normalized
// to the gain-maximizing profile bet (placed iff its expected gain is
// positive), which is what internal stability forces. Every inequality is
// evaluated with its slack; the final link is
// sum_S u(extension) <= sum_S u(sigma).
template <class R>
WelfareChainReport<R> welfare_chain_check(const Extension<R>& ext,
                                          std::span<const int> coalition,
                                          const StrategyProfile<R>& tau) {
  if (ext.spec.construction != Construction::profile_bets)
    throw ValidationError("the welfare chain applies to profile-bet extensions");
  if (coalition.size() < 2) throw ValidationError("coalitions need at least two members");
  const Game<R>& base = ext.base;
  const StrategyProfile<R>& sigma = ext.spec.sigma;
  const R c = ext.spec.penalty;
  const R m = ext.spec.span.width;
  const int n = base.num_players();

  std::vector<char> in_coalition(static_cast<std::size_t>(n), 0);
  for (int i : coalition) in_coalition[i] = 1;

  // members' base behavior, everyone else on sigma
  const StrategyProfile<R> tau_base_all = ext.project(tau);
  StrategyProfile<R> dev_base = sigma;
  for (int i : coalition) dev_base.play[i] = tau_base_all.play[i];

  WelfareChainReport<R> report;
  report.coalition.assign(coalition.begin(), coalition.end());

  // gain-maximizing bets per (member, type); ties break at the first profile
  std::vector<std::vector<std::optional<std::size_t>>> best_bet(static_cast<std::size_t>(n));
  std::vector<std::vector<R>> best_gain(static_cast<std::size_t>(n));
  std::vector<std::vector<R>> hit_prob(static_cast<std::size_t>(n));
  std::vector<std::vector<R>> delta(static_cast<std::size_t>(n));
  std::vector<int> full(static_cast<std::size_t>(n), 0);
  for (int i : coalition) {
    const ProfileSpace others = base.action_space.without(i);
    best_bet[i].resize(static_cast<std::size_t>(base.num_types(i)));
    best_gain[i].assign(static_cast<std::size_t>(base.num_types(i)), R(0));
    hit_prob[i].assign(static_cast<std::size_t>(base.num_types(i)), R(0));
    delta[i].assign(static_cast<std::size_t>(base.num_types(i)), R(0));
    for (int t = 0; t < base.num_types(i); ++t) {
      delta[i][t] = manhattan_delta(base, sigma, dev_base, i, t);
      for (std::size_t o = 0; o < others.size(); ++o) {
        int od = 0;
        for (int j = 0; j < n; ++j)
          if (j != i) full[j] = others.digit(o, od++);
        const R gain = conditional_profile_probability(base, dev_base, i, t, full) -
                       conditional_profile_probability(base, sigma, i, t, full);
        if (gain > best_gain[i][t]) {
          best_gain[i][t] = gain;
          best_bet[i][t] = o;
        }
      }
      if (best_bet[i][t]) {
        int od = 0;
        const std::size_t o = *best_bet[i][t];
        for (int j = 0; j < n; ++j)
          if (j != i) full[j] = others.digit(o, od++);
        hit_prob[i][t] = conditional_profile_probability(base, dev_base, i, t, full);
      }
    }
  }

  // assemble the normalized extended profile
  StrategyProfile<R> normalized = ext.lift(dev_base);
  for (int i : coalition) {
    const ProfileSpace others = base.action_space.without(i);
    for (int t = 0; t < base.num_types(i); ++t) {
      if (!best_bet[i][t]) continue;
      std::vector<R> dist(ext.ext_actions[i].size(), R(0));
      for (int a = 0; a < base.num_actions(i); ++a) {
        const R p = dev_base.play[i][t][a];
        if (!(p > R(0))) continue;
        const std::size_t eact = static_cast<std::size_t>(base.num_actions(i)) +
                                 base.action_space.embed(others, *best_bet[i][t], i, a);
        dist[eact] += p;
      }
      normalized.play[i][t] = std::move(dist);
    }
  }
  report.normalized = normalized;

  const auto total = expected_utility(ext.game, normalized);
  const auto base_values = expected_utility(base, dev_base);
  const auto sigma_values = expected_utility(base, sigma);

  // expected penalty inflicted by each member's bets (victim-independent)
  std::vector<R> inflicted(static_cast<std::size_t>(n), R(0));
  for (int i : coalition)
    for (int t = 0; t < base.num_types(i); ++t)
      if (best_bet[i][t]) inflicted[i] -= base.type_marginal(i, t) * hit_prob[i][t] * c;

  R aggregate_total(0), aggregate_sigma(0);
  for (int i : coalition) {
    typename WelfareChainReport<R>::MemberRow row;
    row.player = i;
    row.base_utility = base_values[i];
    row.sigma_utility = sigma_values[i];
    // E[w | t] of the placed bet is hit*(1-p_sigma) - (1-hit)*p_sigma, which
    // collapses to the bet's expected gain
    for (int t = 0; t < base.num_types(i); ++t)
      if (best_bet[i][t]) row.bet_gain += base.type_marginal(i, t) * best_gain[i][t];
    for (int j : coalition)
      if (j != i) row.bet_loss += inflicted[j];
    row.total = total[i];
    aggregate_total += row.total;
    aggregate_sigma += row.sigma_utility;

    // exact decomposition u + w + l of the synthesized utilities
    report.links.push_back({"decomposition(" + base.players[i] + ")",
                            row.base_utility + row.bet_gain + row.bet_loss, row.total,
                            row.total - (row.base_utility + row.bet_gain + row.bet_loss)});

    const ProfileSpace others = base.action_space.without(i);
    const R others_size = R(static_cast<long long>(others.size()));
    for (int t = 0; t < base.num_types(i); ++t) {
      const std::string suffix = "(" + base.players[i] + "," + base.types[i][t] + ")";
      // conditional utility cannot beat sigma's by more than distance * span
      const R lhs = conditional_utility(base, dev_base, i, t);
      const R rhs = conditional_utility(base, sigma, i, t) + delta[i][t] * m;
      report.links.push_back({"base-utility-bound" + suffix, lhs, rhs, rhs - lhs});
      // the best bet gain is at most the distance
      const R gain = best_bet[i][t] ? best_gain[i][t] : R(0);
      report.links.push_back({"bet-gain-bound" + suffix, gain, delta[i][t],
                              delta[i][t] - gain});
      // a gain-maximizing bet hits often enough to hurt every victim
      const R loss = best_bet[i][t] ? R(-hit_prob[i][t] * c) : R(0);
      const R loss_bound = R(-delta[i][t] * c / (R(2) * others_size));
      report.links.push_back({"inflicted-loss-bound" + suffix, loss, loss_bound,
                              loss_bound - loss});
      // the penalty scale covers the distance-driven slack in the aggregate
      const R coverage = R(static_cast<long long>(coalition.size() - 1)) * delta[i][t] * c /
                         (R(2) * others_size);
      const R needed = delta[i][t] * (m + R(1));
      report.links.push_back({"penalty-coverage" + suffix, needed, coverage,
                              coverage - needed});
    }
    report.members.push_back(std::move(row));
  }

  report.aggregate_total = aggregate_total;
  report.aggregate_sigma = aggregate_sigma;
  report.links.push_back(
      {"aggregate-welfare", aggregate_total, aggregate_sigma, aggregate_sigma - aggregate_total});
  return report;
}

}  // namespace betgames

#endif  // BETGAMES_DOMINANCE_HPP
