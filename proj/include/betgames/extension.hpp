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

#ifndef BETGAMES_EXTENSION_HPP
#define BETGAMES_EXTENSION_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betgames/engine.hpp"
#include "betgames/parallel.hpp"

namespace betgames {

enum class Construction {
  action_bets,              // normal-form games
  independent_action_bets,  // Bayesian games with independent types
  profile_bets,             // arbitrary Bayesian games
  set_bets,                 // finite shadow of the countable construction
};

inline const char* construction_name(Construction c) {
  switch (c) {
    case Construction::action_bets: return "action-bets";
    case Construction::independent_action_bets: return "independent-action-bets";
    case Construction::profile_bets: return "profile-bets";
    case Construction::set_bets: return "set-bets";
  }
  return "?";
}

enum class BetKind { none, action, profile, set };

// A bet rides on top of a base action. Action bets may target the bettor
// itself; set bets and profile bets exclude self-targeting by construction.
struct Bet {
  BetKind kind = BetKind::none;
  int target = -1;              // action and set bets
  int target_action = -1;       // action bets
  std::vector<int> others;      // profile bets: full-size vector, own slot = -1
  std::vector<int> action_set;  // set bets: sorted action ids of the target

  bool operator==(const Bet&) const = default;
};

struct ExtendedAction {
  int base = 0;  // projection onto the original action set
  Bet bet;

  bool operator==(const ExtendedAction&) const = default;
};

struct SetBetOptions {
  // Subset menus are exhaustive (all nonempty proper subsets) up to this
  // action-set size. Beyond it, 2^|A_j| growth forces a curated family: the
  // support of sigma_j, its complement, and the singletons/co-singletons of
  // the support. The complement of the support covers every X^> that can
  // arise from a deviation off sigma's support.
  int exhaustive_limit = 12;
  std::map<int, std::vector<std::vector<int>>> explicit_sets;  // per target player
};

template <class R>
struct BuildOptions {
  std::optional<R> penalty;  // override for C (action-bet constructions only)
  bool check_nash = true;
  R nash_tolerance = numeric_traits<R>::default_tolerance();
  SetBetOptions set_bets;
  bool parallel = true;
};

// Raised when the designated reference profile fails the Nash check.
template <class R>
class NotNashError : public ValidationError {
 public:
  NotNashError(RegretCertificate<R> cert, const std::string& who)
      : ValidationError("profile is not a Nash equilibrium: player " + who +
                        " gains " + numeric_traits<R>::str(cert.max_regret) +
                        " by deviating"),
        certificate(std::move(cert)) {}

  RegretCertificate<R> certificate;
};

template <class R>
struct ExtensionSpec {
  Construction construction = Construction::action_bets;
  StrategyProfile<R> sigma;  // the reference equilibrium
  UtilitySpan<R> span;       // M over the base game
  R penalty{};               // C, or the M+1 loss constant for set bets
  int a_max = 0;             // max_i |A_i|
  std::vector<std::vector<std::vector<int>>> set_menus;  // per target, set bets only
};

namespace detail {

template <class R>
struct BetRuntime {
  BetKind kind = BetKind::none;
  int target = -1;
  int target_action = -1;
  std::size_t others_index = 0;   // profile bets: index into others_space[bettor]
  std::vector<char> in_set;       // set bets: membership over target's actions
  R p_sigma{};                    // event probability under sigma (action/set bets)
};

}  // namespace detail

template <class R>
class Extension;

template <class R>
Extension<R> build_extension(const Game<R>& game, const StrategyProfile<R>& sigma,
                             Construction construction, const BuildOptions<R>& opts = {});

// The bet-augmented game Gamma^sigma, materialized as an ordinary Game so the
// whole engine applies unchanged. Utilities are u + w + l: on bet-free
// profiles they coincide with the base game exactly.
template <class R>
class Extension {
 public:
  Game<R> base;
  ExtensionSpec<R> spec;
  Game<R> game;  // the extended game
  std::vector<std::vector<ExtendedAction>> ext_actions;  // per player

  int num_players() const { return base.num_players(); }

  // Bet-free embedding of a base-game profile (plain base actions come first
  // in every extended action set, in base order).
  StrategyProfile<R> lift(const StrategyProfile<R>& base_profile) const {
    base_profile.validate(base);
    StrategyProfile<R> out;
    out.play.resize(base.num_players());
    for (int i = 0; i < base.num_players(); ++i) {
      out.play[i].assign(static_cast<std::size_t>(base.num_types(i)),
                         std::vector<R>(ext_actions[i].size(), R(0)));
      for (int t = 0; t < base.num_types(i); ++t)
        for (int a = 0; a < base.num_actions(i); ++a)
          out.play[i][t][a] = base_profile.play[i][t][a];
    }
    return out;
  }

  // Pushforward onto base actions: probabilities of extended actions with the
  // same first component are summed.
  StrategyProfile<R> project(const StrategyProfile<R>& ext_profile) const {
    detail::check_shape(game, ext_profile);
    StrategyProfile<R> out;
    out.play.resize(base.num_players());
    for (int i = 0; i < base.num_players(); ++i) {
      out.play[i].assign(static_cast<std::size_t>(base.num_types(i)),
                         std::vector<R>(static_cast<std::size_t>(base.num_actions(i)), R(0)));
      for (int t = 0; t < base.num_types(i); ++t)
        for (std::size_t e = 0; e < ext_actions[i].size(); ++e)
          out.play[i][t][ext_actions[i][e].base] += ext_profile.play[i][t][e];
    }
    return out;
  }

  // w term for `bettor` with `bettor_type` at the realized extended profile:
  // 0 with no bet, 1 - p_sigma(event) on a hit, -p_sigma(event) on a miss.
  R win_term(int bettor, int bettor_type, std::span<const int> eprofile) const {
    const auto& rt = bet_rt_[bettor][eprofile[bettor]];
    switch (rt.kind) {
      case BetKind::none:
        return R(0);
      case BetKind::action: {
        const int realized = ext_actions[rt.target][eprofile[rt.target]].base;
        return realized == rt.target_action ? R(1) - rt.p_sigma : R(-rt.p_sigma);
      }
      case BetKind::set: {
        const int realized = ext_actions[rt.target][eprofile[rt.target]].base;
        return rt.in_set[realized] ? R(1) - rt.p_sigma : R(-rt.p_sigma);
      }
      case BetKind::profile: {
        const R p = sigma_cond_[bettor][bettor_type][rt.others_index];
        return rt.others_index == realized_others_index(bettor, eprofile) ? R(1) - p : R(-p);
      }
    }
    return R(0);
  }

  // l term for `victim`: one penalty per player whose bet covers the victim's
  // realized behavior. For profile bets a hit penalizes every other player.
  R loss_term(int victim, std::span<const int> eprofile) const {
    R total(0);
    const int n = num_players();
    for (int j = 0; j < n; ++j) {
      const auto& rt = bet_rt_[j][eprofile[j]];
      switch (rt.kind) {
        case BetKind::none:
          break;
        case BetKind::action:
          if (rt.target == victim &&
              ext_actions[victim][eprofile[victim]].base == rt.target_action)
            total -= spec.penalty;
          break;
        case BetKind::set:
          if (rt.target == victim && rt.in_set[ext_actions[victim][eprofile[victim]].base])
            total -= spec.penalty;
          break;
        case BetKind::profile:
          if (j != victim && rt.others_index == realized_others_index(j, eprofile))
            total -= spec.penalty;
          break;
      }
    }
    return total;
  }

  // sigma's marginal action probabilities in the base game.
  const std::vector<std::vector<R>>& sigma_action_prob() const { return sigma_action_prob_; }

  // sigma's conditional others-profile probabilities, [player][type][others].
  const std::vector<std::vector<std::vector<R>>>& sigma_conditional() const {
    return sigma_cond_;
  }

  const ProfileSpace& others_space(int player) const { return others_space_[player]; }

  std::size_t realized_others_index(int player, std::span<const int> eprofile) const {
    const auto& os = others_space_[player];
    std::size_t idx = 0;
    int od = 0;
    for (int j = 0; j < num_players(); ++j) {
      if (j == player) continue;
      idx += os.stride(od) * static_cast<std::size_t>(ext_actions[j][eprofile[j]].base);
      ++od;
    }
    return idx;
  }

  // Exact extended-action count and the stated |A_i|*|P|*|A|_max cap for the
  // action-bet constructions; the exact count can exceed the cap, which the
  // reports flag rather than paper over.
  std::size_t theorem_size_bound(int player) const {
    return static_cast<std::size_t>(base.num_actions(player)) *
           static_cast<std::size_t>(base.num_players()) *
           static_cast<std::size_t>(spec.a_max);
  }

  friend Extension<R> build_extension<R>(const Game<R>&, const StrategyProfile<R>&,
                                         Construction, const BuildOptions<R>&);
  void synthesize_utilities(bool parallel);

 private:
  std::vector<std::vector<detail::BetRuntime<R>>> bet_rt_;  // [player][ext action]
  std::vector<std::vector<R>> sigma_action_prob_;           // [player][action]
  std::vector<std::vector<std::vector<R>>> sigma_cond_;     // [player][type][others]
  std::vector<ProfileSpace> others_space_;                  // per player
};

// Deterrent constant: one above the strict lower bound for action bets (the
// smallest integral margin), the pinned closed forms otherwise.
template <class R>
R default_penalty(const Game<R>& game, Construction construction) {
  const UtilitySpan<R> span = utility_span(game);
  const R m = span.width;
  switch (construction) {
    case Construction::action_bets:
    case Construction::independent_action_bets: {
      const R bound = m * R(game.max_actions());
      return (bound > R(1) ? bound : R(1)) + R(1);
    }
    case Construction::profile_bets:
      return R(2) * R(static_cast<long long>(game.action_space.size())) * (m + R(1));
    case Construction::set_bets:
      return m + R(1);
  }
  return R(0);
}

template <class R>
bool prior_is_independent(const Game<R>& game) {
  const R tol = numeric_traits<R>::is_exact ? R(0) : R(1e-9);
  std::vector<int> tdig(static_cast<std::size_t>(game.num_players()));
  for (std::size_t t = 0; t < game.type_space.size(); ++t) {
    game.type_space.decode(t, tdig);
    R product(1);
    for (int i = 0; i < game.num_players(); ++i)
      product *= game.type_marginal(i, tdig[i]);
    if (numeric_traits<R>::abs(product - game.prior[t]) > tol) return false;
  }
  return true;
}

namespace detail {

inline std::string render_action_subset(const std::vector<std::string>& labels,
                                        const std::vector<int>& ids) {
  // Compresses integer-labeled runs ("1-100"); otherwise lists the labels.
  std::vector<long> nums;
  bool numeric = true;
  for (int id : ids) {
    try {
      std::size_t used = 0;
      const long v = std::stol(labels[id], &used);
      if (used != labels[id].size()) throw std::invalid_argument("");
      nums.push_back(v);
    } catch (...) {
      numeric = false;
      break;
    }
  }
  std::string out = "{";
  if (numeric && !nums.empty()) {
    for (std::size_t k = 0; k < nums.size();) {
      std::size_t r = k;
      while (r + 1 < nums.size() && nums[r + 1] == nums[r] + 1) ++r;
      if (k > 0) out += ",";
      out += std::to_string(nums[k]);
      if (r > k + 1) out += "-" + std::to_string(nums[r]);
      else if (r == k + 1) out += "," + std::to_string(nums[r]);
      k = r + 1;
    }
  } else {
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (k > 0) out += ",";
      out += labels[ids[k]];
    }
  }
  return out + "}";
}

template <class R>
std::string render_extended_action(const Game<R>& base, int player, const ExtendedAction& ea) {
  std::string label = base.actions[player][ea.base];
  switch (ea.bet.kind) {
    case BetKind::none:
      return label;
    case BetKind::action:
      return label + "+bet(" + base.players[ea.bet.target] + "=" +
             base.actions[ea.bet.target][ea.bet.target_action] + ")";
    case BetKind::set:
      return label + "+bet(" + base.players[ea.bet.target] + " in " +
             render_action_subset(base.actions[ea.bet.target], ea.bet.action_set) + ")";
    case BetKind::profile: {
      std::string out = label + "+bet(";
      bool first = true;
      for (int j = 0; j < base.num_players(); ++j) {
        if (j == player) continue;
        if (!first) out += ",";
        out += base.players[j] + "=" + base.actions[j][ea.bet.others[j]];
        first = false;
      }
      return out + ")";
    }
  }
  return label;
}

// Subset menu for bets on player j's actions.
template <class R>
std::vector<std::vector<int>> set_bet_menu(const Game<R>& game,
                                           const std::vector<std::vector<R>>& action_prob,
                                           int target, const SetBetOptions& opts) {
  if (const auto it = opts.explicit_sets.find(target); it != opts.explicit_sets.end()) {
    for (const auto& set : it->second) {
      if (set.empty() || set.size() >= static_cast<std::size_t>(game.num_actions(target)))
        throw ValidationError("set bets must target nonempty proper subsets");
      for (int a : set)
        if (a < 0 || a >= game.num_actions(target))
          throw ValidationError("set bet contains an unknown action id");
    }
    return it->second;
  }

  const int k = game.num_actions(target);
  std::vector<std::vector<int>> menu;
  if (k <= opts.exhaustive_limit) {
    for (unsigned long mask = 1; mask + 1 < (1ul << k); ++mask) {
      std::vector<int> set;
      for (int a = 0; a < k; ++a)
        if (mask & (1ul << a)) set.push_back(a);
      menu.push_back(std::move(set));
    }
    return menu;
  }

  std::vector<int> support, complement;
  for (int a = 0; a < k; ++a)
    (action_prob[target][a] > R(0) ? support : complement).push_back(a);
  auto push_unique = [&menu, k](std::vector<int> set) {
    if (set.empty() || static_cast<int>(set.size()) >= k) return;
    if (std::find(menu.begin(), menu.end(), set) == menu.end()) menu.push_back(std::move(set));
  };
  push_unique(support);
  push_unique(complement);
  for (int a : support) {
    push_unique({a});
    std::vector<int> co;
    for (int b = 0; b < k; ++b)
      if (b != a) co.push_back(b);
    push_unique(std::move(co));
  }
  return menu;
}

}  // namespace detail

template <class R>
void Extension<R>::synthesize_utilities(bool parallel) {
  const int n = num_players();
  const std::size_t esize = game.action_space.size();
  for (int i = 0; i < n; ++i)
    game.utilities[i].assign(static_cast<std::size_t>(game.num_types(i)) * esize, R(0));

  parallel_for(esize, [&](std::size_t e) {
    std::vector<int> edig(static_cast<std::size_t>(n));
    game.action_space.decode(e, edig);
    std::vector<int> bdig(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) bdig[j] = ext_actions[j][edig[j]].base;
    const std::size_t bidx = base.action_space.index_of(bdig);
    for (int i = 0; i < n; ++i) {
      const R loss = loss_term(i, edig);
      for (int t = 0; t < base.num_types(i); ++t) {
        game.utilities[i][static_cast<std::size_t>(t) * esize + e] =
            base.utility(i, t, bidx) + win_term(i, t, edig) + loss;
      }
    }
  }, parallel);
}

// Serial reference for the table synthesis kernel, kept for testing the
// OpenMP path against.
template <class R>
void synthesize_utilities_serial(Extension<R>& ext) {
  ext.synthesize_utilities(false);
}

template <class R>
Extension<R> build_extension(const Game<R>& game, const StrategyProfile<R>& sigma,
                             Construction construction, const BuildOptions<R>& opts) {
  sigma.validate(game);

  switch (construction) {
    case Construction::action_bets:
      if (!game.is_normal_form())
        throw ValidationError(
            "action-bets applies to normal-form games; use independent-action-bets for "
            "Bayesian games with independent types");
      break;
    case Construction::independent_action_bets:
    case Construction::set_bets:
      if (!prior_is_independent(game))
        throw ValidationError("the prior does not factorize into independent types");
      break;
    case Construction::profile_bets:
      break;
  }

  if (opts.check_nash) {
    const auto cert = verify_nash(game, sigma);
    if (!cert.is_nash(opts.nash_tolerance))
      throw NotNashError<R>(cert, game.players[cert.worst_player]);
  }

  Extension<R> ext;
  ext.base = game;
  ext.spec.construction = construction;
  ext.spec.sigma = sigma;
  ext.spec.span = utility_span(game);
  ext.spec.a_max = game.max_actions();

  const R default_c = default_penalty(game, construction);
  if (opts.penalty) {
    if (construction == Construction::profile_bets || construction == Construction::set_bets) {
      if (*opts.penalty != default_c)
        throw ValidationError("this construction pins the penalty to " +
                              numeric_traits<R>::str(default_c));
    } else {
      const R m_amax = ext.spec.span.width * R(ext.spec.a_max);
      const R bound = m_amax > R(1) ? m_amax : R(1);
      if (!(*opts.penalty > bound))
        throw ValidationError("penalty must exceed max{M*|A|_max, 1} = " +
                              numeric_traits<R>::str(bound));
    }
    ext.spec.penalty = *opts.penalty;
  } else {
    ext.spec.penalty = default_c;
  }

  const int n = game.num_players();
  ext.others_space_.reserve(n);
  for (int i = 0; i < n; ++i) ext.others_space_.push_back(game.action_space.without(i));

  // sigma's event probabilities, evaluated once.
  ext.sigma_action_prob_.assign(static_cast<std::size_t>(n), {});
  for (int j = 0; j < n; ++j) {
    ext.sigma_action_prob_[j].resize(static_cast<std::size_t>(game.num_actions(j)));
    for (int a = 0; a < game.num_actions(j); ++a)
      ext.sigma_action_prob_[j][a] = action_probability(game, sigma, j, a);
  }
  if (construction == Construction::profile_bets) {
    ext.sigma_cond_.assign(static_cast<std::size_t>(n), {});
    std::vector<int> full(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const auto& os = ext.others_space_[i];
      ext.sigma_cond_[i].assign(static_cast<std::size_t>(game.num_types(i)),
                                std::vector<R>(os.size(), R(0)));
      for (std::size_t o = 0; o < os.size(); ++o) {
        int od = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          full[j] = os.digit(o, od++);
        }
        full[i] = 0;
        for (int t = 0; t < game.num_types(i); ++t)
          ext.sigma_cond_[i][t][o] = conditional_profile_probability(game, sigma, i, t, full);
      }
    }
  }

  // Extended action sets: plain base actions first, then the bet-carrying
  // pairs in a deterministic order.
  ext.ext_actions.assign(static_cast<std::size_t>(n), {});
  if (construction == Construction::set_bets) {
    ext.spec.set_menus.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      ext.spec.set_menus[j] =
          detail::set_bet_menu(game, ext.sigma_action_prob_, j, opts.set_bets);
  }
  for (int i = 0; i < n; ++i) {
    auto& list = ext.ext_actions[i];
    for (int a = 0; a < game.num_actions(i); ++a) list.push_back({a, Bet{}});
    switch (construction) {
      case Construction::action_bets:
      case Construction::independent_action_bets:
        for (int a = 0; a < game.num_actions(i); ++a)
          for (int j = 0; j < n; ++j)  // self-bets are representable
            for (int aj = 0; aj < game.num_actions(j); ++aj)
              list.push_back({a, Bet{BetKind::action, j, aj, {}, {}}});
        break;
      case Construction::profile_bets: {
        std::vector<int> digits(static_cast<std::size_t>(n));
        for (std::size_t p = 0; p < game.action_space.size(); ++p) {
          game.action_space.decode(p, digits);
          Bet bet{BetKind::profile, -1, -1, digits, {}};
          bet.others[i] = -1;
          list.push_back({digits[i], std::move(bet)});
        }
        break;
      }
      case Construction::set_bets:
        for (int a = 0; a < game.num_actions(i); ++a)
          for (int j = 0; j < n; ++j) {
            if (j == i) continue;  // no self-targeting
            for (const auto& set : ext.spec.set_menus[j])
              list.push_back({a, Bet{BetKind::set, j, -1, {}, set}});
          }
        break;
    }
  }

  // Per-action runtime data for the w/l evaluation.
  ext.bet_rt_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    ext.bet_rt_[i].resize(ext.ext_actions[i].size());
    for (std::size_t e = 0; e < ext.ext_actions[i].size(); ++e) {
      const Bet& bet = ext.ext_actions[i][e].bet;
      auto& rt = ext.bet_rt_[i][e];
      rt.kind = bet.kind;
      rt.target = bet.target;
      rt.target_action = bet.target_action;
      if (bet.kind == BetKind::action) {
        rt.p_sigma = ext.sigma_action_prob_[bet.target][bet.target_action];
      } else if (bet.kind == BetKind::set) {
        rt.in_set.assign(static_cast<std::size_t>(game.num_actions(bet.target)), 0);
        rt.p_sigma = R(0);
        for (int a : bet.action_set) {
          rt.in_set[a] = 1;
          rt.p_sigma += ext.sigma_action_prob_[bet.target][a];
        }
      } else if (bet.kind == BetKind::profile) {
        const auto& os = ext.others_space_[i];
        std::size_t idx = 0;
        int od = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          idx += os.stride(od) * static_cast<std::size_t>(bet.others[j]);
          ++od;
        }
        rt.others_index = idx;
      }
    }
  }

  // Assemble the extended game and synthesize u + w + l.
  ext.game.players = game.players;
  ext.game.types = game.types;
  ext.game.prior = game.prior;
  ext.game.actions.assign(static_cast<std::size_t>(n), {});
  std::size_t esize = 1;
  for (int i = 0; i < n; ++i) {
    for (const auto& ea : ext.ext_actions[i])
      ext.game.actions[i].push_back(detail::render_extended_action(game, i, ea));
    esize *= ext.ext_actions[i].size();
  }
  ext.game.utilities.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i)
    ext.game.utilities[i].assign(static_cast<std::size_t>(game.num_types(i)) * esize, R(0));
  ext.game.finalize();
  ext.synthesize_utilities(opts.parallel);
  ext.game.finalize();
  return ext;
}

// Free-function views of the w/l terms, matching the operation contracts.
template <class R>
R win_term(const Extension<R>& ext, int bettor, int bettor_type,
           std::span<const int> extended_profile) {
  return ext.win_term(bettor, bettor_type, extended_profile);
}

// E[w] for a bettor holding `ext_action` with `bettor_type`, the rest of the
// table following `profile`: the direct enumeration route of the bet-payoff
// identity (the probability oracles give the other route).
template <class R>
R expected_win(const Extension<R>& ext, const StrategyProfile<R>& profile, int bettor,
               int bettor_type, int ext_action) {
  const Game<R>& game = ext.game;
  detail::check_shape(game, profile);
  R out(0);
  std::vector<int> tdig(static_cast<std::size_t>(game.num_players()));
  std::vector<int> edig(static_cast<std::size_t>(game.num_players()));
  for (std::size_t t = 0; t < game.type_space.size(); ++t) {
    if (game.type_space.digit(t, bettor) != bettor_type) continue;
    if (!(game.prior[t] > R(0))) continue;
    game.type_space.decode(t, tdig);
    detail::for_each_others_support(
        game, profile, tdig, bettor, [&](std::span<const int> digits, const R& w) {
          std::copy(digits.begin(), digits.end(), edig.begin());
          edig[bettor] = ext_action;
          out += game.prior[t] * w * ext.win_term(bettor, bettor_type, edig);
        });
  }
  return out / game.type_marginal(bettor, bettor_type);
}

template <class R>
R loss_term(const Extension<R>& ext, int victim, std::span<const int> extended_profile) {
  return ext.loss_term(victim, extended_profile);
}

}  // namespace betgames

#endif  // BETGAMES_EXTENSION_HPP
