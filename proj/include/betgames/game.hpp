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

#ifndef BETGAMES_GAME_HPP
#define BETGAMES_GAME_HPP

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "betgames/errors.hpp"
#include "betgames/indexing.hpp"
#include "betgames/numeric.hpp"

namespace betgames {

template <class R>
struct UtilitySpan {
  R min{};
  R max{};
  R width{};  // max - min
};

// Finite Bayesian game with dense utility tables. Normal-form games are the
// single-type special case, so one enumeration code path serves both.
//
// utilities[i] is indexed by own_type * action_space.size() + profile_index.
template <class R>
class Game {
 public:
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  std::vector<std::vector<std::string>> types;
  std::vector<R> prior;                   // over type_space
  std::vector<std::vector<R>> utilities;  // per player

  ProfileSpace action_space;
  ProfileSpace type_space;

  int num_players() const { return static_cast<int>(players.size()); }
  int num_actions(int i) const { return static_cast<int>(actions[i].size()); }
  int num_types(int i) const { return static_cast<int>(types[i].size()); }

  bool is_normal_form() const {
    return std::all_of(types.begin(), types.end(),
                       [](const auto& t) { return t.size() == 1; });
  }

  int max_actions() const {
    int m = 0;
    for (int i = 0; i < num_players(); ++i) m = std::max(m, num_actions(i));
    return m;
  }

  const R& utility(int player, int own_type, std::size_t profile_index) const {
    return utilities[player][static_cast<std::size_t>(own_type) * action_space.size() +
                             profile_index];
  }

  R& utility(int player, int own_type, std::size_t profile_index) {
    return utilities[player][static_cast<std::size_t>(own_type) * action_space.size() +
                             profile_index];
  }

  const R& type_marginal(int player, int type) const { return marginals_[player][type]; }

  int find_action(int player, const std::string& label) const {
    const auto& labels = actions[player];
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      throw ValidationError("unknown action '" + label + "' for player " + players[player]);
    return static_cast<int>(it - labels.begin());
  }

  int find_type(int player, const std::string& label) const {
    const auto& labels = types[player];
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      throw ValidationError("unknown type '" + label + "' for player " + players[player]);
    return static_cast<int>(it - labels.begin());
  }

  int find_player(const std::string& name) const {
    const auto it = std::find(players.begin(), players.end(), name);
    if (it == players.end()) throw ValidationError("unknown player '" + name + "'");
    return static_cast<int>(it - players.begin());
  }

  // Builds the index spaces, checks every invariant, computes type marginals.
  // Must be called after the public fields are filled in.
  void finalize() {
    using T = numeric_traits<R>;
    const int n = num_players();
    if (n < 2) throw ValidationError("a game needs at least two players", "/players");
    if (static_cast<int>(actions.size()) != n)
      throw ValidationError("actions list does not match the player list", "/actions");
    if (types.empty()) types.assign(static_cast<std::size_t>(n), {"*"});
    if (static_cast<int>(types.size()) != n)
      throw ValidationError("types list does not match the player list", "/types");

    check_labels(players, "/players");
    std::vector<int> action_radices, type_radices;
    for (int i = 0; i < n; ++i) {
      if (actions[i].empty())
        throw ValidationError("empty action set", "/actions/" + std::to_string(i));
      check_labels(actions[i], "/actions/" + std::to_string(i));
      check_labels(types[i], "/types/" + std::to_string(i));
      action_radices.push_back(num_actions(i));
      type_radices.push_back(num_types(i));
    }
    action_space = ProfileSpace(action_radices);
    type_space = ProfileSpace(type_radices);

    if (prior.empty() && type_space.size() == 1) prior = {R(1)};
    if (prior.size() != type_space.size())
      throw ValidationError("prior must cover every type profile", "/prior");

    R total(0);
    for (std::size_t t = 0; t < prior.size(); ++t) {
      if (!T::finite(prior[t]) || prior[t] < R(0))
        throw ValidationError("prior probabilities must be finite and nonnegative",
                              "/prior/" + std::to_string(t));
      total += prior[t];
    }
    if (T::abs(total - R(1)) > prior_tolerance())
      throw ValidationError("prior probabilities must sum to 1 (got " + T::str(total) + ")",
                            "/prior");

    // Every individual type must have positive marginal probability.
    marginals_.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
      marginals_[i].assign(static_cast<std::size_t>(num_types(i)), R(0));
      for (std::size_t t = 0; t < type_space.size(); ++t)
        marginals_[i][static_cast<std::size_t>(type_space.digit(t, i))] += prior[t];
      for (int ti = 0; ti < num_types(i); ++ti) {
        if (!(marginals_[i][ti] > R(0)))
          throw ValidationError("type '" + types[i][ti] + "' of player " + players[i] +
                                    " has zero probability",
                                "/prior");
      }
    }

    if (static_cast<int>(utilities.size()) != n)
      throw ValidationError("utilities must be given for every player", "/utilities");
    for (int i = 0; i < n; ++i) {
      const std::size_t expect =
          static_cast<std::size_t>(num_types(i)) * action_space.size();
      if (utilities[i].size() != expect)
        throw ValidationError("utility table for player " + players[i] + " has " +
                                  std::to_string(utilities[i].size()) + " entries, expected " +
                                  std::to_string(expect),
                              "/utilities");
      for (const R& v : utilities[i])
        if (!T::finite(v)) throw ValidationError("utilities must be finite", "/utilities");
    }
  }

 private:
  static R prior_tolerance() {
    if constexpr (numeric_traits<R>::is_exact) {
      return R(0);
    } else {
      return R(1e-9);
    }
  }

  static void check_labels(const std::vector<std::string>& labels, const std::string& locus) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw ValidationError("labels must be nonempty", locus);
      if (!seen.insert(l).second) throw ValidationError("duplicate label '" + l + "'", locus);
    }
  }

  std::vector<std::vector<R>> marginals_;
};

// Behavioral strategy profile: one distribution over actions per player and
// own type.
template <class R>
struct StrategyProfile {
  std::vector<std::vector<std::vector<R>>> play;  // [player][type][action]

  void validate(const Game<R>& game) const {
    using T = numeric_traits<R>;
    const R tol = T::is_exact ? R(0) : R(1e-9);
    if (static_cast<int>(play.size()) != game.num_players())
      throw ValidationError("strategy profile does not match the player list");
    for (int i = 0; i < game.num_players(); ++i) {
      if (static_cast<int>(play[i].size()) != game.num_types(i))
        throw ValidationError("strategy for player " + game.players[i] +
                              " does not cover every type");
      for (int t = 0; t < game.num_types(i); ++t) {
        const auto& dist = play[i][t];
        if (static_cast<int>(dist.size()) != game.num_actions(i))
          throw ValidationError("distribution size mismatch for player " + game.players[i]);
        R total(0);
        for (const R& p : dist) {
          if (!T::finite(p) || p < R(0) - tol)
            throw ValidationError("strategy probabilities must be nonnegative");
          total += p;
        }
        if (T::abs(total - R(1)) > tol)
          throw ValidationError("strategy for player " + game.players[i] + ", type " +
                                game.types[i][t] + " sums to " + T::str(total));
      }
    }
  }

  bool operator==(const StrategyProfile&) const = default;
};

template <class R>
UtilitySpan<R> utility_span(const Game<R>& game) {
  UtilitySpan<R> s;
  bool first = true;
  for (const auto& table : game.utilities) {
    for (const R& v : table) {
      if (first) {
        s.min = s.max = v;
        first = false;
      } else {
        if (v < s.min) s.min = v;
        if (v > s.max) s.max = v;
      }
    }
  }
  s.width = s.max - s.min;
  return s;
}

// Pure behavioral profile: choice[i][t] is the action player i plays on type t.
template <class R>
StrategyProfile<R> pure_profile(const Game<R>& game,
                                const std::vector<std::vector<int>>& choice) {
  StrategyProfile<R> p;
  p.play.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    p.play[i].assign(static_cast<std::size_t>(game.num_types(i)),
                     std::vector<R>(static_cast<std::size_t>(game.num_actions(i)), R(0)));
    for (int t = 0; t < game.num_types(i); ++t) p.play[i][t][choice[i][t]] = R(1);
  }
  return p;
}

// Pure profile for a normal-form game (one action per player).
template <class R>
StrategyProfile<R> pure_profile(const Game<R>& game, const std::vector<int>& choice) {
  std::vector<std::vector<int>> by_type(choice.size());
  for (std::size_t i = 0; i < choice.size(); ++i)
    by_type[i].assign(static_cast<std::size_t>(game.num_types(static_cast<int>(i))), choice[i]);
  return pure_profile(game, by_type);
}

template <class R>
StrategyProfile<R> uniform_profile(const Game<R>& game) {
  StrategyProfile<R> p;
  p.play.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    const R w = R(1) / R(game.num_actions(i));
    p.play[i].assign(static_cast<std::size_t>(game.num_types(i)),
                     std::vector<R>(static_cast<std::size_t>(game.num_actions(i)), w));
  }
  return p;
}

}  // namespace betgames

#endif  // BETGAMES_GAME_HPP
