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

#ifndef BETGAMES_RANDOM_HPP
#define BETGAMES_RANDOM_HPP

#include <random>

#include "betgames/game.hpp"

namespace betgames {

using Rng = std::mt19937_64;

// Random distribution with small exact denominators, so rational-mode sweeps
// stay fast.
template <class R>
std::vector<R> random_distribution(int k, Rng& rng, int denom = 16) {
  std::uniform_int_distribution<int> weight(0, denom);
  std::vector<int> w(static_cast<std::size_t>(k));
  long total = 0;
  for (auto& x : w) total += (x = weight(rng));
  if (total == 0) {
    w[static_cast<std::size_t>(rng() % static_cast<unsigned long>(k))] = 1;
    total = 1;
  }
  std::vector<R> dist(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) dist[a] = R(w[a]) / R(total);
  return dist;
}

template <class R>
StrategyProfile<R> random_profile(const Game<R>& game, Rng& rng, int denom = 16) {
  StrategyProfile<R> p;
  p.play.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    p.play[i].resize(static_cast<std::size_t>(game.num_types(i)));
    for (int t = 0; t < game.num_types(i); ++t)
      p.play[i][t] = random_distribution<R>(game.num_actions(i), rng, denom);
  }
  return p;
}

template <class R>
StrategyProfile<R> random_pure_profile(const Game<R>& game, Rng& rng) {
  std::vector<std::vector<int>> choice(static_cast<std::size_t>(game.num_players()));
  for (int i = 0; i < game.num_players(); ++i) {
    std::uniform_int_distribution<int> pick(0, game.num_actions(i) - 1);
    for (int t = 0; t < game.num_types(i); ++t) choice[i].push_back(pick(rng));
  }
  return pure_profile(game, choice);
}

template <class R>
struct RandomBayesian {
  Game<R> game;
  StrategyProfile<R> sigma;
};

// Random Bayesian game whose uniform profile is an exact Nash equilibrium:
// every player's conditional payoff is made constant across own actions when
// the others mix uniformly (subtract the per-action mean over others'
// profiles, add back the grand mean). Uniform mixing makes others' actions
// uniform regardless of type correlation, so the prior can stay arbitrary.
template <class R>
RandomBayesian<R> random_uniform_nash_bayesian(int players, int num_actions, int num_types,
                                               Rng& rng) {
  RandomBayesian<R> out;
  Game<R>& g = out.game;
  for (int i = 0; i < players; ++i) g.players.push_back("P" + std::to_string(i + 1));
  std::vector<std::string> action_labels, type_labels;
  for (int a = 0; a < num_actions; ++a) action_labels.push_back("a" + std::to_string(a));
  for (int t = 0; t < num_types; ++t) type_labels.push_back("t" + std::to_string(t));
  g.actions.assign(static_cast<std::size_t>(players), action_labels);
  g.types.assign(static_cast<std::size_t>(players), type_labels);

  std::size_t type_profiles = 1;
  for (int i = 0; i < players; ++i) type_profiles *= static_cast<std::size_t>(num_types);
  std::uniform_int_distribution<int> prior_weight(1, 8);
  std::vector<int> w(type_profiles);
  long total = 0;
  for (auto& x : w) total += (x = prior_weight(rng));
  g.prior.resize(type_profiles);
  for (std::size_t t = 0; t < type_profiles; ++t) g.prior[t] = R(w[t]) / R(total);

  std::size_t action_profiles = 1;
  for (int i = 0; i < players; ++i) action_profiles *= static_cast<std::size_t>(num_actions);
  std::uniform_int_distribution<int> util(0, 10);
  g.utilities.assign(static_cast<std::size_t>(players), {});
  for (int i = 0; i < players; ++i) {
    g.utilities[i].resize(static_cast<std::size_t>(num_types) * action_profiles);
    for (auto& v : g.utilities[i]) v = R(util(rng));
  }
  g.finalize();

  // Orthogonalize: for each (player, type, own action) remove the mean over
  // the others' profiles, then restore the mean over own actions.
  const std::size_t others = action_profiles / static_cast<std::size_t>(num_actions);
  for (int i = 0; i < players; ++i) {
    const std::size_t own_stride = g.action_space.stride(i);
    const ProfileSpace others_space = g.action_space.without(i);
    for (int t = 0; t < num_types; ++t) {
      std::vector<R> mean(static_cast<std::size_t>(num_actions), R(0));
      R grand(0);
      for (int a = 0; a < num_actions; ++a) {
        for (std::size_t o = 0; o < others_space.size(); ++o) {
          const std::size_t full = g.action_space.embed(others_space, o, i, a);
          mean[a] += g.utility(i, t, full);
        }
        mean[a] /= R(static_cast<long long>(others));
        grand += mean[a];
      }
      grand /= R(num_actions);
      for (int a = 0; a < num_actions; ++a)
        for (std::size_t o = 0; o < others_space.size(); ++o) {
          const std::size_t full = g.action_space.embed(others_space, o, i, a);
          g.utility(i, t, full) += grand - mean[a];
        }
    }
  }
  out.sigma = uniform_profile(g);
  return out;
}

}  // namespace betgames

#endif  // BETGAMES_RANDOM_HPP
