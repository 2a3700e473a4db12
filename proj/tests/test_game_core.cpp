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

#include <doctest.h>

#include "betgames/oracles.hpp"
#include "betgames/random.hpp"
#include "betgames/scenarios.hpp"

using namespace betgames;
namespace sc = betgames::scenarios;
using Rat = Rational;

namespace {

Rat frac(long num, long den) { return Rat(num, den); }

// Test-side brute force for the majority game: enumerate all 2^n profiles
// with weight (1/2)^n; player i wins iff its value is at least tied.
Rat majority_uniform_value_oracle(int n, int player) {
  Rat out(0);
  const Rat w = Rat(1) / Rat(1l << n);
  for (unsigned long p = 0; p < (1ul << n); ++p) {
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += static_cast<int>(p >> i & 1);
    const int own = static_cast<int>(p >> player & 1);
    const int same = own == 1 ? ones : n - ones;
    if (same >= n - same) out += w;
  }
  return out;
}

}  // namespace

TEST_CASE("expected utility: worked scenarios") {
  auto pirates = sc::pirates<Rat>();
  const auto all_cooperate = sc::pirates_sigma<Rat>();
  CHECK(expected_utility(pirates, all_cooperate) == std::vector<Rat>{100, 100, 100});

  auto parity = sc::parity<Rat>();
  CHECK(expected_utility(parity, sc::parity_sigma<Rat>()) ==
        std::vector<Rat>{frac(1, 2), frac(1, 2), frac(1, 2)});
  CHECK(expected_utility(parity, sc::parity_tau<Rat>()) == std::vector<Rat>{1, 1, 1});

  auto maj = sc::majority<Rat>(3);
  const auto uniform = uniform_profile(maj);
  CHECK(majority_uniform_value_oracle(3, 0) == frac(3, 4));
  for (int i = 0; i < 3; ++i)
    CHECK(expected_utility(maj, uniform)[i] == majority_uniform_value_oracle(3, i));
}

TEST_CASE("expected utility: pirates coalition payoffs") {
  auto pirates = sc::pirates<Rat>();
  const auto two_defect = pure_profile(pirates, std::vector<int>{1, 1, 0});
  CHECK(expected_utility(pirates, two_defect) == std::vector<Rat>{150, 150, 0});
  const auto one_defects = pure_profile(pirates, std::vector<int>{1, 0, 0});
  CHECK(expected_utility(pirates, one_defects) == std::vector<Rat>{100, 100, 100});
}

TEST_CASE("conditional utility") {
  auto parity = sc::parity<Rat>();
  const auto tau = sc::parity_tau<Rat>();
  // Posterior for type 0 of player 1 is {(0,1),(1,0)} at 1/2 each; the action
  // sum stays odd either way.
  CHECK(conditional_utility(parity, tau, 0, 0) == Rat(1));
  CHECK(conditional_utility(parity, tau, 0, 0) == conditional_utility(parity, tau, 0, 0));

  auto pirates = sc::pirates<Rat>();
  const auto sigma = sc::pirates_sigma<Rat>();
  for (int i = 0; i < 3; ++i)
    CHECK(conditional_utility(pirates, sigma, i, 0) == expected_utility(pirates, sigma)[i]);
}

TEST_CASE("action probability") {
  auto maj = sc::majority<Rat>(3);
  const auto uniform = uniform_profile(maj);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a) CHECK(action_probability(maj, uniform, i, a) == frac(1, 2));

  const auto pure = pure_profile(maj, std::vector<int>{1, 0, 1});
  CHECK(action_probability(maj, pure, 0, 1) == Rat(1));
  CHECK(action_probability(maj, pure, 0, 0) == Rat(0));

  // Each parity type has marginal 1/2 under the odd-sum prior.
  auto parity = sc::parity<Rat>();
  const auto tau = sc::parity_tau<Rat>();
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a) CHECK(action_probability(parity, tau, i, a) == frac(1, 2));

  CHECK_THROWS_AS(action_probability(maj, uniform, 0, 7), ValidationError);
}

TEST_CASE("conditional profile probability") {
  auto parity = sc::parity<Rat>();
  const auto sigma = sc::parity_sigma<Rat>();
  const auto tau = sc::parity_tau<Rat>();
  const std::vector<int> others01{-1, 0, 1};  // slot 0 ignored
  const std::vector<int> others00{-1, 0, 0};
  CHECK(conditional_profile_probability<Rat>(parity, sigma, 0, 0, others01) == frac(1, 4));
  CHECK(conditional_profile_probability<Rat>(parity, tau, 0, 0, others01) == frac(1, 2));
  CHECK(conditional_profile_probability<Rat>(parity, tau, 0, 0, others00) == Rat(0));
}

TEST_CASE("probability and expectation invariants on random profiles") {
  Rng rng(20260810);
  auto parity = sc::parity<Rat>();
  auto pirates = sc::pirates<Rat>();
  for (int round = 0; round < 25; ++round) {
    for (const auto* game : {&parity, &pirates}) {
      const auto prof = random_profile(*game, rng);
      for (int i = 0; i < game->num_players(); ++i) {
        Rat total(0);
        for (int a = 0; a < game->num_actions(i); ++a)
          total += action_probability(*game, prof, i, a);
        CHECK(total == Rat(1));

        // conditional profile probabilities sum to 1 over others' profiles
        for (int t = 0; t < game->num_types(i); ++t) {
          Rat psum(0);
          const ProfileSpace others = game->action_space.without(i);
          std::vector<int> full(static_cast<std::size_t>(game->num_players()), 0);
          for (std::size_t o = 0; o < others.size(); ++o) {
            int od = 0;
            for (int j = 0; j < game->num_players(); ++j)
              if (j != i) full[j] = others.digit(o, od++);
            psum += conditional_profile_probability(*game, prof, i, t, full);
          }
          CHECK(psum == Rat(1));
        }

        // law of total expectation over own types
        Rat mix(0);
        for (int t = 0; t < game->num_types(i); ++t)
          mix += game->type_marginal(i, t) * conditional_utility(*game, prof, i, t);
        CHECK(mix == expected_utility(*game, prof)[i]);
      }
    }
  }
}

TEST_CASE("normal-form games round-trip through the single-type representation") {
  // Matching pennies built plainly and with an explicit singleton type.
  Game<Rat> plain;
  plain.players = {"A", "B"};
  plain.actions.assign(2, {"H", "T"});
  plain.utilities = {{1, -1, -1, 1}, {-1, 1, 1, -1}};
  plain.finalize();

  Game<Rat> typed = plain;
  typed.types = {{"only"}, {"only"}};
  typed.prior = {Rat(1)};
  typed.finalize();

  Rng rng(7);
  for (int round = 0; round < 10; ++round) {
    const auto prof = random_profile(plain, rng);
    CHECK(expected_utility(plain, prof) == expected_utility(typed, prof));
  }
}

TEST_CASE("utility span") {
  const auto span = utility_span(sc::pirates<Rat>());
  CHECK(span.min == Rat(0));
  CHECK(span.max == Rat(150));
  CHECK(span.width == Rat(150));
}

TEST_CASE("validation rejects malformed games and profiles") {
  auto bad_prior = sc::parity<Rat>();
  bad_prior.prior[1] = frac(1, 5);  // sums to 0.95
  CHECK_THROWS_AS(bad_prior.finalize(), ValidationError);

  // A type with zero marginal probability violates the standing assumption.
  auto zero_type = sc::parity<Rat>();
  for (std::size_t t = 0; t < 8; ++t) zero_type.prior[t] = Rat(0);
  zero_type.prior[3] = frac(1, 2);  // types (0,1,1)
  zero_type.prior[5] = frac(1, 2);  // types (1,0,1)
  CHECK_THROWS_AS(zero_type.finalize(), ValidationError);

  auto maj = sc::majority<Rat>(3);
  StrategyProfile<Rat> short_profile;
  short_profile.play.assign(2, {std::vector<Rat>{1, 0}});
  CHECK_THROWS_AS(expected_utility(maj, short_profile), ValidationError);

  StrategyProfile<Rat> bad_sum;
  bad_sum.play.assign(3, {std::vector<Rat>{frac(1, 2), frac(1, 3)}});
  CHECK_THROWS_AS(bad_sum.validate(maj), ValidationError);
}

TEST_CASE("float mode matches rational mode on the worked examples") {
  auto parity = sc::parity<double>();
  const auto u_sigma = expected_utility(parity, sc::parity_sigma<double>());
  const auto u_tau = expected_utility(parity, sc::parity_tau<double>());
  for (int i = 0; i < 3; ++i) {
    CHECK(u_sigma[i] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(u_tau[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
}
