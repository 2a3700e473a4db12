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

#include "betgames/extension.hpp"
#include "betgames/random.hpp"
#include "betgames/scenarios.hpp"

using namespace betgames;
namespace sc = betgames::scenarios;
using Rat = Rational;

namespace {

Rat frac(long num, long den) { return Rat(num, den); }

int find_ext(const Extension<Rat>& ext, int player, int base, const Bet& bet) {
  const auto& list = ext.ext_actions[player];
  for (std::size_t e = 0; e < list.size(); ++e)
    if (list[e].base == base && list[e].bet == bet) return static_cast<int>(e);
  FAIL("extended action not found");
  return -1;
}

Bet action_bet(int target, int action) { return Bet{BetKind::action, target, action, {}, {}}; }

Bet set_bet(int target, std::vector<int> set) {
  return Bet{BetKind::set, target, -1, {}, std::move(set)};
}

Bet profile_bet(int own, std::vector<int> others) {
  Bet b{BetKind::profile, -1, -1, std::move(others), {}};
  b.others[own] = -1;
  return b;
}

// E[w | bettor holds ext action `eact` and type `type`], the others following
// `tau` in the extended game. Enumerates type posteriors and others' supports
// directly; the identity tests compare this against p_tau - p_sigma computed
// through the probability oracles, which never touch the w tables.
Rat expected_win(const Extension<Rat>& ext, const StrategyProfile<Rat>& tau, int bettor,
                 int type, int eact) {
  const auto& game = ext.game;
  Rat out(0);
  std::vector<int> tdig(static_cast<std::size_t>(game.num_players()));
  std::vector<int> edig(static_cast<std::size_t>(game.num_players()));
  for (std::size_t t = 0; t < game.type_space.size(); ++t) {
    if (game.type_space.digit(t, bettor) != type) continue;
    if (!(game.prior[t] > Rat(0))) continue;
    game.type_space.decode(t, tdig);
    detail::for_each_others_support(game, tau, tdig, bettor,
                                    [&](std::span<const int> digits, const Rat& w) {
                                      std::copy(digits.begin(), digits.end(), edig.begin());
                                      edig[bettor] = eact;
                                      out += game.prior[t] * w * ext.win_term(bettor, type, edig);
                                    });
  }
  return out / game.type_marginal(bettor, type);
}

}  // namespace

TEST_CASE("extended action-set sizes match the closed forms") {
  auto pirates = sc::pirates<Rat>();
  auto ext = build_extension(pirates, sc::pirates_sigma<Rat>(), Construction::action_bets);
  for (int i = 0; i < 3; ++i) {
    // |A_i| * (1 + sum_j |A_j|) = 2 * (1 + 6) = 14
    CHECK(ext.ext_actions[i].size() == 14);
    CHECK(ext.game.num_actions(i) == 14);
    // the stated |A_i|*|P|*|A|_max cap is 12: the exact count exceeds it
    CHECK(ext.theorem_size_bound(i) == 12);
    CHECK(ext.ext_actions[i].size() > ext.theorem_size_bound(i));
  }

  auto parity = sc::parity<Rat>();
  auto pext = build_extension(parity, sc::parity_sigma<Rat>(), Construction::profile_bets);
  for (int i = 0; i < 3; ++i) CHECK(pext.ext_actions[i].size() == 10);  // |A_i| + |A|

  auto maj = sc::majority<Rat>(3);
  auto sext = build_extension(maj, uniform_profile(maj), Construction::set_bets);
  // 2 proper subsets per target, 2 targets: 2 * (1 + 4) = 10
  for (int i = 0; i < 3; ++i) CHECK(sext.ext_actions[i].size() == 10);
}

TEST_CASE("set-bet menus fall back to the support family on large action sets") {
  auto game = sc::truncated_zero<Rat>(100);
  auto ext = build_extension(game, sc::truncated_zero_sigma(game), Construction::set_bets);
  REQUIRE(ext.spec.set_menus.size() == 2);
  for (int j = 0; j < 2; ++j) {
    REQUIRE(ext.spec.set_menus[j].size() == 2);
    CHECK(ext.spec.set_menus[j][0] == std::vector<int>{0});  // sigma's support
    CHECK(ext.spec.set_menus[j][1].size() == 100);           // its complement {1..100}
  }
  CHECK(ext.ext_actions[0].size() == 101 * 3);
  CHECK(ext.game.actions[0][101 + 1] == "0+bet(P2 in {1-100})");
}

TEST_CASE("restriction to bet-free profiles reproduces the original table") {
  auto parity = sc::parity<Rat>();
  auto ext = build_extension(parity, sc::parity_sigma<Rat>(), Construction::profile_bets);
  std::vector<int> digits(3);
  for (std::size_t p = 0; p < parity.action_space.size(); ++p) {
    parity.action_space.decode(p, digits);
    const std::size_t e = ext.game.action_space.index_of(digits);  // plain ids == base ids
    for (int i = 0; i < 3; ++i)
      for (int t = 0; t < 2; ++t) CHECK(ext.game.utility(i, t, e) == parity.utility(i, t, p));
  }
}

TEST_CASE("win term cases") {
  auto maj = sc::majority<Rat>(3);
  auto ext = build_extension(maj, uniform_profile(maj), Construction::action_bets);
  // player 2 bets that player 1 plays action 0 (indices 1 and 0)
  const int bet01 = find_ext(ext, 1, 0, action_bet(0, 0));
  std::vector<int> eprof{0, bet01, 0};
  CHECK(ext.win_term(1, 0, eprof) == frac(1, 2));  // hit: 1 - 1/2
  eprof[0] = 1;
  CHECK(ext.win_term(1, 0, eprof) == frac(-1, 2));  // miss: -1/2
  eprof[1] = 0;                                     // no bet
  CHECK(ext.win_term(1, 0, eprof) == Rat(0));
}

TEST_CASE("loss term cases") {
  auto pirates = sc::pirates<Rat>();
  BuildOptions<Rat> opts;
  opts.penalty = Rat(601);
  auto ext = build_extension(pirates, sc::pirates_sigma<Rat>(), Construction::action_bets, opts);
  const int defect = 1;
  const int bet_p1_defect = find_ext(ext, 1, 0, action_bet(0, defect));

  std::vector<int> eprof{defect, bet_p1_defect, 0};
  CHECK(ext.loss_term(0, eprof) == Rat(-601));
  CHECK(ext.loss_term(1, eprof) == Rat(0));

  // two correct bets on player 1 stack up
  const int bet_p1_defect_by3 = find_ext(ext, 2, 0, action_bet(0, defect));
  eprof[2] = bet_p1_defect_by3;
  CHECK(ext.loss_term(0, eprof) == Rat(-1202));

  // a missing bet costs the target nothing
  eprof[0] = 0;
  CHECK(ext.loss_term(0, eprof) == Rat(0));
}

TEST_CASE("profile-bet hits penalize every other player") {
  auto parity = sc::parity<Rat>();
  auto ext = build_extension(parity, sc::parity_sigma<Rat>(), Construction::profile_bets);
  // player 3 bets that players 1 and 2 play (0, 1), while playing base 0
  const int bet = find_ext(ext, 2, 0, profile_bet(2, {0, 1, 0}));
  const std::vector<int> eprof{0, 1, bet};
  CHECK(ext.loss_term(0, eprof) == Rat(-32));
  CHECK(ext.loss_term(1, eprof) == Rat(-32));
  CHECK(ext.loss_term(2, eprof) == Rat(0));

  // same bet missing: nobody pays
  const std::vector<int> miss{1, 1, bet};
  CHECK(ext.loss_term(0, miss) == Rat(0));
  CHECK(ext.loss_term(1, miss) == Rat(0));
}

TEST_CASE("default penalty formulas") {
  // max{M*|A|_max, 1} + 1 on a span-300 game
  Game<Rat> wide;
  wide.players = {"A", "B"};
  wide.actions.assign(2, {"x", "y"});
  wide.utilities = {{0, 300, 5, 7}, {1, 2, 3, 4}};
  wide.finalize();
  CHECK(default_penalty(wide, Construction::action_bets) == Rat(601));

  CHECK(default_penalty(sc::parity<Rat>(), Construction::profile_bets) == Rat(32));
  CHECK(default_penalty(sc::majority<Rat>(3), Construction::set_bets) == Rat(2));
  // M = 0 leaves the max{.., 1} floor in charge
  Game<Rat> flat;
  flat.players = {"A", "B"};
  flat.actions.assign(2, {"x", "y"});
  flat.utilities = {{1, 1, 1, 1}, {1, 1, 1, 1}};
  flat.finalize();
  CHECK(default_penalty(flat, Construction::action_bets) == Rat(2));
  // the two-action pirates table spans 150, not the full treasure
  CHECK(default_penalty(sc::pirates<Rat>(), Construction::action_bets) == Rat(301));
}

TEST_CASE("bet-payoff identity for action bets") {
  auto maj = sc::majority<Rat>(3);
  const auto sigma = uniform_profile(maj);
  auto ext = build_extension(maj, sigma, Construction::action_bets);
  Rng rng(42);
  for (int round = 0; round < 40; ++round) {
    const auto tau = random_profile(ext.game, rng);
    const auto projected = ext.project(tau);
    for (int j = 0; j < 3; ++j)
      for (int aj = 0; aj < 2; ++aj) {
        const int bettor = (j + 1) % 3;
        const int eact = find_ext(ext, bettor, 0, action_bet(j, aj));
        const Rat lhs = expected_win(ext, tau, bettor, 0, eact);
        const Rat rhs = action_probability(maj, projected, j, aj) -
                        action_probability(maj, sigma, j, aj);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("bet-payoff identity for profile bets, conditioned on type") {
  auto parity = sc::parity<Rat>();
  const auto sigma = sc::parity_sigma<Rat>();
  auto ext = build_extension(parity, sigma, Construction::profile_bets);
  Rng rng(43);
  std::vector<int> full(3);
  for (int round = 0; round < 25; ++round) {
    const auto tau = random_profile(ext.game, rng);
    const auto projected = ext.project(tau);
    for (int i = 0; i < 3; ++i)
      for (int t = 0; t < 2; ++t)
        for (int b1 = 0; b1 < 2; ++b1)
          for (int b2 = 0; b2 < 2; ++b2) {
            int slot = 0;
            for (int j = 0; j < 3; ++j) full[j] = j == i ? -1 : (slot++ == 0 ? b1 : b2);
            auto bet = profile_bet(
                i, {full[0] < 0 ? 0 : full[0], full[1] < 0 ? 0 : full[1],
                    full[2] < 0 ? 0 : full[2]});
            const int eact = find_ext(ext, i, 0, bet);
            const Rat lhs = expected_win(ext, tau, i, t, eact);
            const Rat rhs =
                conditional_profile_probability(parity, projected, i, t, full) -
                conditional_profile_probability(parity, sigma, i, t, full);
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("bet-payoff identity for set bets and monotonicity driver") {
  auto maj = sc::majority<Rat>(3);
  const auto sigma = uniform_profile(maj);
  auto ext = build_extension(maj, sigma, Construction::set_bets);
  Rng rng(44);
  for (int round = 0; round < 40; ++round) {
    const auto tau = random_profile(ext.game, rng);
    const auto projected = ext.project(tau);
    for (int j = 0; j < 3; ++j) {
      const int bettor = (j + 1) % 3;
      for (const std::vector<int>& set : ext.spec.set_menus[j]) {
        const int eact = find_ext(ext, bettor, 0, set_bet(j, set));
        Rat p_tau(0), p_sigma(0);
        for (int a : set) {
          p_tau += action_probability(maj, projected, j, a);
          p_sigma += action_probability(maj, sigma, j, a);
        }
        CHECK(expected_win(ext, tau, bettor, 0, eact) == p_tau - p_sigma);
      }
    }
  }
}

namespace {

// E[w] when the bettor keeps sigma's base behavior, places `bet` with
// probability 1, and everyone else plays sigma bet-free. Self-bets need the
// product form: the bet hit must not be correlated with the base draw.
Rat neutral_win(const Extension<Rat>& ext, const StrategyProfile<Rat>& sigma,
                const StrategyProfile<Rat>& lifted, int bettor, int type, const Bet& bet) {
  Rat out(0);
  for (int a = 0; a < ext.base.num_actions(bettor); ++a) {
    const Rat p = sigma.play[bettor][type][a];
    if (!(p > Rat(0))) continue;
    out += p * expected_win(ext, lifted, bettor, type, find_ext(ext, bettor, a, bet));
  }
  return out;
}

}  // namespace

TEST_CASE("zero-bet neutrality: every bet is worthless against sigma") {
  auto parity = sc::parity<Rat>();
  const auto sigma = sc::parity_sigma<Rat>();
  {
    auto ext = build_extension(parity, sigma, Construction::profile_bets);
    const auto lifted = ext.lift(sigma);
    for (int i = 0; i < 3; ++i)
      for (const auto& ea : ext.ext_actions[i]) {
        if (ea.bet.kind == BetKind::none || ea.base != 0) continue;  // one rep per bet
        for (int t = 0; t < 2; ++t)
          CHECK(neutral_win(ext, sigma, lifted, i, t, ea.bet) == Rat(0));
      }
  }

  auto maj = sc::majority<Rat>(3);
  const auto msigma = uniform_profile(maj);
  for (auto construction : {Construction::action_bets, Construction::set_bets}) {
    auto ext = build_extension(maj, msigma, construction);
    const auto lifted = ext.lift(msigma);
    for (int i = 0; i < 3; ++i)
      for (const auto& ea : ext.ext_actions[i]) {
        if (ea.bet.kind == BetKind::none || ea.base != 0) continue;
        CHECK(neutral_win(ext, msigma, lifted, i, 0, ea.bet) == Rat(0));
      }
  }
}

TEST_CASE("materialized table equals u + w + l everywhere") {
  auto parity = sc::parity<Rat>();
  auto ext = build_extension(parity, sc::parity_sigma<Rat>(), Construction::profile_bets);
  std::vector<int> edig(3), bdig(3);
  for (std::size_t e = 0; e < ext.game.action_space.size(); ++e) {
    ext.game.action_space.decode(e, edig);
    for (int j = 0; j < 3; ++j) bdig[j] = ext.ext_actions[j][edig[j]].base;
    const std::size_t b = parity.action_space.index_of(bdig);
    for (int i = 0; i < 3; ++i)
      for (int t = 0; t < 2; ++t)
        CHECK(ext.game.utility(i, t, e) ==
              parity.utility(i, t, b) + ext.win_term(i, t, edig) + ext.loss_term(i, edig));
  }
}

TEST_CASE("hitting self-bets are strictly dominated when C > 1") {
  auto maj = sc::majority<Rat>(3);
  auto ext = build_extension(maj, uniform_profile(maj), Construction::action_bets);
  REQUIRE(ext.spec.penalty == Rat(3));
  for (int a = 0; a < 2; ++a) {
    const int self_hit = find_ext(ext, 0, a, action_bet(0, a));
    std::vector<int> edig(3);
    for (std::size_t e1 = 0; e1 < ext.ext_actions[1].size(); ++e1)
      for (std::size_t e2 = 0; e2 < ext.ext_actions[2].size(); ++e2) {
        edig = {self_hit, static_cast<int>(e1), static_cast<int>(e2)};
        const Rat with_bet = ext.game.utility(0, 0, ext.game.action_space.index_of(edig));
        edig[0] = a;  // same base action, no bet
        const Rat plain = ext.game.utility(0, 0, ext.game.action_space.index_of(edig));
        CHECK(with_bet < plain);
      }
  }
}

TEST_CASE("construction preconditions") {
  auto pirates = sc::pirates<Rat>();
  // not a Nash equilibrium: one lone defector invites a second
  const auto not_nash = pure_profile(pirates, std::vector<int>{1, 0, 0});
  CHECK_THROWS_AS(build_extension(pirates, not_nash, Construction::action_bets),
                  NotNashError<Rat>);
  try {
    build_extension(pirates, not_nash, Construction::action_bets);
  } catch (const NotNashError<Rat>& e) {
    CHECK(e.certificate.max_regret == Rat(50));  // join the defector: 150 vs 100
  }

  // the parity prior is pairwise independent but not mutually independent
  auto parity = sc::parity<Rat>();
  CHECK_FALSE(prior_is_independent(parity));
  CHECK_THROWS_AS(
      build_extension(parity, sc::parity_sigma<Rat>(), Construction::independent_action_bets),
      ValidationError);
  // action-bets is the normal-form construction
  CHECK_THROWS_AS(build_extension(parity, sc::parity_sigma<Rat>(), Construction::action_bets),
                  ValidationError);

  // skipping the check lets negative tests build extensions around non-Nash profiles
  BuildOptions<Rat> skip;
  skip.check_nash = false;
  CHECK_NOTHROW(build_extension(pirates, not_nash, Construction::action_bets, skip));

  // penalty overrides must clear the strict bound; pinned constants reject overrides
  BuildOptions<Rat> weak;
  weak.penalty = Rat(300);  // not > max{M*|A|_max, 1} = 300
  CHECK_THROWS_AS(
      build_extension(pirates, sc::pirates_sigma<Rat>(), Construction::action_bets, weak),
      ValidationError);
  weak.penalty = Rat(301);
  CHECK_NOTHROW(
      build_extension(pirates, sc::pirates_sigma<Rat>(), Construction::action_bets, weak));
  BuildOptions<Rat> pinned;
  pinned.penalty = Rat(31);
  CHECK_THROWS_AS(
      build_extension(parity, sc::parity_sigma<Rat>(), Construction::profile_bets, pinned),
      ValidationError);
  pinned.penalty = Rat(32);
  CHECK_NOTHROW(
      build_extension(parity, sc::parity_sigma<Rat>(), Construction::profile_bets, pinned));
}

TEST_CASE("independent coordination game admits the Bayesian action-bet construction") {
  auto game = sc::coordination<Rat>();
  CHECK(prior_is_independent(game));
  auto ext = build_extension(game, sc::coordination_sigma<Rat>(),
                             Construction::independent_action_bets);
  CHECK(ext.ext_actions[0].size() == 14);
  CHECK(ext.spec.penalty == Rat(5));  // M = 2, |A|_max = 2 -> max{4,1}+1
}

TEST_CASE("lift and project round trips") {
  auto maj = sc::majority<Rat>(3);
  const auto sigma = uniform_profile(maj);
  auto ext = build_extension(maj, sigma, Construction::action_bets);
  CHECK(ext.project(ext.lift(sigma)) == sigma);

  // mixture of a plain action and a bet-decorated one projects to the base action
  StrategyProfile<Rat> mix = ext.lift(pure_profile(maj, std::vector<int>{0, 0, 0}));
  const int decorated = find_ext(ext, 0, 0, action_bet(1, 1));
  mix.play[0][0][0] = frac(1, 2);
  mix.play[0][0][decorated] = frac(1, 2);
  const auto projected = ext.project(mix);
  CHECK(projected.play[0][0][0] == Rat(1));
}
