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

#include "betgames/dominance.hpp"
#include "betgames/random.hpp"
#include "betgames/scenarios.hpp"

using namespace betgames;
namespace sc = betgames::scenarios;
using Rat = Rational;

namespace {

Rat frac(long num, long den) { return Rat(num, den); }

// Exhaustive reference: checks every subset of size >= 2 directly.
bool quasi_dominates_oracle(const std::vector<Rat>& u_sigma, const std::vector<Rat>& u_tau) {
  const int n = static_cast<int>(u_sigma.size());
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    if (__builtin_popcountl(mask) < 2) continue;
    Rat sum(0);
    for (int i = 0; i < n; ++i)
      if (mask & (1ul << i)) sum += u_sigma[i] - u_tau[i];
    if (sum < Rat(0)) return false;
  }
  return true;
}

bool pareto_dominates_oracle(const std::vector<Rat>& u_sigma, const std::vector<Rat>& u_tau) {
  for (std::size_t i = 0; i < u_sigma.size(); ++i)
    if (u_sigma[i] < u_tau[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("dominance verdicts on the worked examples") {
  const std::vector<Rat> ones{1, 1, 1};
  const auto reflexive = compare<Rat>(ones, ones);
  CHECK(reflexive.relation == Dominance::pareto);
  CHECK_FALSE(reflexive.strict);

  // one player worse, but every pair sum still ahead
  const std::vector<Rat> a{3, 0}, b{1, 1};
  const auto verdict = compare<Rat>(a, b);
  CHECK(verdict.relation == Dominance::quasi_pareto);
  CHECK(verdict.worse_player == 1);

  // the k-smallest shortcut must agree with brute force here: the pair
  // {1,2} sums to exactly zero
  const std::vector<Rat> c{0, 2, 2}, d{1, 1, 1};
  CHECK(compare<Rat>(c, d).relation == Dominance::quasi_pareto);
  CHECK(quasi_dominates_oracle(c, d));

  const std::vector<Rat> e{0, 0, 3}, f{1, 1, 0};
  const auto neither = compare<Rat>(e, f);
  CHECK(neither.relation == Dominance::neither);
  CHECK(neither.witness_subset == std::vector<int>{0, 1});
  CHECK_FALSE(quasi_dominates_oracle(e, f));

  CHECK_THROWS_AS(compare<Rat>(std::vector<Rat>{1}, std::vector<Rat>{0}), ValidationError);
}

TEST_CASE("quasi-pareto shortcut agrees with the exhaustive oracle") {
  Rng rng(2026);
  std::uniform_int_distribution<int> len(2, 6);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int round = 0; round < 2000; ++round) {
    const int n = len(rng);
    std::vector<Rat> u_sigma, u_tau;
    for (int i = 0; i < n; ++i) {
      u_sigma.push_back(frac(val(rng), 2));
      u_tau.push_back(frac(val(rng), 2));
    }
    const auto verdict = compare<Rat>(u_sigma, u_tau);
    const bool quasi = quasi_dominates_oracle(u_sigma, u_tau);
    const bool pareto = pareto_dominates_oracle(u_sigma, u_tau);
    CHECK((verdict.relation != Dominance::neither) == quasi);
    CHECK((verdict.relation == Dominance::pareto) == pareto);
    if (pareto) CHECK(quasi);  // pointwise dominance implies every subset sum
  }
}

TEST_CASE("manhattan distance") {
  auto parity = sc::parity<Rat>();
  const auto sigma = sc::parity_sigma<Rat>();
  const auto tau = sc::parity_tau<Rat>();
  for (int i = 0; i < 3; ++i)
    for (int t = 0; t < 2; ++t) {
      CHECK(manhattan_delta(parity, sigma, sigma, i, t) == Rat(0));
      CHECK(manhattan_delta(parity, sigma, tau, i, t) == Rat(1));
      CHECK(manhattan_delta(parity, sigma, tau, i, t) ==
            manhattan_delta(parity, tau, sigma, i, t));
    }

  // disjoint-support pure profiles sit at the total-variation extreme
  auto maj = sc::majority<Rat>(3);
  const auto zeros = pure_profile(maj, std::vector<int>{0, 0, 0});
  const auto ones = pure_profile(maj, std::vector<int>{1, 1, 1});
  CHECK(manhattan_delta(maj, zeros, ones, 0, 0) == Rat(2));

  Rng rng(77);
  for (int round = 0; round < 20; ++round) {
    const auto p = random_profile(parity, rng);
    const auto q = random_profile(parity, rng);
    const Rat d = manhattan_delta(parity, p, q, 1, 0);
    CHECK(d >= Rat(0));
    CHECK(d <= Rat(2));
  }
}

TEST_CASE("support splits") {
  auto maj = sc::majority<Rat>(3);
  const auto sigma = uniform_profile(maj);
  CHECK(support_split(maj, sigma, sigma).higher[0].empty());
  CHECK(support_split(maj, sigma, sigma).lower[0].empty());

  auto tau = sigma;
  tau.play[0][0] = {Rat(1), Rat(0)};
  const auto split = support_split(maj, sigma, tau);
  CHECK(split.higher[0] == std::vector<int>{0});
  CHECK(split.lower[0] == std::vector<int>{1});
  CHECK(split.higher[1].empty());

  auto pirates = sc::pirates<Rat>();
  auto defect = sc::pirates_sigma<Rat>();
  defect.play[0][0] = {Rat(0), Rat(1)};
  const auto psplit = support_split(pirates, sc::pirates_sigma<Rat>(), defect);
  CHECK(psplit.higher[0] == std::vector<int>{1});
  CHECK(psplit.lower[0] == std::vector<int>{0});

  // profile-level split for the parity deviation: overplayed others-profiles
  // exist for every (player, type)
  auto parity = sc::parity<Rat>();
  const auto fine = support_split(parity, sc::parity_sigma<Rat>(), sc::parity_tau<Rat>(), true);
  for (int i = 0; i < 3; ++i)
    for (int t = 0; t < 2; ++t) {
      CHECK(fine.profile_higher[i][t].size() == 2);
      CHECK(fine.profile_lower[i][t].size() == 2);
    }
}

TEST_CASE("welfare chain on the parity extension: worked deviation") {
  auto parity = sc::parity<Rat>();
  const auto sigma = sc::parity_sigma<Rat>();
  auto ext = build_extension(parity, sigma, Construction::profile_bets);
  REQUIRE(ext.spec.penalty == Rat(32));

  const std::vector<int> everyone{0, 1, 2};
  const auto report = welfare_chain_check(ext, everyone, ext.lift(sc::parity_tau<Rat>()));

  for (const auto& row : report.members) {
    CHECK(row.base_utility == Rat(1));
    CHECK(row.bet_gain == frac(1, 4));
    CHECK(row.bet_loss == Rat(-32));          // two bettors hitting half the time
    CHECK(row.total == frac(-123, 4));        // 1 + 1/4 - 32
    CHECK(row.sigma_utility == frac(1, 2));
  }
  CHECK(report.aggregate_total == frac(-369, 4));
  CHECK(report.aggregate_sigma == frac(3, 2));
  CHECK(report.all_nonnegative(Rat(0)));
  for (const auto& link : report.links)
    if (link.name.starts_with("decomposition")) CHECK(link.slack == Rat(0));
}

TEST_CASE("welfare chain is tight on sigma itself") {
  auto parity = sc::parity<Rat>();
  const auto sigma = sc::parity_sigma<Rat>();
  auto ext = build_extension(parity, sigma, Construction::profile_bets);
  const std::vector<int> everyone{0, 1, 2};
  const auto report = welfare_chain_check(ext, everyone, ext.lift(sigma));
  for (const auto& row : report.members) {
    CHECK(row.bet_gain == Rat(0));
    CHECK(row.bet_loss == Rat(0));
    CHECK(row.total == row.sigma_utility);
  }
  for (const auto& link : report.links) CHECK(link.slack == Rat(0));
}

TEST_CASE("welfare chain holds on randomized deviations") {
  auto parity = sc::parity<Rat>();
  const auto sigma = sc::parity_sigma<Rat>();
  auto ext = build_extension(parity, sigma, Construction::profile_bets);
  Rng rng(555);
  const std::vector<int> everyone{0, 1, 2};
  const std::vector<int> pair{0, 2};
  for (int round = 0; round < 30; ++round) {
    auto tau = ext.lift(random_profile(parity, rng, 8));
    const auto report = welfare_chain_check(ext, round % 2 ? everyone : pair, tau);
    CHECK(report.all_nonnegative(Rat(0)));
    CHECK(report.aggregate_total <= report.aggregate_sigma);
  }
}

TEST_CASE("welfare chain rejects other constructions") {
  auto maj = sc::majority<Rat>(3);
  auto ext = build_extension(maj, uniform_profile(maj), Construction::action_bets);
  const std::vector<int> pair{0, 1};
  CHECK_THROWS_AS(welfare_chain_check(ext, pair, ext.lift(uniform_profile(maj))),
                  ValidationError);
}

TEST_CASE("set bets played rationally contain X^> and avoid X^<") {
  auto game = sc::truncated_zero<Rat>(3);
  const auto sigma = sc::truncated_zero_sigma(game);
  auto ext = build_extension(game, sigma, Construction::set_bets);

  // both players spread over {1..3} and bet on the other's full overplayed set
  const auto tau = sc::truncated_zero_tau(game);
  auto profile = ext.lift(tau);
  for (int i = 0; i < 2; ++i) {
    const std::vector<int> overplayed{1, 2, 3};
    int eact = -1;
    for (std::size_t e = 0; e < ext.ext_actions[i].size(); ++e) {
      const auto& ea = ext.ext_actions[i][e];
      if (ea.base == 1 && ea.bet.kind == BetKind::set && ea.bet.action_set == overplayed) {
        eact = static_cast<int>(e);
        break;
      }
    }
    REQUIRE(eact >= 0);
    profile.play[i][0].assign(ext.ext_actions[i].size(), Rat(0));
    profile.play[i][0][eact] = Rat(1);
  }
  CHECK(set_bets_respect_support_split(ext, profile).compliant);

  // a bet that misses part of X^> violates the shape (the target keeps the
  // full uniform deviation here, so X^> stays {1,2,3})
  auto bad = ext.lift(tau);
  for (std::size_t e = 0; e < ext.ext_actions[0].size(); ++e) {
    const auto& ea = ext.ext_actions[0][e];
    if (ea.base == 1 && ea.bet.kind == BetKind::set &&
        ea.bet.action_set == std::vector<int>{1, 2}) {
      bad.play[0][0].assign(ext.ext_actions[0].size(), Rat(0));
      bad.play[0][0][e] = Rat(1);
      break;
    }
  }
  CHECK_FALSE(set_bets_respect_support_split(ext, bad).compliant);

  // a bet covering X^> but touching the underplayed zero violates it too:
  // shrink the deviation to {1,2} so {0,1,2} stays a proper subset
  auto narrow = ext.lift(sigma);
  narrow.play[1][0].assign(ext.ext_actions[1].size(), Rat(0));
  narrow.play[1][0][1] = frac(1, 2);
  narrow.play[1][0][2] = frac(1, 2);
  for (std::size_t e = 0; e < ext.ext_actions[0].size(); ++e) {
    const auto& ea = ext.ext_actions[0][e];
    if (ea.base == 0 && ea.bet.kind == BetKind::set && ea.bet.target == 1 &&
        ea.bet.action_set == std::vector<int>{0, 1, 2}) {
      narrow.play[0][0].assign(ext.ext_actions[0].size(), Rat(0));
      narrow.play[0][0][e] = Rat(1);
      break;
    }
  }
  CHECK_FALSE(set_bets_respect_support_split(ext, narrow).compliant);
}

TEST_CASE("float-mode dominance uses the tolerance") {
  const std::vector<double> a{1.0, 1.0 - 1e-12}, b{1.0, 1.0};
  CHECK(compare<double>(a, b).relation == Dominance::pareto);
}
