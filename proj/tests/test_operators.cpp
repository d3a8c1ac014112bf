// Copyright 2026 The tugx Authors
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

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace tugx;
using fixture::game_a;
using fixture::game_b;
using fixture::game_c;
using fixture::reference_w;

namespace {

bool same(const PayoffAllocation& a, const PayoffAllocation& b) {
  return max_abs_deviation(a, b) < 1e-9;
}

std::vector<SolutionConcept> benchmarks() {
  return {sol::shapley(), sol::stand_alone(), sol::equal_division(), sol::constant(1.25),
          sol::ess_value()};
}

}  // namespace

TEST_CASE("ess operator") {
  CHECK_PAYOFFS(apply_ess_operator(sol::stand_alone(), game_a()), {4, 2});
  CHECK(same(apply_ess_operator(sol::shapley(), game_b()), shapley(game_b())));
  CHECK_PAYOFFS(apply_ess_operator(sol::constant(0), game_b()), {1, 1, 1});
}

TEST_CASE("ps operator") {
  CHECK_PAYOFFS(apply_ps_operator(sol::stand_alone(), game_a()), {6, 0});
  CHECK_PAYOFFS(apply_ps_operator(sol::equal_division(), game_a()), {3, 3});
  CHECK(same(apply_ps_operator(sol::shapley(), game_a()), shapley(game_a())));
  CHECK_THROWS_AS(apply_ps_operator(sol::stand_alone(), game_b()), DomainViolation);
  CHECK_THROWS_AS(apply_ps_operator(sol::constant(-1), game_a()), DomainViolation);
}

TEST_CASE("weighted operator") {
  const auto half = WeightScheme::convex(0.5);
  CHECK_PAYOFFS(apply_weighted_operator(sol::stand_alone(), half, game_a()), {5, 1});
  CHECK(same(apply_weighted_operator(sol::stand_alone(), WeightScheme::convex(1), game_b()),
             apply_ess_operator(sol::stand_alone(), game_b())));
  CHECK(same(apply_weighted_operator(sol::stand_alone(), WeightScheme::convex(0), game_a()),
             apply_ps_operator(sol::stand_alone(), game_a())));
  CHECK_THROWS_AS(apply_weighted_operator(sol::stand_alone(), half, game_b()), DomainViolation);
  CHECK_THROWS_AS(WeightScheme::convex(1.5), std::invalid_argument);
  CHECK(ExtensionOperator::weighted(half).name() == "weighted:alpha=0.5");
}

TEST_CASE("corrected operators") {
  const Game w = reference_w();
  const auto sa = sol::stand_alone();
  const auto first_only = make_componentwise<Game>("first-only", sa, {{1, {}}});
  const auto p = example_31_operator(w, sa, game_a());
  const auto q = example_31_operator(w, first_only, game_a());
  CHECK(p[0] == doctest::Approx(3));
  CHECK(q[0] == doctest::Approx(4.5));
  // f_1 and the total agree at gameA, the outputs at player 1 do not
  CHECK(p[0] - q[0] == doctest::Approx(-1.5));
  CHECK(example_32_operator(w, sa, game_a())[0] == doctest::Approx(5));

  const Game flat({1, 2}, {0, 2, 2, 5});
  CHECK(same(example_31_operator(flat, sa, game_c()), apply_ess_operator(sa, game_c())));
  CHECK(same(example_32_operator(flat, sa, game_c()), apply_ps_operator(sa, game_c())));
  CHECK_THROWS_AS(example_31_operator(w, sa, game_b()), DomainViolation);
  CHECK_THROWS_AS(ExtensionOperator::example_32(Game({1, 2}, {0, 0, 0, 1})), DomainViolation);
}

TEST_CASE("best partitions") {
  const auto c = max_partition_value(game_c());
  CHECK(c.value == 4);
  CHECK(c.partition == std::vector<Coalition>{Coalition(0b01), Coalition(0b10)});
  const auto b = max_partition_value(game_b());
  CHECK(b.value == 3);
  CHECK(b.partition == std::vector<Coalition>{Coalition(0b111)});
  CHECK(max_partition_value_brute(game_c()).value == 4);
}

TEST_CASE("cohesive operators") {
  CHECK_PAYOFFS(apply_cohesive_ess(sol::stand_alone(), game_c()), {2, 2});
  CHECK_PAYOFFS(apply_cohesive_ess(sol::equal_division(), game_c()), {2, 2});
  CHECK_PAYOFFS(apply_cohesive_ps(sol::stand_alone(), game_c()), {2, 2});
  CHECK_PAYOFFS(apply_cohesive_ps(sol::equal_division(), game_c()), {2, 2});
  // superadditive: cohesive and plain coincide
  const Game sup = unanimity_game({1, 2, 3}, {1, 2}) + additive_game({1, 2, 3}, {1, 1, 1});
  CHECK(same(apply_cohesive_ess(sol::shapley(), sup), apply_ess_operator(sol::shapley(), sup)));
  CHECK(same(apply_cohesive_ps(sol::stand_alone(), sup), apply_ps_operator(sol::stand_alone(), sup)));
}

TEST_CASE("proportional sharing treats a rounding-noise total as zero") {
  // v(N) = 0 but the Shapley payoffs only sum to zero up to rounding.
  const Game v = oracle::quarter_game(5, game_seed(70'000, 5, 5));
  REQUIRE(v.grand_worth() == 0);
  REQUIRE(sol::shapley().evaluate(v).total() != 0);
  CHECK_THROWS_AS(apply_cohesive_ps(sol::shapley(), v), DomainViolation);
  CHECK_THROWS_AS(apply_ps_operator(sol::shapley(), v), DomainViolation);
}

TEST_CASE("wrapped solutions") {
  const auto f = wrap(ExtensionOperator::ess(), sol::shapley());
  CHECK_PAYOFFS(f.evaluate(game_a()), {4, 2});
  CHECK(f.name() == "ess(shapley)");
  const auto g = wrap(ExtensionOperator::ps(), sol::stand_alone());
  CHECK(g.domain() == SolutionDomain::positive_games);
  CHECK_THROWS_AS(g.evaluate(game_b()), DomainViolation);
}

TEST_CASE("property: operators are efficient and idempotent") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Game v = random_game(player_range(n), rng(), GameProfile::positive_singletons);
    for (const auto& f : benchmarks()) {
      const auto e = apply_ess_operator(f, v);
      CHECK(e.total() == doctest::Approx(v.grand_worth()));
      CHECK(same(apply_ess_operator(wrap(ExtensionOperator::ess(), f), v), e));
      if (f.evaluate(v).total() > 0) {
        const auto p = apply_ps_operator(f, v);
        CHECK(p.total() == doctest::Approx(v.grand_worth()));
        CHECK(same(apply_ps_operator(wrap(ExtensionOperator::ps(), f), v), p));
      }
      const auto c = apply_cohesive_ess(f, v);
      CHECK(c.total() == doctest::Approx(max_partition_value(v).value));
    }
    // constant benchmark: equal split of v(N)
    const auto eq = apply_ess_operator(sol::constant(-3), v);
    for (double x : eq.values()) CHECK(x == doctest::Approx(v.grand_worth() / n));
  }
}

TEST_CASE("property: best partition dynamic program matches enumeration") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Game v = random_game(player_range(n), rng());
    const auto dp = max_partition_value(v);
    CHECK(dp.value == oracle::best_partition_value(v));
    CHECK(dp.value == max_partition_value_brute(v).value);
    CHECK(dp.value >= v.grand_worth());
    double sum = 0;
    Coalition cover;
    for (Coalition b : dp.partition) {
      CHECK((cover & b).empty());
      cover = cover | b;
      sum += v(b);
    }
    CHECK(cover == v.grand());
    CHECK(sum == dp.value);
  }
}
