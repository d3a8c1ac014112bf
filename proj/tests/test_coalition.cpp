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
using fixture::game_b;
using fixture::partition_12_3;

namespace {

std::vector<std::uint32_t> index_blocks(const PartitionGame& x) {
  std::vector<std::uint32_t> out;
  for (std::size_t b = 0; b < x.partition.blocks().size(); ++b) {
    out.push_back(x.partition.block_mask(b, x.game.player_list()).mask());
  }
  return out;
}

Graph cliques(const Partition& p) {
  std::vector<Link> links;
  for (const Block& b : p.blocks()) {
    for (std::size_t a = 0; a < b.size(); ++a) {
      for (std::size_t c = a + 1; c < b.size(); ++c) links.emplace_back(b[a], b[c]);
    }
  }
  return Graph(p.players(), links);
}

}  // namespace

TEST_CASE("partitions are canonical") {
  const Partition p({{3}, {2, 1}});
  CHECK(p.blocks() == std::vector<Block>{{1, 2}, {3}});
  CHECK(p.block_of(2) == 0);
  CHECK(p.split_off(1).blocks() == std::vector<Block>{{1}, {2}, {3}});
  CHECK(p.without(3).blocks() == std::vector<Block>{{1, 2}});
  CHECK(p.without(1).blocks() == std::vector<Block>{{2}, {3}});
  CHECK(p.join(4, 3).blocks() == std::vector<Block>{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(Partition({{1, 2}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionGame(game_b(), Partition({{1, 2}})), std::invalid_argument);
  CHECK(all_partitions(player_range(4)).size() == 15);
}

TEST_CASE("Aumann-Dreze and its extension on the fixture") {
  const PartitionGame x(game_b(), partition_12_3());
  CHECK_PAYOFFS(aumann_dreze(x), {0.5, 0.5, 0});
  CHECK_PAYOFFS(aumann_dreze(PartitionGame(game_b(), Partition::grand({1, 2, 3}))),
                {7.0 / 6, 7.0 / 6, 2.0 / 3});
  CHECK_PAYOFFS(aumann_dreze(PartitionGame(fixture::game_a(), Partition::singletons({1, 2}))),
                {2, 0});
  CHECK_PAYOFFS(apply_partition_ess_operator(sol::aumann_dreze(), x), {7.0 / 6, 7.0 / 6, 2.0 / 3});
  CHECK_PAYOFFS(sol::ee_ad().evaluate(x), {7.0 / 6, 7.0 / 6, 2.0 / 3});
  CHECK_PAYOFFS(apply_partition_ess_operator(sol::zero_partition(), x), {1, 1, 1});
  CHECK_PAYOFFS(
      apply_partition_ess_operator(sol::zero_partition(),
                                   PartitionGame(game_b(), Partition::singletons({1, 2, 3}))),
      {1, 1, 1});
}

TEST_CASE("null extension and removal") {
  const PartitionGame x(game_b(), partition_12_3());
  CHECK(fresh_player(x) == 4);
  const PartitionGame y = extend_with_null(x, 3, 4);
  CHECK(is_null_player(y.game, 4));
  CHECK(y.partition.blocks() == std::vector<Block>{{1, 2}, {3, 4}});
  CHECK(y.game.worth(y.game.coalition_of(std::vector<PlayerId>{1, 2, 4})) == 1);
  CHECK_THROWS_AS(extend_with_null(x, 3, 2), std::invalid_argument);
  const PartitionGame z = remove_player(x, 3);
  CHECK(z.game.player_list() == std::vector<PlayerId>{1, 2});
  CHECK(z.game.grand_worth() == 1);
  CHECK(z.partition.blocks() == std::vector<Block>{{1, 2}});
}

TEST_CASE("cycle residuals") {
  const PartitionGame grand(game_b(), Partition::grand({1, 2, 3}));
  CHECK(rbcc_cycle_residual(sol::aumann_dreze(), grand, {1, 2, 3}) == doctest::Approx(0).epsilon(1e-12));
  const PartitionGame x(game_b(), partition_12_3());
  CHECK(rbcc_cycle_residual(sol::ee_ad(), x, {1, 2}) == 0);
  CHECK_THROWS_AS(rbcc_cycle_residual(sol::aumann_dreze(), x, {1, 3}), std::invalid_argument);

  // pays player 1 one unit when 3 is present and player 2 is absent
  struct Tilted final : PartitionSolutionConcept::Rule {
    SolutionKind kind() const override { return SolutionKind::componentwise_table; }
    std::string name() const override { return "tilted"; }
    PayoffAllocation evaluate(const PartitionGame& y) const override {
      auto p = PayoffAllocation::zeros(y.game);
      if (y.game.has_player(3) && !y.game.has_player(2) && y.game.has_player(1)) {
        p[y.game.index_of(1)] = 1;
      }
      return p;
    }
  };
  const PartitionSolutionConcept tilted(std::make_shared<Tilted>());
  CHECK(std::abs(rbcc_cycle_residual(tilted, grand, {1, 2, 3})) > 0.5);
  CHECK_THROWS_AS(solve_by_rbcc_induction(tilted, grand), InconsistentSystem);
}

TEST_CASE("rbcc induction on the fixture") {
  const PartitionGame x(game_b(), partition_12_3());
  CHECK_PAYOFFS(solve_by_rbcc_induction(sol::zero_partition(), x), {1, 1, 1});
  CHECK_PAYOFFS(solve_by_rbcc_induction(sol::aumann_dreze(), x), {7.0 / 6, 7.0 / 6, 2.0 / 3});
  const PartitionGame singles(game_b(), Partition::singletons({1, 2, 3}));
  CHECK(max_abs_deviation(solve_by_rbcc_induction(sol::aumann_dreze(), singles),
                          apply_partition_ess_operator(sol::aumann_dreze(), singles)) < 1e-12);
}

TEST_CASE("partition solutions as plain solutions") {
  const auto s = as_solution(sol::aumann_dreze(), partition_12_3());
  CHECK_PAYOFFS(s.evaluate(game_b()), {0.5, 0.5, 0});
  CHECK(s.name() == "ad@P={1,2|3}");
}

TEST_CASE("property: AD matches the oracle, Myerson on cliques, and is component efficient") {
  std::mt19937_64 rng(51);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 5; ++t) {
      const Game v = random_game(player_range(n), rng());
      for (const Partition& p : all_partitions(v.player_list())) {
        const PartitionGame x(v, p);
        const auto ad = aumann_dreze(x);
        CHECK(oracle::max_abs_diff(oracle::aumann_dreze(v, index_blocks(x)), ad.values()) < 1e-9);
        CHECK(max_abs_deviation(ad, myerson(v, cliques(p))) < 1e-9);
        for (auto b : index_blocks(x)) CHECK(ad.sum_over(Coalition(b)) == doctest::Approx(v(Coalition(b))));
      }
    }
  }
}

TEST_CASE("property: rbcc induction recovers the partition ess operator") {
  std::mt19937_64 rng(52);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 4; ++t) {
      const Game v = random_game(player_range(n), rng());
      for (const Partition& p : all_partitions(v.player_list())) {
        const PartitionGame x(v, p);
        for (const auto& f : {sol::aumann_dreze(), sol::zero_partition()}) {
          CHECK(max_abs_deviation(solve_by_rbcc_induction(f, x),
                                  apply_partition_ess_operator(f, x)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("property: residuals vanish for blocks of two and for AD") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 4;
    const Game v = random_game(player_range(n), rng());
    const PartitionGame x(v, Partition::grand(v.player_list()));
    std::vector<PlayerId> order = v.player_list();
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(rbcc_cycle_residual(sol::aumann_dreze(), x, order) == doctest::Approx(0).epsilon(1e-9));
    if (n == 2) CHECK(rbcc_cycle_residual(sol::ee_ad(), x, order) == 0);
  }
}
