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

#ifndef TUGX_COALITION_HPP
#define TUGX_COALITION_HPP

#include <cstddef>
#include <vector>

#include "tugx/solutions.hpp"

namespace tugx {

using Block = std::vector<PlayerId>;

/// A partition of a player set into nonempty blocks, kept canonical: each
/// block sorted, blocks ordered by their smallest member.
class Partition {
 public:
  explicit Partition(std::vector<Block> blocks);

  static Partition grand(const std::vector<PlayerId>& players);
  static Partition singletons(const std::vector<PlayerId>& players);
  /// Blocks given as coalitions over an ordered player list.
  static Partition from_coalitions(const std::vector<PlayerId>& players,
                                   const std::vector<Coalition>& blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  /// All players, sorted.
  std::vector<PlayerId> players() const;

  /// Index of the block holding `id`; throws std::invalid_argument if absent.
  std::size_t block_of(PlayerId id) const;
  const Block& block_containing(PlayerId id) const {
    return blocks_[block_of(id)];
  }

  /// Same players with `id` split off into its own block.
  Partition split_off(PlayerId id) const;
  /// Partition of the remaining players once `id` leaves.
  Partition without(PlayerId id) const;
  /// Adds a new player to the block containing `member`.
  Partition join(PlayerId fresh, PlayerId member) const;

  /// Block `k` as a coalition over `players`.
  Coalition block_mask(std::size_t k, const std::vector<PlayerId>& players) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Block> blocks_;
};

/// A game with a coalition structure (N, v, P).
struct PartitionGame {
  PartitionGame(Game v, Partition p);

  Game game;
  Partition partition;

  friend bool operator==(const PartitionGame&, const PartitionGame&) = default;
};

inline const Game& underlying_game(const PartitionGame& x) { return x.game; }

/// (N \ {i}, v restricted to N \ {i}, P with i removed from its block).
PartitionGame remove_player(const PartitionGame& x, PlayerId i);

/// Shapley value of each block's subgame.
PayoffAllocation aumann_dreze(const PartitionGame& x);

using PartitionSolutionConcept = BasicSolution<PartitionGame>;

namespace sol {

PartitionSolutionConcept aumann_dreze();
/// Aumann-Dreze value plus an equal share of the surplus.
PartitionSolutionConcept ee_ad();
PartitionSolutionConcept zero_partition();
PartitionSolutionConcept partition_ess(PartitionSolutionConcept f);

}  // namespace sol

PayoffAllocation apply_partition_ess_operator(const PartitionSolutionConcept& f,
                                              const PartitionGame& x);

/// (N u {fresh}, w, P') with w(S) = v(S \ {fresh}) and fresh joined to the
/// block containing `member`.
PartitionGame extend_with_null(const PartitionGame& x, PlayerId member,
                               PlayerId fresh);

/// max(N) + 1.
PlayerId fresh_player(const PartitionGame& x);

/// sum_l F_{i_l}(N \ {i_{l+1}}) - sum_l F_{i_l}(N \ {i_{l-1}}) for the cyclic
/// enumeration `order` of a block of P. Zero iff the cycle is balanced.
double rbcc_cycle_residual(const PartitionSolutionConcept& f,
                           const PartitionGame& x,
                           const std::vector<PlayerId>& order);

/// Rebuilds the allocation satisfying efficiency, balanced cycle
/// contributions, equal gain relative to null players and F-fair surplus
/// division, block by block, from consecutive differences computed on
/// null-extended games. Throws InconsistentSystem if the differences do
/// not close around the block.
PayoffAllocation solve_by_rbcc_induction(const PartitionSolutionConcept& f,
                                         const PartitionGame& x,
                                         const Tolerance& tol = {});

/// The plain solution v -> F(v, P) for a fixed partition of v's players.
SolutionConcept as_solution(PartitionSolutionConcept f, Partition p);

/// Every partition of the given players (Bell(n) of them).
std::vector<Partition> all_partitions(const std::vector<PlayerId>& players);

}  // namespace tugx

#endif  // TUGX_COALITION_HPP
