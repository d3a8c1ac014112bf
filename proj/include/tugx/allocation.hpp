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

#ifndef TUGX_ALLOCATION_HPP
#define TUGX_ALLOCATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "tugx/game.hpp"

namespace tugx {

/// One payoff per player, aligned with the game's ordered player list.
class PayoffAllocation {
 public:
  PayoffAllocation() = default;
  PayoffAllocation(std::vector<PlayerId> players, std::vector<double> payoffs);

  static PayoffAllocation zeros(const Game& v);

  std::size_t size() const { return payoffs_.size(); }
  std::span<const PlayerId> players() const { return players_; }
  const std::vector<PlayerId>& player_list() const { return players_; }
  std::span<const double> values() const { return payoffs_; }

  double operator[](std::size_t index) const { return payoffs_[index]; }
  double& operator[](std::size_t index) { return payoffs_[index]; }
  /// Payoff of player `id`; throws std::invalid_argument if absent.
  double at(PlayerId id) const;

  double total() const;
  /// Sum over the members of a coalition of the owning game.
  double sum_over(Coalition s) const;

  friend bool operator==(const PayoffAllocation&,
                         const PayoffAllocation&) = default;

 private:
  std::vector<PlayerId> players_;
  std::vector<double> payoffs_;
};

/// Largest absolute componentwise difference; allocations must share players.
double max_abs_deviation(const PayoffAllocation& a, const PayoffAllocation& b);

bool approx_equal(const PayoffAllocation& a, const PayoffAllocation& b,
                  const Tolerance& tol = {});

}  // namespace tugx

#endif  // TUGX_ALLOCATION_HPP
