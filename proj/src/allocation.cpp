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

#include "tugx/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tugx {

PayoffAllocation::PayoffAllocation(std::vector<PlayerId> players,
                                   std::vector<double> payoffs)
    : players_(std::move(players)), payoffs_(std::move(payoffs)) {
  if (players_.size() != payoffs_.size()) {
    throw std::invalid_argument("one payoff per player required");
  }
  for (double x : payoffs_) {
    if (!std::isfinite(x)) throw std::domain_error("payoff is not finite");
  }
}

PayoffAllocation PayoffAllocation::zeros(const Game& v) {
  return PayoffAllocation(v.player_list(), std::vector<double>(v.size(), 0.0));
}

double PayoffAllocation::at(PlayerId id) const {
  const auto it = std::lower_bound(players_.begin(), players_.end(), id);
  if (it == players_.end() || *it != id) {
    throw std::invalid_argument("player " + std::to_string(id) +
                                " has no payoff");
  }
  return payoffs_[static_cast<std::size_t>(it - players_.begin())];
}

double PayoffAllocation::total() const {
  double sum = 0.0;
  for (double x : payoffs_) sum += x;
  return sum;
}

double PayoffAllocation::sum_over(Coalition s) const {
  double sum = 0.0;
  for (std::size_t k : s.indices()) sum += payoffs_.at(k);
  return sum;
}

double max_abs_deviation(const PayoffAllocation& a, const PayoffAllocation& b) {
  if (a.player_list() != b.player_list()) {
    throw std::invalid_argument("allocations are over different players");
  }
  double dev = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    dev = std::max(dev, std::abs(a[k] - b[k]));
  }
  return dev;
}

bool approx_equal(const PayoffAllocation& a, const PayoffAllocation& b,
                  const Tolerance& tol) {
  if (a.player_list() != b.player_list()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!tol.equal(a[k], b[k])) return false;
  }
  return true;
}

}  // namespace tugx
