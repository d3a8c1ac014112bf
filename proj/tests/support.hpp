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

#ifndef TUGX_TESTS_SUPPORT_HPP
#define TUGX_TESTS_SUPPORT_HPP

#include <cmath>
#include <vector>

#include <doctest.h>

#include "fixtures.hpp"
#include "tugx/axioms.hpp"

// Payoffs equal to `expected` within 1e-9, player by player.
#define CHECK_PAYOFFS(alloc, ...)                                          \
  do {                                                                     \
    const std::vector<double> expected_ = __VA_ARGS__;                     \
    const auto& got_ = (alloc);                                            \
    REQUIRE(got_.size() == expected_.size());                              \
    for (std::size_t k_ = 0; k_ < expected_.size(); ++k_) {                \
      CHECK(got_[k_] == doctest::Approx(expected_[k_]).epsilon(1e-9));     \
    }                                                                      \
  } while (0)

#endif  // TUGX_TESTS_SUPPORT_HPP
