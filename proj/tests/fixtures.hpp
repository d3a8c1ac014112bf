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

#ifndef TUGX_TESTS_FIXTURES_HPP
#define TUGX_TESTS_FIXTURES_HPP

#include "tugx/axioms.hpp"

namespace fixture {

using namespace tugx;

// v({1})=2, v({2})=0, v({1,2})=6.
inline Game game_a() { return Game({1, 2}, {0, 2, 0, 6}); }

// Singletons 0, v({1,2})=1, other pairs 0, v(N)=3.
inline Game game_b() {
  return Game::from_entries({1, 2, 3}, {{{1, 2}, 1.0}, {{1, 2, 3}, 3.0}});
}
inline Graph graph_12() { return Graph({1, 2, 3}, {{1, 2}}); }
inline Partition partition_12_3() { return Partition({{1, 2}, {3}}); }

// v({1})=v({2})=2, v({1,2})=3.
inline Game game_c() { return Game({1, 2}, {0, 2, 2, 3}); }

// Reference game of the corrected operators: w({1})=1, w({2})=3.
inline Game reference_w() { return Game({1, 2}, {0, 1, 3, 0}); }

}  // namespace fixture

#endif  // TUGX_TESTS_FIXTURES_HPP
