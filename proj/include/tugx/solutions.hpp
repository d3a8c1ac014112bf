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

#ifndef TUGX_SOLUTIONS_HPP
#define TUGX_SOLUTIONS_HPP

#include "tugx/allocation.hpp"
#include "tugx/game.hpp"
#include "tugx/solution.hpp"

namespace tugx {

using SolutionConcept = BasicSolution<Game>;

/// Shapley value by the subset-weight formula, O(n 2^n).
PayoffAllocation shapley(const Game& v);

/// Average marginal vector over all n! player orders. Reference oracle for
/// shapley(); rejects n > 8.
PayoffAllocation shapley_permutation_oracle(const Game& v);

/// f_i(v) = v({i}).
PayoffAllocation stand_alone(const Game& v);

/// f_i(v) = v(N)/n.
PayoffAllocation equal_division(const Game& v);

/// Stand-alone worth plus an equal share of v(N) - sum_k v({k}).
PayoffAllocation ess_value(const Game& v);

/// v(N) split in proportion to singleton worths. Throws DomainViolation
/// unless the singleton worths sum to a positive number.
PayoffAllocation ps_value(const Game& v);

PayoffAllocation evaluate(const SolutionConcept& f, const Game& v);
double total_payoff(const SolutionConcept& f, const Game& v);

namespace sol {

SolutionConcept shapley();
SolutionConcept stand_alone();
SolutionConcept equal_division();
SolutionConcept ess_value();
SolutionConcept ps_value();
SolutionConcept constant(double c);

}  // namespace sol

}  // namespace tugx

#endif  // TUGX_SOLUTIONS_HPP
