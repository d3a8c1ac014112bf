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

#ifndef TUGX_OPERATORS_HPP
#define TUGX_OPERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tugx/solutions.hpp"

namespace tugx {

/// Weights for redistributing a surplus given the benchmark payoffs:
/// w_i = alpha/n + (1-alpha) f_i / sum_k f_k. Equal benchmark payoffs get
/// equal weights and the weights sum to one.
class WeightScheme {
 public:
  /// Rejects alpha outside [0, 1].
  static WeightScheme convex(double alpha);

  double alpha() const { return alpha_; }
  std::string name() const;

  /// Throws DomainViolation when alpha < 1 and the benchmark total is zero.
  std::vector<double> weights(const PayoffAllocation& benchmark) const;

 private:
  explicit WeightScheme(double alpha) : alpha_(alpha) {}
  double alpha_;
};

enum class OperatorKind {
  ess,
  ps,
  weighted,
  example_31,
  example_32,
  cohesive_ess,
  cohesive_ps,
};

/// A map from solutions to solutions. Every kind produces efficient output
/// except the cohesive kinds, whose output is cohesively efficient.
class ExtensionOperator {
 public:
  static ExtensionOperator ess();
  static ExtensionOperator ps();
  static ExtensionOperator weighted(WeightScheme scheme);
  /// ESS plus the fixed correction f_i(w) - sum_k f_k(w)/n.
  static ExtensionOperator example_31(Game w);
  /// PS plus the fixed correction f_i(w) - sum_k f_k(w)/n.
  static ExtensionOperator example_32(Game w);
  static ExtensionOperator cohesive_ess();
  static ExtensionOperator cohesive_ps();

  OperatorKind kind() const { return kind_; }
  std::string name() const;
  /// Benchmarks and games must lie in the positive domain for ps-type kinds.
  SolutionDomain domain() const;
  /// True when the output targets cohesive efficiency instead of efficiency.
  bool cohesive() const;

  PayoffAllocation apply(const SolutionConcept& f, const Game& v) const;

  const std::optional<Game>& reference_game() const { return reference_; }
  const std::optional<WeightScheme>& scheme() const { return scheme_; }

 private:
  explicit ExtensionOperator(OperatorKind kind) : kind_(kind) {}

  OperatorKind kind_;
  std::optional<Game> reference_;
  std::optional<WeightScheme> scheme_;
};

PayoffAllocation apply_ess_operator(const SolutionConcept& f, const Game& v);
PayoffAllocation apply_ps_operator(const SolutionConcept& f, const Game& v);
PayoffAllocation apply_weighted_operator(const SolutionConcept& f,
                                         const WeightScheme& w, const Game& v);
PayoffAllocation example_31_operator(const Game& w, const SolutionConcept& f,
                                     const Game& v);
PayoffAllocation example_32_operator(const Game& w, const SolutionConcept& f,
                                     const Game& v);

struct OptimalPartitionResult {
  double value = 0.0;
  std::vector<Coalition> partition;
};

/// max over partitions P of N of sum_{T in P} v(T), by dynamic programming
/// over subsets. Among optimal partitions, returns the one found scanning
/// candidate blocks in increasing mask order.
OptimalPartitionResult max_partition_value(const Game& v);

/// Same optimum by enumerating all Bell(n) set partitions; n <= 10.
OptimalPartitionResult max_partition_value_brute(const Game& v);

PayoffAllocation apply_cohesive_ess(const SolutionConcept& f, const Game& v);
PayoffAllocation apply_cohesive_ps(const SolutionConcept& f, const Game& v);

/// The solution v -> op.apply(f, v).
SolutionConcept wrap(const ExtensionOperator& op, SolutionConcept f);

}  // namespace tugx

#endif  // TUGX_OPERATORS_HPP
