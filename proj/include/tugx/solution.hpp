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

#ifndef TUGX_SOLUTION_HPP
#define TUGX_SOLUTION_HPP

#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tugx/allocation.hpp"
#include "tugx/errors.hpp"
#include "tugx/game.hpp"

namespace tugx {

enum class SolutionKind {
  shapley,
  stand_alone,
  equal_division,
  ess_value,
  ps_value,
  constant,
  componentwise_table,
  wrapped,
  graph_based,
  partition_based,
  // communication-game solutions
  myerson,
  eemy,
  zero,
  ed_graph,
  graph_ess,
  // coalition-structure solutions
  aumann_dreze,
  ee_ad,
  partition_ess,
};

/// all_games: F; positive_games: F_+ (evaluable only on games whose
/// singleton worths sum to a positive number).
enum class SolutionDomain { all_games, positive_games };

std::string format_real(double x);

/// A named, evaluable rule mapping instances (plain games, communication
/// games or coalition-structure games) to payoff allocations. Values are
/// immutable handles; copies share the underlying rule.
///
/// Two solutions with the same name evaluate identically.
template <class Instance>
class BasicSolution {
 public:
  class Rule {
   public:
    virtual ~Rule() = default;
    virtual SolutionKind kind() const = 0;
    virtual std::string name() const = 0;
    virtual SolutionDomain domain() const { return SolutionDomain::all_games; }
    virtual PayoffAllocation evaluate(const Instance& x) const = 0;
  };

  explicit BasicSolution(std::shared_ptr<const Rule> rule)
      : rule_(std::move(rule)) {
    if (!rule_) throw std::invalid_argument("null solution rule");
    name_ = rule_->name();
  }

  SolutionKind kind() const { return rule_->kind(); }
  const std::string& name() const { return name_; }
  SolutionDomain domain() const { return rule_->domain(); }

  PayoffAllocation evaluate(const Instance& x) const {
    if (domain() == SolutionDomain::positive_games &&
        !underlying_game(x).is_positive()) {
      throw DomainViolation(name_ +
                            " needs a game whose singleton worths sum to a "
                            "positive number");
    }
    PayoffAllocation out = rule_->evaluate(x);
    if (out.player_list() != underlying_game(x).player_list()) {
      throw std::logic_error(name_ + " returned payoffs for the wrong players");
    }
    return out;
  }
  PayoffAllocation operator()(const Instance& x) const { return evaluate(x); }

  /// Sum of payoffs at x.
  double total(const Instance& x) const { return evaluate(x).total(); }

  friend bool operator==(const BasicSolution& a, const BasicSolution& b) {
    return a.name_ == b.name_;
  }

 private:
  std::shared_ptr<const Rule> rule_;
  std::string name_;
};

// --- Rules shared by every instance type -----------------------------------

template <class Instance>
class ConstantRule final : public BasicSolution<Instance>::Rule {
 public:
  ConstantRule(double c, std::string name, SolutionKind kind)
      : c_(c), name_(std::move(name)), kind_(kind) {}
  SolutionKind kind() const override { return kind_; }
  std::string name() const override { return name_; }
  PayoffAllocation evaluate(const Instance& x) const override {
    const Game& v = underlying_game(x);
    return PayoffAllocation(v.player_list(), std::vector<double>(v.size(), c_));
  }

 private:
  double c_;
  std::string name_;
  SolutionKind kind_;
};

/// One summand of a replaced component: coefficient * source(x)[index].
template <class Instance>
struct ComponentTerm {
  BasicSolution<Instance> source;
  std::size_t source_index;
  double coefficient = 1.0;
};

/// Replaces the payoff at `player_index` with the sum of `terms`
/// (an empty list yields 0).
template <class Instance>
struct ComponentOverride {
  std::size_t player_index;
  std::vector<ComponentTerm<Instance>> terms;
};

/// Explicit payoffs for one instance.
template <class Instance>
struct TableEntry {
  Instance instance;
  std::vector<double> payoffs;
};

/// Componentwise table: explicit per-instance rows first, then the base
/// solution with selected components rewritten from other solutions.
template <class Instance>
class ComponentwiseRule final : public BasicSolution<Instance>::Rule {
 public:
  ComponentwiseRule(std::string label, BasicSolution<Instance> base,
                    std::vector<ComponentOverride<Instance>> overrides,
                    std::vector<TableEntry<Instance>> table)
      : label_(std::move(label)),
        base_(std::move(base)),
        overrides_(std::move(overrides)),
        table_(std::move(table)) {}

  SolutionKind kind() const override { return SolutionKind::componentwise_table; }
  std::string name() const override { return "table:" + label_; }
  SolutionDomain domain() const override { return base_.domain(); }

  PayoffAllocation evaluate(const Instance& x) const override {
    const Game& v = underlying_game(x);
    for (const auto& row : table_) {
      if (row.instance == x) return PayoffAllocation(v.player_list(), row.payoffs);
    }
    PayoffAllocation out = base_.evaluate(x);
    for (const auto& ov : overrides_) {
      if (ov.player_index >= v.size()) {
        throw std::invalid_argument(name() + " has no component " +
                                    std::to_string(ov.player_index) +
                                    " for this game");
      }
      double value = 0.0;
      for (const auto& term : ov.terms) {
        value += term.coefficient * term.source.evaluate(x)[term.source_index];
      }
      out[ov.player_index] = value;
    }
    return out;
  }

 private:
  std::string label_;
  BasicSolution<Instance> base_;
  std::vector<ComponentOverride<Instance>> overrides_;
  std::vector<TableEntry<Instance>> table_;
};

template <class Instance>
BasicSolution<Instance> make_componentwise(
    std::string label, BasicSolution<Instance> base,
    std::vector<ComponentOverride<Instance>> overrides,
    std::vector<TableEntry<Instance>> table = {}) {
  return BasicSolution<Instance>(std::make_shared<ComponentwiseRule<Instance>>(
      std::move(label), std::move(base), std::move(overrides), std::move(table)));
}

}  // namespace tugx

#endif  // TUGX_SOLUTION_HPP
