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

#include "tugx/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tugx {

// --- Weight schemes --------------------------------------------------------

WeightScheme WeightScheme::convex(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  return WeightScheme(alpha);
}

std::string WeightScheme::name() const { return "alpha=" + format_real(alpha_); }

std::vector<double> WeightScheme::weights(const PayoffAllocation& benchmark) const {
  const auto n = static_cast<double>(benchmark.size());
  std::vector<double> w(benchmark.size(), alpha_ / n);
  if (alpha_ < 1.0) {
    const double total = benchmark.total();
    if (total == 0.0) {
      throw DomainViolation(
          "proportional weights are undefined for a zero benchmark total");
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] += (1.0 - alpha_) * benchmark[k] / total;
    }
  }
  return w;
}

// --- Closed forms ----------------------------------------------------------

namespace {

PayoffAllocation equal_surplus(PayoffAllocation f, double target) {
  const double share = (target - f.total()) / static_cast<double>(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) f[k] += share;
  return f;
}

PayoffAllocation proportional(PayoffAllocation f, double target) {
  const double total = f.total();
  // A total lost in rounding noise (Shapley of a game with v(N) = 0, say)
  // counts as zero; dividing by it would blow the payoffs up.
  double scale = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) scale += std::abs(f[k]);
  const Tolerance tol;
  if (!(total > tol.abs_eps + tol.rel_eps * scale)) {
    throw DomainViolation(
        "proportional sharing needs a benchmark with a positive total");
  }
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = f[k] / total * target;
  return f;
}

void require_positive_game(const Game& v, const char* what) {
  if (!v.is_positive()) {
    throw DomainViolation(std::string(what) +
                          " needs a game whose singleton worths sum to a "
                          "positive number");
  }
}

PayoffAllocation add_reference_correction(PayoffAllocation x, const Game& w,
                                          const SolutionConcept& f,
                                          const Game& v) {
  if (w.player_list() != v.player_list()) {
    throw DomainViolation(
        "the reference game must have the same players as the game");
  }
  const PayoffAllocation fw = f.evaluate(w);
  const double mean = fw.total() / static_cast<double>(fw.size());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += fw[k] - mean;
  return x;
}

}  // namespace

PayoffAllocation apply_ess_operator(const SolutionConcept& f, const Game& v) {
  return equal_surplus(f.evaluate(v), v.grand_worth());
}

PayoffAllocation apply_ps_operator(const SolutionConcept& f, const Game& v) {
  require_positive_game(v, "the proportional operator");
  return proportional(f.evaluate(v), v.grand_worth());
}

PayoffAllocation apply_weighted_operator(const SolutionConcept& f,
                                         const WeightScheme& w, const Game& v) {
  PayoffAllocation x = f.evaluate(v);
  const std::vector<double> weights = w.weights(x);
  const double surplus = v.grand_worth() - x.total();
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += weights[k] * surplus;
  return x;
}

PayoffAllocation example_31_operator(const Game& w, const SolutionConcept& f,
                                     const Game& v) {
  return add_reference_correction(apply_ess_operator(f, v), w, f, v);
}

PayoffAllocation example_32_operator(const Game& w, const SolutionConcept& f,
                                     const Game& v) {
  require_positive_game(w, "the reference game of the corrected proportional operator");
  return add_reference_correction(apply_ps_operator(f, v), w, f, v);
}

// --- Cohesive efficiency ---------------------------------------------------

OptimalPartitionResult max_partition_value(const Game& v) {
  const std::size_t n = v.size();
  if (n > kMaxPlayers) throw std::invalid_argument("too many players");
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> best(count, 0.0);
  std::vector<Coalition::mask_type> choice(count, 0);
  for (std::size_t m = 1; m < count; ++m) {
    const Coalition s(static_cast<Coalition::mask_type>(m));
    const std::size_t low = s.lowest();
    const Coalition::mask_type rest = s.without(low).mask();
    const Coalition::mask_type low_bit = Coalition::singleton(low).mask();
    double top = -std::numeric_limits<double>::infinity();
    Coalition::mask_type arg = 0;
    // Subsets of `rest` in increasing mask order.
    Coalition::mask_type sub = 0;
    while (true) {
      const Coalition::mask_type t = sub | low_bit;
      const double value = v(Coalition(t)) + best[m & ~t];
      if (value > top) {
        top = value;
        arg = t;
      }
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
    best[m] = top;
    choice[m] = arg;
  }
  OptimalPartitionResult out;
  out.value = best[count - 1];
  for (Coalition::mask_type m = static_cast<Coalition::mask_type>(count - 1);
       m != 0; m &= ~choice[m]) {
    out.partition.push_back(Coalition(choice[m]));
  }
  return out;
}

OptimalPartitionResult max_partition_value_brute(const Game& v) {
  if (v.size() > 10) {
    throw std::invalid_argument("partition enumeration is limited to 10 players");
  }
  OptimalPartitionResult out;
  out.value = -std::numeric_limits<double>::infinity();
  for (const auto& partition : set_partitions(v.grand())) {
    double value = 0.0;
    for (Coalition block : partition) value += v(block);
    if (value > out.value) {
      out.value = value;
      out.partition = partition;
    }
  }
  return out;
}

PayoffAllocation apply_cohesive_ess(const SolutionConcept& f, const Game& v) {
  return equal_surplus(f.evaluate(v), max_partition_value(v).value);
}

PayoffAllocation apply_cohesive_ps(const SolutionConcept& f, const Game& v) {
  require_positive_game(v, "the cohesive proportional operator");
  return proportional(f.evaluate(v), max_partition_value(v).value);
}

// --- ExtensionOperator -----------------------------------------------------

ExtensionOperator ExtensionOperator::ess() { return ExtensionOperator(OperatorKind::ess); }
ExtensionOperator ExtensionOperator::ps() { return ExtensionOperator(OperatorKind::ps); }

ExtensionOperator ExtensionOperator::weighted(WeightScheme scheme) {
  ExtensionOperator op(OperatorKind::weighted);
  op.scheme_ = scheme;
  return op;
}

ExtensionOperator ExtensionOperator::example_31(Game w) {
  ExtensionOperator op(OperatorKind::example_31);
  op.reference_ = std::move(w);
  return op;
}

ExtensionOperator ExtensionOperator::example_32(Game w) {
  require_positive_game(w, "the reference game of the corrected proportional operator");
  ExtensionOperator op(OperatorKind::example_32);
  op.reference_ = std::move(w);
  return op;
}

ExtensionOperator ExtensionOperator::cohesive_ess() {
  return ExtensionOperator(OperatorKind::cohesive_ess);
}
ExtensionOperator ExtensionOperator::cohesive_ps() {
  return ExtensionOperator(OperatorKind::cohesive_ps);
}

namespace {

std::string render_reference(const Game& w) {
  std::string out = "[";
  for (std::size_t m = 1; m < w.worths().size(); ++m) {
    if (m > 1) out += ",";
    out += format_real(w.worths()[m]);
  }
  return out + "]";
}

}  // namespace

std::string ExtensionOperator::name() const {
  switch (kind_) {
    case OperatorKind::ess:
      return "ess";
    case OperatorKind::ps:
      return "ps";
    case OperatorKind::weighted:
      return "weighted:" + scheme_->name();
    case OperatorKind::example_31:
      return "ex31:w=" + render_reference(*reference_);
    case OperatorKind::example_32:
      return "ex32:w=" + render_reference(*reference_);
    case OperatorKind::cohesive_ess:
      return "cohesive-ess";
    case OperatorKind::cohesive_ps:
      return "cohesive-ps";
  }
  return "?";
}

SolutionDomain ExtensionOperator::domain() const {
  switch (kind_) {
    case OperatorKind::ps:
    case OperatorKind::example_32:
    case OperatorKind::cohesive_ps:
      return SolutionDomain::positive_games;
    default:
      return SolutionDomain::all_games;
  }
}

bool ExtensionOperator::cohesive() const {
  return kind_ == OperatorKind::cohesive_ess || kind_ == OperatorKind::cohesive_ps;
}

PayoffAllocation ExtensionOperator::apply(const SolutionConcept& f,
                                          const Game& v) const {
  switch (kind_) {
    case OperatorKind::ess:
      return apply_ess_operator(f, v);
    case OperatorKind::ps:
      return apply_ps_operator(f, v);
    case OperatorKind::weighted:
      return apply_weighted_operator(f, *scheme_, v);
    case OperatorKind::example_31:
      return example_31_operator(*reference_, f, v);
    case OperatorKind::example_32:
      return example_32_operator(*reference_, f, v);
    case OperatorKind::cohesive_ess:
      return apply_cohesive_ess(f, v);
    case OperatorKind::cohesive_ps:
      return apply_cohesive_ps(f, v);
  }
  throw std::logic_error("unknown operator kind");
}

namespace {

class WrappedRule final : public SolutionConcept::Rule {
 public:
  WrappedRule(ExtensionOperator op, SolutionConcept f)
      : op_(std::move(op)), f_(std::move(f)) {}
  SolutionKind kind() const override { return SolutionKind::wrapped; }
  std::string name() const override {
    return op_.name() + "(" + f_.name() + ")";
  }
  SolutionDomain domain() const override {
    return op_.domain() == SolutionDomain::positive_games ? op_.domain()
                                                          : f_.domain();
  }
  PayoffAllocation evaluate(const Game& v) const override {
    return op_.apply(f_, v);
  }

 private:
  ExtensionOperator op_;
  SolutionConcept f_;
};

}  // namespace

SolutionConcept wrap(const ExtensionOperator& op, SolutionConcept f) {
  return SolutionConcept(std::make_shared<WrappedRule>(op, std::move(f)));
}

}  // namespace tugx
