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

#include "tugx/solutions.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace tugx {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

PayoffAllocation shapley(const Game& v) {
  const std::size_t n = v.size();
  // weight(s) = (s-1)!(n-s)!/n! = 1 / (n * C(n-1, s-1))
  std::vector<double> weight(n + 1, 0.0);
  double binom = 1.0;  // C(n-1, s-1)
  for (std::size_t s = 1; s <= n; ++s) {
    weight[s] = 1.0 / (static_cast<double>(n) * binom);
    binom = binom * static_cast<double>(n - s) / static_cast<double>(s);
  }
  std::vector<double> phi(n, 0.0);
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t m = 1; m < count; ++m) {
    const Coalition s(static_cast<Coalition::mask_type>(m));
    const double w = weight[s.size()];
    const double vs = v(s);
    for (std::size_t k : s.indices()) {
      phi[k] += w * (vs - v(s.without(k)));
    }
  }
  return PayoffAllocation(v.player_list(), std::move(phi));
}

PayoffAllocation shapley_permutation_oracle(const Game& v) {
  const std::size_t n = v.size();
  if (n > 8) {
    throw std::invalid_argument("permutation oracle is limited to 8 players");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> sum(n, 0.0);
  std::size_t orders = 0;
  do {
    Coalition s;
    for (std::size_t k : order) {
      sum[k] += v(s.with(k)) - v(s);
      s = s.with(k);
    }
    ++orders;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& x : sum) x /= static_cast<double>(orders);
  return PayoffAllocation(v.player_list(), std::move(sum));
}

PayoffAllocation stand_alone(const Game& v) {
  std::vector<double> x(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) x[k] = v.singleton_worth(k);
  return PayoffAllocation(v.player_list(), std::move(x));
}

PayoffAllocation equal_division(const Game& v) {
  const double share = v.grand_worth() / static_cast<double>(v.size());
  return PayoffAllocation(v.player_list(), std::vector<double>(v.size(), share));
}

PayoffAllocation ess_value(const Game& v) {
  PayoffAllocation x = stand_alone(v);
  const double share =
      (v.grand_worth() - v.singleton_sum()) / static_cast<double>(v.size());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += share;
  return x;
}

PayoffAllocation ps_value(const Game& v) {
  const double total = v.singleton_sum();
  if (!(total > 0.0)) {
    throw DomainViolation(
        "proportional sharing needs singleton worths with a positive sum");
  }
  PayoffAllocation x = stand_alone(v);
  for (std::size_t k = 0; k < x.size(); ++k) {
    x[k] = x[k] / total * v.grand_worth();
  }
  return x;
}

PayoffAllocation evaluate(const SolutionConcept& f, const Game& v) {
  return f.evaluate(v);
}

double total_payoff(const SolutionConcept& f, const Game& v) {
  return f.evaluate(v).total();
}

namespace sol {
namespace {

using Fn = PayoffAllocation (*)(const Game&);

class FunctionRule final : public SolutionConcept::Rule {
 public:
  FunctionRule(SolutionKind kind, const char* name, Fn fn,
               SolutionDomain domain)
      : kind_(kind), name_(name), fn_(fn), domain_(domain) {}
  SolutionKind kind() const override { return kind_; }
  std::string name() const override { return name_; }
  SolutionDomain domain() const override { return domain_; }
  PayoffAllocation evaluate(const Game& v) const override { return fn_(v); }

 private:
  SolutionKind kind_;
  const char* name_;
  Fn fn_;
  SolutionDomain domain_;
};

SolutionConcept make(SolutionKind kind, const char* name, Fn fn,
                     SolutionDomain domain = SolutionDomain::all_games) {
  return SolutionConcept(std::make_shared<FunctionRule>(kind, name, fn, domain));
}

}  // namespace

SolutionConcept shapley() {
  return make(SolutionKind::shapley, "shapley", &tugx::shapley);
}
SolutionConcept stand_alone() {
  return make(SolutionKind::stand_alone, "standalone", &tugx::stand_alone);
}
SolutionConcept equal_division() {
  return make(SolutionKind::equal_division, "ed", &tugx::equal_division);
}
SolutionConcept ess_value() {
  return make(SolutionKind::ess_value, "ess", &tugx::ess_value);
}
SolutionConcept ps_value() {
  return make(SolutionKind::ps_value, "ps", &tugx::ps_value,
              SolutionDomain::positive_games);
}
SolutionConcept constant(double c) {
  return SolutionConcept(std::make_shared<ConstantRule<Game>>(
      c, "constant:" + format_real(c), SolutionKind::constant));
}

}  // namespace sol

}  // namespace tugx
