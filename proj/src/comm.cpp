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

#include "tugx/comm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace tugx {

namespace {

std::size_t index_in(const std::vector<PlayerId>& players, PlayerId id) {
  auto it = std::lower_bound(players.begin(), players.end(), id);
  if (it == players.end() || *it != id) {
    throw std::invalid_argument("player " + std::to_string(id) +
                                " is not in the graph");
  }
  return static_cast<std::size_t>(it - players.begin());
}

}  // namespace

// --- Graph -----------------------------------------------------------------

Graph::Graph(std::vector<PlayerId> players, std::vector<Link> links)
    : players_(std::move(players)) {
  if (players_.empty()) throw std::invalid_argument("a graph needs players");
  if (players_.size() > kMaxPlayers) throw std::invalid_argument("too many players");
  for (std::size_t k = 1; k < players_.size(); ++k) {
    if (players_[k - 1] >= players_[k]) {
      throw std::invalid_argument("graph players must be strictly increasing");
    }
  }
  for (auto [a, b] : links) {
    if (a == b) throw std::invalid_argument("self-loop on player " + std::to_string(a));
    index_in(players_, a);
    index_in(players_, b);
    links_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(links_.begin(), links_.end());
  if (std::adjacent_find(links_.begin(), links_.end()) != links_.end()) {
    throw std::invalid_argument("duplicate link");
  }
}

Graph Graph::empty(std::vector<PlayerId> players) {
  return Graph(std::move(players), {});
}

Graph Graph::complete(std::vector<PlayerId> players) {
  std::vector<Link> links;
  for (std::size_t a = 0; a < players.size(); ++a) {
    for (std::size_t b = a + 1; b < players.size(); ++b) {
      links.emplace_back(players[a], players[b]);
    }
  }
  return Graph(std::move(players), std::move(links));
}

bool Graph::has_link(PlayerId i, PlayerId j) const {
  const Link l{std::min(i, j), std::max(i, j)};
  return std::binary_search(links_.begin(), links_.end(), l);
}

Graph Graph::without(PlayerId i, PlayerId j) const {
  const Link l{std::min(i, j), std::max(i, j)};
  auto it = std::lower_bound(links_.begin(), links_.end(), l);
  if (it == links_.end() || *it != l) {
    throw std::invalid_argument("link " + std::to_string(i) + "-" +
                                std::to_string(j) + " is not in the graph");
  }
  Graph out = *this;
  out.links_.erase(out.links_.begin() + (it - links_.begin()));
  return out;
}

Graph Graph::sublinks(std::uint32_t mask) const {
  Graph out = *this;
  out.links_.clear();
  for (std::size_t k = 0; k < links_.size(); ++k) {
    if ((mask >> k) & 1U) out.links_.push_back(links_[k]);
  }
  return out;
}

std::vector<Coalition::mask_type> Graph::adjacency() const {
  std::vector<Coalition::mask_type> adj(players_.size(), 0);
  for (auto [a, b] : links_) {
    const std::size_t ia = index_in(players_, a);
    const std::size_t ib = index_in(players_, b);
    adj[ia] |= Coalition::singleton(ib).mask();
    adj[ib] |= Coalition::singleton(ia).mask();
  }
  return adj;
}

CommGame::CommGame(Game v, Graph g) : game(std::move(v)), graph(std::move(g)) {
  if (game.player_list() != graph.players()) {
    throw std::invalid_argument("game and graph must share the player set");
  }
}

// --- Components and the restricted game -------------------------------------

namespace {

std::vector<Coalition> components_by_adjacency(
    const std::vector<Coalition::mask_type>& adj, Coalition s) {
  std::vector<Coalition> out;
  Coalition::mask_type left = s.mask();
  while (left != 0) {
    Coalition::mask_type comp = left & (~left + 1);
    Coalition::mask_type frontier = comp;
    while (frontier != 0) {
      const std::size_t k = Coalition(frontier).lowest();
      frontier &= frontier - 1;
      const Coalition::mask_type fresh = adj[k] & s.mask() & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

}  // namespace

std::vector<Coalition> components(const Graph& g, Coalition s) {
  if (!s.is_subset_of(Coalition::first(g.players().size()))) {
    throw std::invalid_argument("coalition is not a subset of the graph's players");
  }
  return components_by_adjacency(g.adjacency(), s);
}

Game restricted_game(const Game& v, const Graph& g) {
  if (v.player_list() != g.players()) {
    throw std::invalid_argument("game and graph must share the player set");
  }
  const auto adj = g.adjacency();
  const std::size_t count = std::size_t{1} << v.size();
  std::vector<double> worths(count, 0.0);
  for (std::size_t m = 1; m < count; ++m) {
    double sum = 0.0;
    for (Coalition t : components_by_adjacency(
             adj, Coalition(static_cast<Coalition::mask_type>(m)))) {
      sum += v(t);
    }
    worths[m] = sum;
  }
  return Game(v.player_list(), std::move(worths));
}

PayoffAllocation myerson(const Game& v, const Graph& g) {
  return shapley(restricted_game(v, g));
}

PayoffAllocation eemy(const Game& v, const Graph& g) {
  PayoffAllocation x = myerson(v, g);
  const double share = (v.grand_worth() - x.total()) / static_cast<double>(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += share;
  return x;
}

// --- Graph solutions -------------------------------------------------------

PayoffAllocation apply_graph_ess_operator(const GraphSolutionConcept& f,
                                          const CommGame& x) {
  PayoffAllocation out = f.evaluate(x);
  const double share =
      (x.game.grand_worth() - out.total()) / static_cast<double>(out.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += share;
  return out;
}

namespace sol {
namespace {

class GraphFnRule final : public GraphSolutionConcept::Rule {
 public:
  using Fn = PayoffAllocation (*)(const Game&, const Graph&);
  GraphFnRule(SolutionKind kind, const char* name, Fn fn)
      : kind_(kind), name_(name), fn_(fn) {}
  SolutionKind kind() const override { return kind_; }
  std::string name() const override { return name_; }
  PayoffAllocation evaluate(const CommGame& x) const override {
    return fn_(x.game, x.graph);
  }

 private:
  SolutionKind kind_;
  const char* name_;
  Fn fn_;
};

PayoffAllocation component_equal_division(const Game& v, const Graph& g) {
  PayoffAllocation x = PayoffAllocation::zeros(v);
  for (Coalition c : components(g, v.grand())) {
    const double share = v(c) / static_cast<double>(c.size());
    for (std::size_t k : c.indices()) x[k] = share;
  }
  return x;
}

class GraphEssRule final : public GraphSolutionConcept::Rule {
 public:
  explicit GraphEssRule(GraphSolutionConcept f) : f_(std::move(f)) {}
  SolutionKind kind() const override { return SolutionKind::graph_ess; }
  std::string name() const override { return "graph-ess:f=" + f_.name(); }
  SolutionDomain domain() const override { return f_.domain(); }
  PayoffAllocation evaluate(const CommGame& x) const override {
    return apply_graph_ess_operator(f_, x);
  }

 private:
  GraphSolutionConcept f_;
};

}  // namespace

GraphSolutionConcept myerson() {
  return GraphSolutionConcept(std::make_shared<GraphFnRule>(
      SolutionKind::myerson, "myerson", &tugx::myerson));
}
GraphSolutionConcept eemy() {
  return GraphSolutionConcept(
      std::make_shared<GraphFnRule>(SolutionKind::eemy, "eemy", &tugx::eemy));
}
GraphSolutionConcept zero_graph() {
  return GraphSolutionConcept(std::make_shared<ConstantRule<CommGame>>(
      0.0, "zero-graph", SolutionKind::zero));
}
GraphSolutionConcept ed_graph() {
  return GraphSolutionConcept(std::make_shared<GraphFnRule>(
      SolutionKind::ed_graph, "ed-graph", &component_equal_division));
}
GraphSolutionConcept graph_ess(GraphSolutionConcept f) {
  return GraphSolutionConcept(std::make_shared<GraphEssRule>(std::move(f)));
}

}  // namespace sol

double component_surplus_share(const GraphSolutionConcept& f,
                               const CommGame& x, Coalition c) {
  const auto comps = components(x.graph, x.game.grand());
  if (std::find(comps.begin(), comps.end(), c) == comps.end()) {
    throw std::invalid_argument("coalition is not a component of the graph");
  }
  const PayoffAllocation fx = f.evaluate(x);
  return fx.sum_over(c) + static_cast<double>(c.size()) /
                              static_cast<double>(fx.size()) *
                              (x.game.grand_worth() - fx.total());
}

// --- Fairness induction ----------------------------------------------------

namespace {

class FairnessInduction {
 public:
  FairnessInduction(const GraphSolutionConcept& f, const CommGame& x,
                    const Tolerance& tol)
      : f_(f), x_(x), tol_(tol) {
    for (auto [a, b] : x.graph.links()) {
      ends_.emplace_back(x.game.index_of(a), x.game.index_of(b));
    }
  }

  const std::vector<double>& solve(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    const Graph h = x_.graph.sublinks(mask);
    const std::size_t n = x_.game.size();
    const PayoffAllocation fx = f_.evaluate(CommGame(x_.game, h));
    const double surplus = x_.game.grand_worth() - fx.total();

    std::vector<Coalition::mask_type> adj(n, 0);
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      if ((mask >> e) & 1U) {
        adj[ends_[e].first] |= Coalition::singleton(ends_[e].second).mask();
        adj[ends_[e].second] |= Coalition::singleton(ends_[e].first).mask();
      }
    }

    std::vector<double> phi(n, 0.0);
    for (Coalition c : components_by_adjacency(adj, x_.game.grand())) {
      const double share =
          fx.sum_over(c) + static_cast<double>(c.size()) /
                               static_cast<double>(n) * surplus;
      // Potentials along a breadth-first tree rooted at the lowest member.
      const std::size_t root = c.lowest();
      std::vector<double> pot(n, 0.0);
      std::vector<bool> seen(n, false);
      std::vector<bool> tree_edge(ends_.size(), false);
      std::deque<std::size_t> queue{root};
      seen[root] = true;
      while (!queue.empty()) {
        const std::size_t p = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < ends_.size(); ++e) {
          if (!((mask >> e) & 1U)) continue;
          std::size_t q;
          if (ends_[e].first == p) {
            q = ends_[e].second;
          } else if (ends_[e].second == p) {
            q = ends_[e].first;
          } else {
            continue;
          }
          if (seen[q]) continue;
          seen[q] = true;
          tree_edge[e] = true;
          const std::vector<double> sub = solve(mask & ~(1U << e));
          pot[q] = pot[p] + sub[q] - sub[p];
          queue.push_back(q);
        }
      }
      double pot_sum = 0.0;
      for (std::size_t k : c.indices()) pot_sum += pot[k];
      const double base = (share - pot_sum) / static_cast<double>(c.size());
      for (std::size_t k : c.indices()) phi[k] = base + pot[k];

      for (std::size_t e = 0; e < ends_.size(); ++e) {
        if (!((mask >> e) & 1U) || tree_edge[e]) continue;
        const auto [a, b] = ends_[e];
        if (!c.contains(a)) continue;
        const std::vector<double> sub = solve(mask & ~(1U << e));
        if (!tol_.equal(phi[a] - phi[b], sub[a] - sub[b])) {
          throw InconsistentSystem(
              "pairwise differences do not close around the cycle through "
              "link " + std::to_string(x_.game.player(a)) + "-" +
              std::to_string(x_.game.player(b)) + " for " + f_.name());
        }
      }
    }
    return memo_.emplace(mask, std::move(phi)).first->second;
  }

 private:
  const GraphSolutionConcept& f_;
  const CommGame& x_;
  Tolerance tol_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::map<std::uint32_t, std::vector<double>> memo_;
};

}  // namespace

PayoffAllocation solve_by_fairness_induction(const GraphSolutionConcept& f,
                                             const CommGame& x,
                                             const Tolerance& tol) {
  if (x.graph.link_count() > 12) {
    throw std::invalid_argument("fairness induction is limited to 12 links");
  }
  FairnessInduction solver(f, x, tol);
  const std::uint32_t full =
      static_cast<std::uint32_t>((std::uint64_t{1} << x.graph.link_count()) - 1);
  return PayoffAllocation(x.game.player_list(), solver.solve(full));
}

// --- Adapters --------------------------------------------------------------

namespace {

class FixedGraphRule final : public SolutionConcept::Rule {
 public:
  FixedGraphRule(GraphSolutionConcept f, Graph g)
      : f_(std::move(f)), g_(std::move(g)) {}
  SolutionKind kind() const override { return SolutionKind::graph_based; }
  std::string name() const override {
    std::string links;
    for (auto [a, b] : g_.links()) {
      if (!links.empty()) links += ",";
      links += std::to_string(a) + "-" + std::to_string(b);
    }
    return f_.name() + "@g={" + links + "}";
  }
  SolutionDomain domain() const override { return f_.domain(); }
  PayoffAllocation evaluate(const Game& v) const override {
    return f_.evaluate(CommGame(v, g_));
  }

 private:
  GraphSolutionConcept f_;
  Graph g_;
};

}  // namespace

SolutionConcept as_solution(GraphSolutionConcept f, Graph g) {
  return SolutionConcept(
      std::make_shared<FixedGraphRule>(std::move(f), std::move(g)));
}

std::vector<Graph> all_graphs(const std::vector<PlayerId>& players) {
  const Graph full = Graph::complete(players);
  if (full.link_count() > 20) {
    throw std::invalid_argument("too many graphs to enumerate");
  }
  std::vector<Graph> out;
  const std::uint32_t count = std::uint32_t{1} << full.link_count();
  out.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) out.push_back(full.sublinks(m));
  return out;
}

}  // namespace tugx
