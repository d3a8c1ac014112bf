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

#ifndef TUGX_COMM_HPP
#define TUGX_COMM_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "tugx/solutions.hpp"

namespace tugx {

using Link = std::pair<PlayerId, PlayerId>;

/// An undirected graph on an ordered player list. Links are stored with the
/// smaller id first and kept sorted.
class Graph {
 public:
  Graph(std::vector<PlayerId> players, std::vector<Link> links);

  static Graph empty(std::vector<PlayerId> players);
  static Graph complete(std::vector<PlayerId> players);

  const std::vector<PlayerId>& players() const { return players_; }
  const std::vector<Link>& links() const { return links_; }
  std::size_t link_count() const { return links_.size(); }

  bool has_link(PlayerId i, PlayerId j) const;
  /// g - ij. Rejects a link not in g.
  Graph without(PlayerId i, PlayerId j) const;
  /// Keeps the links whose bit is set in `mask` (bit k = links()[k]).
  Graph sublinks(std::uint32_t mask) const;

  /// Neighbour masks over player indices.
  std::vector<Coalition::mask_type> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<PlayerId> players_;
  std::vector<Link> links_;
};

/// A communication game (v, g).
struct CommGame {
  CommGame(Game v, Graph g);

  Game game;
  Graph graph;

  friend bool operator==(const CommGame&, const CommGame&) = default;
};

inline const Game& underlying_game(const CommGame& x) { return x.game; }

/// Partition of S into the connected components of g restricted to S,
/// ordered by lowest member. S is a coalition over g's player list.
std::vector<Coalition> components(const Graph& g, Coalition s);

/// v^g(S) = sum of v(T) over the components T of S in g.
Game restricted_game(const Game& v, const Graph& g);

PayoffAllocation myerson(const Game& v, const Graph& g);

/// Myerson value plus an equal share of v(N) - sum_k My_k.
PayoffAllocation eemy(const Game& v, const Graph& g);

using GraphSolutionConcept = BasicSolution<CommGame>;

namespace sol {

GraphSolutionConcept myerson();
GraphSolutionConcept eemy();
GraphSolutionConcept zero_graph();
/// v(C)/|C| for every member of a component C. Not fair in general.
GraphSolutionConcept ed_graph();
/// (v, g) -> F(v, g) + equal share of the surplus.
GraphSolutionConcept graph_ess(GraphSolutionConcept f);

}  // namespace sol

PayoffAllocation apply_graph_ess_operator(const GraphSolutionConcept& f,
                                          const CommGame& x);

/// sum_{i in C} F_i + |C|/n (v(N) - sum_k F_k); C must be a component of g.
double component_surplus_share(const GraphSolutionConcept& f,
                               const CommGame& x, Coalition c);

/// Rebuilds the allocation satisfying efficiency, fairness on all subgraphs
/// and F-fair surplus division from pairwise differences, recursing on
/// link-deleted graphs. Throws InconsistentSystem if the differences do
/// not close around a cycle; rejects graphs with more than 12 links.
PayoffAllocation solve_by_fairness_induction(const GraphSolutionConcept& f,
                                             const CommGame& x,
                                             const Tolerance& tol = {});

/// The plain solution v -> F(v, g) for a fixed graph g on v's players.
SolutionConcept as_solution(GraphSolutionConcept f, Graph g);

/// Every graph on the given players (2^(n(n-1)/2) of them), by link mask.
std::vector<Graph> all_graphs(const std::vector<PlayerId>& players);

}  // namespace tugx

#endif  // TUGX_COMM_HPP
