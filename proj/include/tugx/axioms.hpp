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

#ifndef TUGX_AXIOMS_HPP
#define TUGX_AXIOMS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tugx/coalition.hpp"
#include "tugx/comm.hpp"
#include "tugx/operators.hpp"

namespace tugx {

enum class AxiomId {
  E,
  CE,
  SYM,
  ET,
  f_IES,
  f_IER,
  OP_ET,
  OP_EES,
  OP_WEES,
  FA,
  FA_v,
  FDS,
  f_FDS,
  CRBC,
  RBCC,
  RBCC_v,
  f_EGN,
  f_FDSC,
  CoE,
  f_IECoS,
  f_IECoR,
};

/// Every axiom, in declaration order.
const std::vector<AxiomId>& all_axioms();
std::optional<AxiomId> parse_axiom(std::string_view name);
std::string_view to_string(AxiomId id);
/// True for the operator axioms OP-ET, OP-EES and OP-WEES.
bool is_operator_axiom(AxiomId id);

// --- Subjects --------------------------------------------------------------

struct SolutionSubject {
  SolutionConcept phi;
  std::optional<SolutionConcept> benchmark;
};

struct GraphSubject {
  GraphSolutionConcept phi;
  std::optional<GraphSolutionConcept> benchmark;
};

struct PartitionSubject {
  PartitionSolutionConcept phi;
  std::optional<PartitionSolutionConcept> benchmark;
};

/// An operator on plain solutions together with the solutions it is
/// exercised on.
struct OperatorSubject {
  ExtensionOperator op;
  std::vector<SolutionConcept> solutions;
};

struct GraphOperatorSubject {
  std::string name;
  std::function<GraphSolutionConcept(GraphSolutionConcept)> op;
  std::vector<GraphSolutionConcept> solutions;
};

struct PartitionOperatorSubject {
  std::string name;
  std::function<PartitionSolutionConcept(PartitionSolutionConcept)> op;
  std::vector<PartitionSolutionConcept> solutions;
};

using CheckSubject =
    std::variant<SolutionSubject, GraphSubject, PartitionSubject,
                 OperatorSubject, GraphOperatorSubject, PartitionOperatorSubject>;

std::string subject_name(const CheckSubject& subject);

/// The equal surplus operator on graph and partition solutions.
GraphOperatorSubject graph_ess_operator(std::vector<GraphSolutionConcept> solutions);
PartitionOperatorSubject partition_ess_operator(
    std::vector<PartitionSolutionConcept> solutions);

// --- Reports ---------------------------------------------------------------

/// One game in a witness, with its structure when the axiom has one.
struct WitnessInstance {
  std::string role;
  Game game;
  std::optional<Graph> graph;
  std::optional<Partition> partition;
};

struct Witness {
  std::vector<WitnessInstance> instances;
  std::vector<PlayerId> players;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;
};

struct AxiomReport {
  AxiomId axiom;
  std::string subject;
  bool pass = true;
  std::size_t cases_checked = 0;
  std::size_t violations = 0;
  std::optional<Witness> witness;
};

// --- Corpora ---------------------------------------------------------------

struct Corpus {
  std::vector<Game> games;
  std::vector<CommGame> comm_games;
  std::vector<PartitionGame> partition_games;

  /// Seeds the per-case randomness (pairs, permutations, cycle orders).
  std::uint64_t seed = 0;
  /// Global position of the first entry; per-case seeds use it so that a
  /// slice checks exactly what the same entries check in the whole corpus.
  std::size_t index_base = 0;
  /// Seeded random enumerations per block, on top of the ascending one.
  std::size_t random_orders = 2;
  /// Constructed hypothesis pairs attempted per (game, player).
  std::size_t pairs_per_player = 2;
  Tolerance tol;
};

struct CorpusSpec {
  std::size_t n_min = 2;
  std::size_t n_max = 4;
  /// Games per player count.
  std::size_t count = 10;
  std::uint64_t seed = 0;
  GameProfile profile = GameProfile::general;
};

/// Seeded games on players 1..n for every n in range. Each game is paired
/// with every graph and every partition when n <= 4, otherwise with one
/// seeded random graph and one seeded random partition.
Corpus generate_corpus(const CorpusSpec& spec);

/// The seed of the idx-th generated game.
std::uint64_t game_seed(std::uint64_t corpus_seed, std::size_t n, std::size_t idx);

Graph random_graph(const std::vector<PlayerId>& players, std::uint64_t seed);
Partition random_partition(const std::vector<PlayerId>& players,
                           std::uint64_t seed);

// --- Checking --------------------------------------------------------------

/// Searches the corpus, and pairs or variants constructed from it, for a
/// violation of the axiom. Throws IncompatibleSubject when the axiom does
/// not apply to the subject and MissingStructure when the corpus has no
/// instance of the kind the subject needs.
AxiomReport check_axiom(AxiomId axiom, const CheckSubject& subject,
                        const Corpus& corpus);

/// Same as check_axiom, splitting the corpus entries across threads. The
/// merged report is identical to the single-threaded one.
AxiomReport check_axiom_parallel(AxiomId axiom, const CheckSubject& subject,
                                 const Corpus& corpus, std::size_t workers);

/// Sums case counts and keeps the witness of the earliest failing part.
AxiomReport merge_reports(const std::vector<AxiomReport>& parts);

enum class Theorem { T2_1, T3_1, CB_1, T4_1, T4_2, T5_1, T5_2 };

std::optional<Theorem> parse_theorem(std::string_view name);
std::string_view to_string(Theorem t);

using Benchmark =
    std::variant<SolutionConcept, GraphSolutionConcept, PartitionSolutionConcept>;

/// Runs every axiom of the theorem's characterization against the value
/// the theorem singles out, built from the benchmark.
std::vector<AxiomReport> check_theorem_suite(Theorem theorem,
                                             const Benchmark& benchmark,
                                             const Corpus& corpus,
                                             std::size_t workers = 1);

}  // namespace tugx

#endif  // TUGX_AXIOMS_HPP
