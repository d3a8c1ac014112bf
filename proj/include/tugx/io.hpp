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

#ifndef TUGX_IO_HPP
#define TUGX_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tugx/axioms.hpp"

namespace tugx {

// Game files:
//   {"players": [1, 2],
//    "v": [{"coalition": [1], "value": 2}, ...],
//    "graph": [[1, 2]],            optional
//    "partition": [[1], [2]]}      optional
// Coalitions not listed are worth 0; the empty coalition may not be listed.
struct GameFile {
  Game game;
  std::optional<Graph> graph;
  std::optional<Partition> partition;

  friend bool operator==(const GameFile&, const GameFile&) = default;
};

/// Throws ParseError on malformed JSON or anything failing validation.
GameFile parse_game_file(std::string_view text);
GameFile load_game_file(const std::filesystem::path& path);
/// Lists every nonzero coalition, in bitmask order; worths are written
/// exactly so that parsing gives back the same file.
std::string render_game_file(const GameFile& file);

CommGame require_graph(const GameFile& file);
PartitionGame require_partition(const GameFile& file);

// Names. Plain solutions: shapley | standalone | ed | ess | ps |
// constant:<c> | <operator>(<solution>). Operators: ess | ps |
// weighted:alpha=<a> | ex31:w=<file> | ex32:w=<file> | cohesive-ess |
// cohesive-ps. Graph solutions: myerson | eemy | zero-graph | ed-graph |
// graph-ess:f=<graph solution>. Partition solutions: ad | ee-ad |
// zero-partition | partition-ess:f=<partition solution>.
// All throw UnknownName.
SolutionConcept resolve_solution(std::string_view name);
ExtensionOperator resolve_operator(std::string_view name);
GraphSolutionConcept resolve_graph_solution(std::string_view name);
PartitionSolutionConcept resolve_partition_solution(std::string_view name);

/// Any solution name: graph names first, then partition names, then plain
/// ones (the grammars do not overlap).
Benchmark resolve_any(std::string_view name);

/// What a check runs on. With `operator_level` the subject names an
/// operator applied to each of `fs` (graph and partition solutions only take
/// "ess"); otherwise it names a solution and `fs` holds at most one
/// benchmark of the same kind.
CheckSubject make_subject(std::string_view subject, const std::vector<std::string>& fs,
                          bool operator_level);

/// `gen:n=<a>[..<b>],count=<k>,seed=<s>[,profile=<p>]`, or a directory whose
/// *.json files are read in filename order. Games with a graph or a
/// partition also join the structured lists.
Corpus load_corpus(std::string_view spec, const Tolerance& tol = {});

/// x rounded to 12 significant digits.
double round12(double x);

nlohmann::ordered_json game_to_json(const Game& v, const std::optional<Graph>& graph,
                            const std::optional<Partition>& partition,
                            bool rounded);
nlohmann::ordered_json allocation_to_json(const PayoffAllocation& p);
nlohmann::ordered_json report_to_json(const AxiomReport& report);

}  // namespace tugx

#endif  // TUGX_IO_HPP
