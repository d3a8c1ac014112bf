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

// Python bindings. Solutions and operators are passed by name, using the
// same grammar as the command line; structured results come back as JSON
// text and are decoded in tugx/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tugx/io.hpp"

namespace py = pybind11;
using namespace tugx;

namespace {

using Allocation = std::map<PlayerId, double>;

Allocation to_map(const PayoffAllocation& p) {
  Allocation out;
  for (std::size_t k = 0; k < p.size(); ++k) out[p.player_list()[k]] = p[k];
  return out;
}

Game make_game(std::vector<PlayerId> players,
               const std::map<std::vector<PlayerId>, double>& worths) {
  std::vector<std::pair<std::vector<PlayerId>, double>> entries(worths.begin(), worths.end());
  return Game::from_entries(std::move(players), entries);
}

std::vector<PlayerId> coalition_members(const Game& v, const std::vector<PlayerId>& members) {
  for (PlayerId i : members) {
    if (!v.has_player(i)) throw std::invalid_argument("unknown player " + std::to_string(i));
  }
  return members;
}

Allocation solve(const Game& v, const std::string& name,
                 const std::optional<std::vector<Link>>& graph,
                 const std::optional<std::vector<Block>>& partition) {
  const Benchmark f = resolve_any(name);
  if (const auto* g = std::get_if<GraphSolutionConcept>(&f)) {
    if (!graph) throw MissingStructure(name + " needs a graph");
    return to_map(g->evaluate(CommGame(v, Graph(v.player_list(), *graph))));
  }
  if (const auto* p = std::get_if<PartitionSolutionConcept>(&f)) {
    if (!partition) throw MissingStructure(name + " needs a partition");
    return to_map(p->evaluate(PartitionGame(v, Partition(*partition))));
  }
  return to_map(std::get<SolutionConcept>(f).evaluate(v));
}

std::string check(const std::string& axiom, const std::string& subject,
                  const std::string& corpus, const std::vector<std::string>& f,
                  bool operator_level, std::size_t workers, double tol) {
  const auto id = parse_axiom(axiom);
  if (!id) throw UnknownName("unknown axiom \"" + axiom + "\"");
  const Corpus c = load_corpus(corpus, Tolerance{tol, tol});
  const CheckSubject s = make_subject(subject, f, operator_level || is_operator_axiom(*id));
  AxiomReport r;
  {
    py::gil_scoped_release release;
    r = check_axiom_parallel(*id, s, c, std::max<std::size_t>(workers, 1));
  }
  return report_to_json(r).dump();
}

std::string check_theorem(const std::string& theorem, const std::string& f,
                          const std::string& corpus, std::size_t workers) {
  const auto t = parse_theorem(theorem);
  if (!t) throw UnknownName("unknown theorem \"" + theorem + "\"");
  const Corpus c = load_corpus(corpus);
  const Benchmark b = resolve_any(f);
  std::vector<AxiomReport> reports;
  {
    py::gil_scoped_release release;
    reports = check_theorem_suite(*t, b, c, std::max<std::size_t>(workers, 1));
  }
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_tugx, m) {
  m.doc() = "TU-game solutions, extension operators and axiom checks";

  py::register_exception<DomainViolation>(m, "DomainViolation", PyExc_ValueError);
  py::register_exception<InconsistentSystem>(m, "InconsistentSystem", PyExc_RuntimeError);
  py::register_exception<IncompatibleSubject>(m, "IncompatibleSubject", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownName>(m, "UnknownName", PyExc_KeyError);
  py::register_exception<MissingStructure>(m, "MissingStructure", PyExc_ValueError);

  py::class_<Game>(m, "Game")
      .def(py::init(&make_game), py::arg("players"), py::arg("worths") = std::map<std::vector<PlayerId>, double>{},
           "Players and a {coalition tuple: worth} mapping; missing coalitions are worth 0.")
      .def_property_readonly("players", &Game::player_list)
      .def_property_readonly("grand_worth", &Game::grand_worth)
      .def("worth",
           [](const Game& v, const std::vector<PlayerId>& members) {
             return v.worth(v.coalition_of(coalition_members(v, members)));
           })
      .def("__len__", &Game::size)
      .def("__eq__", [](const Game& a, const Game& b) { return a == b; })
      .def("to_json", [](const Game& v) { return render_game_file({v, std::nullopt, std::nullopt}); })
      .def("__repr__", [](const Game& v) {
        return "Game(" + std::to_string(v.size()) + " players, v(N)=" + std::to_string(v.grand_worth()) + ")";
      });

  m.def("random_game", [](std::size_t n, std::uint64_t seed, const std::string& profile) {
        const auto p = parse_profile(profile);
        if (!p) throw UnknownName("unknown profile \"" + profile + "\"");
        return random_game(player_range(n), seed, *p);
      },
      py::arg("n"), py::arg("seed"), py::arg("profile") = "general");

  m.def("parse_game", [](const std::string& text) {
        GameFile f = parse_game_file(text);
        std::optional<std::vector<Link>> links;
        std::optional<std::vector<Block>> blocks;
        if (f.graph) links = f.graph->links();
        if (f.partition) blocks = f.partition->blocks();
        return py::make_tuple(f.game, links, blocks);
      },
      py::arg("text"), "Returns (game, links or None, blocks or None).");

  m.def("solve", &solve, py::arg("game"), py::arg("solution"), py::arg("graph") = py::none(),
        py::arg("partition") = py::none(),
        "Payoffs of a named solution; graph and partition solutions need their structure.");

  m.def("extend",
        [](const Game& v, const std::string& op, const std::string& f) {
          return to_map(resolve_operator(op).apply(resolve_solution(f), v));
        },
        py::arg("game"), py::arg("operator"), py::arg("f"));

  m.def("max_partition_value", [](const Game& v) {
        const auto r = max_partition_value(v);
        std::vector<std::vector<PlayerId>> blocks;
        for (Coalition c : r.partition) blocks.push_back(v.members(c));
        return py::make_tuple(r.value, blocks);
      },
      py::arg("game"));

  m.def("_check", &check, py::arg("axiom"), py::arg("subject"), py::arg("corpus"),
        py::arg("f") = std::vector<std::string>{}, py::arg("operator_level") = false,
        py::arg("workers") = 1, py::arg("tol") = 1e-9);
  m.def("_check_theorem", &check_theorem, py::arg("theorem"), py::arg("f"), py::arg("corpus"),
        py::arg("workers") = 1);

  m.def("axioms", [] {
    std::vector<std::string> out;
    for (AxiomId id : all_axioms()) out.emplace_back(to_string(id));
    return out;
  });
}
