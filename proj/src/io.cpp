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

#include "tugx/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tugx {

using json = nlohmann::ordered_json;

namespace {

std::vector<PlayerId> player_ids(const json& list, const char* what) {
  if (!list.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<PlayerId> out;
  for (const auto& x : list) {
    if (!x.is_number_integer() || x.get<long long>() < 0 ||
        x.get<long long>() > 0xFFFFFFFFLL) {
      throw ParseError(std::string(what) + " must hold nonnegative integer player ids");
    }
    out.push_back(static_cast<PlayerId>(x.get<long long>()));
  }
  return out;
}

}  // namespace

GameFile parse_game_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("a game file is a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "players" && key != "v" && key != "graph" && key != "partition") {
      throw ParseError("unexpected key \"" + key + "\"");
    }
  }
  if (!doc.contains("players")) throw ParseError("missing \"players\"");
  try {
    auto players = player_ids(doc["players"], "players");
    if (players.empty()) throw ParseError("players must be nonempty");
    std::vector<std::pair<std::vector<PlayerId>, double>> entries;
    if (doc.contains("v")) {
      if (!doc["v"].is_array()) throw ParseError("\"v\" must be an array");
      for (const auto& e : doc["v"]) {
        if (!e.is_object() || !e.contains("coalition") || !e.contains("value") ||
            e.size() != 2) {
          throw ParseError("each worth entry is {\"coalition\": [...], \"value\": x}");
        }
        if (!e["value"].is_number()) throw ParseError("worths must be numbers");
        entries.emplace_back(player_ids(e["coalition"], "coalition"),
                             e["value"].get<double>());
      }
    }
    GameFile out{Game::from_entries(players, entries), std::nullopt, std::nullopt};
    if (doc.contains("graph")) {
      std::vector<Link> links;
      if (!doc["graph"].is_array()) throw ParseError("\"graph\" must be an array");
      for (const auto& l : doc["graph"]) {
        const auto ends = player_ids(l, "link");
        if (ends.size() != 2) throw ParseError("a link has two endpoints");
        links.emplace_back(ends[0], ends[1]);
      }
      out.graph = Graph(out.game.player_list(), std::move(links));
    }
    if (doc.contains("partition")) {
      std::vector<Block> blocks;
      if (!doc["partition"].is_array()) throw ParseError("\"partition\" must be an array");
      for (const auto& b : doc["partition"]) blocks.push_back(player_ids(b, "block"));
      Partition p(std::move(blocks));
      if (p.players() != out.game.player_list()) {
        throw ParseError("the partition must cover exactly the players");
      }
      out.partition = std::move(p);
    }
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

GameFile load_game_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_game_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

double round12(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

json game_to_json(const Game& v, const std::optional<Graph>& graph,
                  const std::optional<Partition>& partition, bool rounded) {
  json out;
  out["players"] = v.player_list();
  json worths = json::array();
  for (std::size_t m = 1; m < v.worths().size(); ++m) {
    const double w = v.worths()[m];
    if (w == 0.0) continue;
    const Coalition s(static_cast<Coalition::mask_type>(m));
    worths.push_back({{"coalition", v.members(s)}, {"value", rounded ? round12(w) : w}});
  }
  out["v"] = std::move(worths);
  if (graph) {
    json links = json::array();
    for (const auto& [i, j] : graph->links()) links.push_back({i, j});
    out["graph"] = std::move(links);
  }
  if (partition) out["partition"] = partition->blocks();
  return out;
}

std::string render_game_file(const GameFile& file) {
  return game_to_json(file.game, file.graph, file.partition, false).dump(2) + "\n";
}

CommGame require_graph(const GameFile& file) {
  if (!file.graph) throw MissingStructure("the game file has no \"graph\"");
  return CommGame(file.game, *file.graph);
}

PartitionGame require_partition(const GameFile& file) {
  if (!file.partition) throw MissingStructure("the game file has no \"partition\"");
  return PartitionGame(file.game, *file.partition);
}

// --- Names -----------------------------------------------------------------

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

double parse_number(std::string_view text, std::string_view context) {
  const std::string s(text);
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw UnknownName("bad number \"" + s + "\" in " + std::string(context));
  }
  return x;
}

Game load_reference(std::string_view path) {
  GameFile file = load_game_file(std::filesystem::path(std::string(path)));
  return file.game;
}

}  // namespace

ExtensionOperator resolve_operator(std::string_view name) {
  if (name == "ess") return ExtensionOperator::ess();
  if (name == "ps") return ExtensionOperator::ps();
  if (name == "cohesive-ess") return ExtensionOperator::cohesive_ess();
  if (name == "cohesive-ps") return ExtensionOperator::cohesive_ps();
  try {
    if (starts_with(name, "weighted:alpha=")) {
      return ExtensionOperator::weighted(
          WeightScheme::convex(parse_number(name.substr(15), name)));
    }
    if (starts_with(name, "ex31:w=")) {
      return ExtensionOperator::example_31(load_reference(name.substr(7)));
    }
    if (starts_with(name, "ex32:w=")) {
      return ExtensionOperator::example_32(load_reference(name.substr(7)));
    }
  } catch (const UnknownName&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw UnknownName("operator \"" + std::string(name) + "\": " + e.what());
  }
  throw UnknownName("unknown operator \"" + std::string(name) + "\"");
}

SolutionConcept resolve_solution(std::string_view name) {
  if (name == "shapley") return sol::shapley();
  if (name == "standalone") return sol::stand_alone();
  if (name == "ed") return sol::equal_division();
  if (name == "ess") return sol::ess_value();
  if (name == "ps") return sol::ps_value();
  if (starts_with(name, "constant:")) {
    return sol::constant(parse_number(name.substr(9), name));
  }
  const auto open = name.find('(');
  if (open != std::string_view::npos && open > 0 && name.back() == ')') {
    const auto op = resolve_operator(name.substr(0, open));
    return wrap(op, resolve_solution(name.substr(open + 1, name.size() - open - 2)));
  }
  throw UnknownName("unknown solution \"" + std::string(name) + "\"");
}

GraphSolutionConcept resolve_graph_solution(std::string_view name) {
  if (name == "myerson") return sol::myerson();
  if (name == "eemy") return sol::eemy();
  if (name == "zero-graph") return sol::zero_graph();
  if (name == "ed-graph") return sol::ed_graph();
  if (starts_with(name, "graph-ess:f=")) {
    return sol::graph_ess(resolve_graph_solution(name.substr(12)));
  }
  throw UnknownName("unknown graph solution \"" + std::string(name) + "\"");
}

PartitionSolutionConcept resolve_partition_solution(std::string_view name) {
  if (name == "ad" || name == "aumann-dreze") return sol::aumann_dreze();
  if (name == "ee-ad") return sol::ee_ad();
  if (name == "zero-partition") return sol::zero_partition();
  if (starts_with(name, "partition-ess:f=")) {
    return sol::partition_ess(resolve_partition_solution(name.substr(16)));
  }
  throw UnknownName("unknown partition solution \"" + std::string(name) + "\"");
}

// --- Subjects --------------------------------------------------------------

namespace {

enum class Grammar { plain, graph, partition };

Grammar grammar_of(std::string_view name) {
  try {
    resolve_graph_solution(name);
    return Grammar::graph;
  } catch (const UnknownName&) {
  }
  try {
    resolve_partition_solution(name);
    return Grammar::partition;
  } catch (const UnknownName&) {
  }
  return Grammar::plain;
}

}  // namespace

Benchmark resolve_any(std::string_view name) {
  switch (grammar_of(name)) {
    case Grammar::graph:
      return resolve_graph_solution(name);
    case Grammar::partition:
      return resolve_partition_solution(name);
    case Grammar::plain:
      break;
  }
  return resolve_solution(name);
}

CheckSubject make_subject(std::string_view subject, const std::vector<std::string>& fs,
                          bool operator_level) {
  if (operator_level) {
    if (fs.empty()) throw std::invalid_argument("an operator subject needs benchmark solutions");
    const Grammar kind = grammar_of(fs.front());
    for (const auto& name : fs) {
      if (grammar_of(name) != kind) {
        throw IncompatibleSubject("the benchmark solutions must be of one kind");
      }
    }
    if (kind == Grammar::graph || kind == Grammar::partition) {
      if (subject != "ess") {
        throw UnknownName("graph and partition solutions only take the ess operator");
      }
      if (kind == Grammar::graph) {
        std::vector<GraphSolutionConcept> gs;
        for (const auto& name : fs) gs.push_back(resolve_graph_solution(name));
        return graph_ess_operator(std::move(gs));
      }
      std::vector<PartitionSolutionConcept> ps;
      for (const auto& name : fs) ps.push_back(resolve_partition_solution(name));
      return partition_ess_operator(std::move(ps));
    }
    std::vector<SolutionConcept> plain;
    for (const auto& name : fs) plain.push_back(resolve_solution(name));
    return OperatorSubject{resolve_operator(subject), std::move(plain)};
  }

  if (fs.size() > 1) throw std::invalid_argument("a solution subject takes one benchmark");
  const Benchmark phi = resolve_any(subject);
  std::optional<Benchmark> f;
  if (!fs.empty()) f = resolve_any(fs.front());
  if (f && f->index() != phi.index()) {
    throw IncompatibleSubject("the benchmark must be of the same kind as the subject");
  }
  if (const auto* g = std::get_if<GraphSolutionConcept>(&phi)) {
    GraphSubject s{*g, std::nullopt};
    if (f) s.benchmark = std::get<GraphSolutionConcept>(*f);
    return s;
  }
  if (const auto* p = std::get_if<PartitionSolutionConcept>(&phi)) {
    PartitionSubject s{*p, std::nullopt};
    if (f) s.benchmark = std::get<PartitionSolutionConcept>(*f);
    return s;
  }
  SolutionSubject s{std::get<SolutionConcept>(phi), std::nullopt};
  if (f) s.benchmark = std::get<SolutionConcept>(*f);
  return s;
}

// --- Corpora ---------------------------------------------------------------

namespace {

std::size_t parse_count(std::string_view text, std::string_view context) {
  const double x = parse_number(text, context);
  if (x < 0 || x != static_cast<double>(static_cast<std::size_t>(x))) {
    throw ParseError("expected a nonnegative integer in \"" + std::string(context) + "\"");
  }
  return static_cast<std::size_t>(x);
}

Corpus generated_corpus(std::string_view spec) {
  CorpusSpec cs;
  bool have_n = false;
  bool have_seed = false;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("corpus option \"" + std::string(item) + "\" needs a value");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    try {
      if (key == "n") {
        const auto dots = value.find("..");
        cs.n_min = parse_count(value.substr(0, dots), spec);
        cs.n_max = dots == std::string_view::npos ? cs.n_min
                                                  : parse_count(value.substr(dots + 2), spec);
        have_n = true;
      } else if (key == "count") {
        cs.count = parse_count(value, spec);
      } else if (key == "seed") {
        const std::string s(value);
        char* end = nullptr;
        errno = 0;
        cs.seed = std::strtoull(s.c_str(), &end, 10);
        if (s.empty() || *end != '\0' || errno == ERANGE) {
          throw ParseError("bad seed \"" + s + "\"");
        }
        have_seed = true;
      } else if (key == "profile") {
        const auto p = parse_profile(value);
        if (!p) throw ParseError("unknown profile \"" + std::string(value) + "\"");
        cs.profile = *p;
      } else {
        throw ParseError("unknown corpus option \"" + std::string(key) + "\"");
      }
    } catch (const UnknownName& e) {
      throw ParseError(e.what());
    }
  }
  if (!have_n || !have_seed) throw ParseError("a generated corpus needs n= and seed=");
  try {
    return generate_corpus(cs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Corpus load_corpus(std::string_view spec, const Tolerance& tol) {
  Corpus c;
  if (starts_with(spec, "gen:")) {
    c = generated_corpus(spec.substr(4));
  } else {
    const std::filesystem::path dir{std::string(spec)};
    if (!std::filesystem::is_directory(dir)) {
      throw ParseError("corpus \"" + std::string(spec) +
                       "\" is neither gen:... nor a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    for (const auto& path : files) {
      GameFile f = load_game_file(path);
      if (f.graph) c.comm_games.emplace_back(f.game, *f.graph);
      if (f.partition) c.partition_games.emplace_back(f.game, *f.partition);
      c.games.push_back(std::move(f.game));
    }
  }
  c.tol = tol;
  return c;
}

// --- Reports ---------------------------------------------------------------

json allocation_to_json(const PayoffAllocation& p) {
  json payoffs = json::array();
  for (double x : p.values()) payoffs.push_back(round12(x));
  return {{"players", p.player_list()}, {"payoffs", payoffs}, {"total", round12(p.total())}};
}

json report_to_json(const AxiomReport& r) {
  json out;
  out["axiom"] = std::string(to_string(r.axiom));
  out["subject"] = r.subject;
  out["verdict"] = r.pass ? "pass" : "fail";
  out["cases_checked"] = r.cases_checked;
  out["violations"] = r.violations;
  if (r.witness) {
    const Witness& w = *r.witness;
    json instances = json::array();
    for (const auto& inst : w.instances) {
      instances.push_back({{"role", inst.role},
                           {"game", game_to_json(inst.game, inst.graph, inst.partition, true)}});
    }
    out["witness"] = {{"instances", instances},
                      {"players", w.players},
                      {"lhs", round12(w.lhs)},
                      {"rhs", round12(w.rhs)},
                      {"difference", round12(w.lhs - w.rhs)},
                      {"detail", w.detail}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace tugx
