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

// tugx: solve games, check axioms, generate corpora, compare against oracles.
// Exit status: 0 success or pass, 1 axiom failure or oracle mismatch,
// 2 usage, parse or domain error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tugx/axioms.hpp"
#include "tugx/io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tugx;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

Tolerance tolerance(double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("--tol must be nonnegative");
  return Tolerance{eps, eps};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string game;
  std::string solution;
  std::string op;
  std::string f;
  std::string format = "json";
};

void print_table(const std::vector<std::pair<std::string, PayoffAllocation>>& rows,
                 const std::optional<double>& surplus) {
  for (const auto& [label, p] : rows) {
    std::cout << label << ":";
    for (std::size_t k = 0; k < p.size(); ++k) {
      std::cout << "  " << p.player_list()[k] << "=" << format_real(p[k]);
    }
    std::cout << "  total=" << format_real(p.total()) << "\n";
  }
  if (surplus) std::cout << "surplus: " << format_real(*surplus) << "\n";
}

int cmd_solve(const SolveArgs& a) {
  const GameFile file = load_game_file(a.game);
  std::vector<std::pair<std::string, PayoffAllocation>> rows;
  std::optional<double> surplus;
  json out;
  if (!a.op.empty()) {
    if (a.f.empty()) throw std::invalid_argument("--operator needs --f");
    if (!a.solution.empty()) {
      throw std::invalid_argument("give either --solution or --operator with --f");
    }
    const Benchmark f = resolve_any(a.f);
    if (const auto* g = std::get_if<GraphSolutionConcept>(&f)) {
      if (a.op != "ess") throw UnknownName("graph solutions only take the ess operator");
      const CommGame x = require_graph(file);
      const auto fx = g->evaluate(x);
      rows = {{"benchmark", fx}, {"extended", apply_graph_ess_operator(*g, x)}};
      surplus = x.game.grand_worth() - fx.total();
    } else if (const auto* p = std::get_if<PartitionSolutionConcept>(&f)) {
      if (a.op != "ess") {
        throw UnknownName("partition solutions only take the ess operator");
      }
      const PartitionGame x = require_partition(file);
      const auto fx = p->evaluate(x);
      rows = {{"benchmark", fx}, {"extended", apply_partition_ess_operator(*p, x)}};
      surplus = x.game.grand_worth() - fx.total();
    } else {
      const auto& plain = std::get<SolutionConcept>(f);
      const ExtensionOperator op = resolve_operator(a.op);
      const auto fx = plain.evaluate(file.game);
      const double top =
          op.cohesive() ? max_partition_value(file.game).value : file.game.grand_worth();
      rows = {{"benchmark", fx}, {"extended", op.apply(plain, file.game)}};
      surplus = top - fx.total();
    }
    out["benchmark"] = allocation_to_json(rows[0].second);
    out["surplus"] = round12(*surplus);
    out["extended"] = allocation_to_json(rows[1].second);
  } else {
    if (a.solution.empty()) throw std::invalid_argument("give --solution or --operator");
    const Benchmark s = resolve_any(a.solution);
    PayoffAllocation p;
    if (const auto* g = std::get_if<GraphSolutionConcept>(&s)) {
      p = g->evaluate(require_graph(file));
    } else if (const auto* q = std::get_if<PartitionSolutionConcept>(&s)) {
      p = q->evaluate(require_partition(file));
    } else {
      p = std::get<SolutionConcept>(s).evaluate(file.game);
    }
    rows = {{"payoffs", p}};
    out = allocation_to_json(p);
  }
  if (a.format == "table") {
    print_table(rows, surplus);
  } else {
    print(out);
  }
  return kOk;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string axiom;
  std::string theorem;
  std::string subject;
  std::vector<std::string> f;
  std::string corpus;
  double tol = 1e-9;
  std::size_t workers = 1;
  bool operator_level = false;
};

int cmd_check(const CheckArgs& a) {
  if (a.axiom.empty() == a.theorem.empty()) {
    throw std::invalid_argument("give exactly one of --axiom and --theorem");
  }
  const Corpus corpus = load_corpus(a.corpus, tolerance(a.tol));
  const std::size_t workers = std::max<std::size_t>(a.workers, 1);
  if (!a.theorem.empty()) {
    const auto t = parse_theorem(a.theorem);
    if (!t) throw UnknownName("unknown theorem \"" + a.theorem + "\"");
    if (a.f.size() != 1) throw std::invalid_argument("a theorem suite takes one --f");
    const auto reports = check_theorem_suite(*t, resolve_any(a.f.front()), corpus, workers);
    json out = json::array();
    bool pass = true;
    for (const auto& r : reports) {
      out.push_back(report_to_json(r));
      pass = pass && r.pass;
    }
    print(out);
    return pass ? kOk : kFail;
  }
  const auto axiom = parse_axiom(a.axiom);
  if (!axiom) throw UnknownName("unknown axiom \"" + a.axiom + "\"");
  if (a.subject.empty()) throw std::invalid_argument("--subject is required");
  const CheckSubject subject =
      make_subject(a.subject, a.f, a.operator_level || is_operator_axiom(*axiom));
  const AxiomReport report = check_axiom_parallel(*axiom, subject, corpus, workers);
  print(report_to_json(report));
  return report.pass ? kOk : kFail;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string n;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string profile = "general";
  std::string out = ".";
  bool graph = false;
  bool partition = false;
};

int cmd_gen(const GenArgs& a) {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  const auto dots = a.n.find("..");
  try {
    n_min = std::stoul(a.n.substr(0, dots));
    n_max = dots == std::string::npos ? n_min : std::stoul(a.n.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("--n takes k or a..b");
  }
  if (n_min < 1 || n_min > n_max || n_max > kMaxPlayers) {
    throw std::invalid_argument("--n must lie in 1..16");
  }
  const auto profile = parse_profile(a.profile);
  if (!profile) throw UnknownName("unknown profile \"" + a.profile + "\"");
  std::filesystem::create_directories(a.out);
  json written = json::array();
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const auto players = player_range(n);
    for (std::size_t idx = 0; idx < a.count; ++idx) {
      const std::uint64_t s = game_seed(a.seed, n, idx);
      GameFile file{random_game(players, s, *profile), std::nullopt, std::nullopt};
      if (a.graph) file.graph = random_graph(players, s + 1);
      if (a.partition) file.partition = random_partition(players, s + 2);
      const auto path = std::filesystem::path(a.out) /
                        ("game_s" + std::to_string(a.seed) + "_n" + std::to_string(n) +
                         "_i" + std::to_string(idx) + ".json");
      std::ofstream os(path, std::ios::binary);
      os << render_game_file(file);
      if (!os) throw std::runtime_error("cannot write " + path.string());
      written.push_back(path.filename().string());
    }
  }
  print(json{{"written", written}});
  return kOk;
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
  std::string name;
  std::string game;
  std::string f;
  double tol = 1e-9;
};

int compare(const std::string& name, const PayoffAllocation& oracle,
            const PayoffAllocation& closed, const Tolerance& tol) {
  const double dev = max_abs_deviation(oracle, closed);
  const bool ok = approx_equal(oracle, closed, tol);
  print(json{{"oracle", name},
             {"oracle_result", allocation_to_json(oracle)},
             {"closed_form", allocation_to_json(closed)},
             {"max_abs_deviation", round12(dev)},
             {"within_tolerance", ok}});
  return ok ? kOk : kFail;
}

int cmd_oracle(const OracleArgs& a) {
  const Tolerance tol = tolerance(a.tol);
  const GameFile file = load_game_file(a.game);
  if (a.name == "shapley-perm") {
    return compare(a.name, shapley_permutation_oracle(file.game), shapley(file.game), tol);
  }
  if (a.name == "partition-brute") {
    const double brute = max_partition_value_brute(file.game).value;
    const double dp = max_partition_value(file.game).value;
    const bool ok = tol.equal(brute, dp);
    print(json{{"oracle", a.name},
               {"oracle_result", round12(brute)},
               {"closed_form", round12(dp)},
               {"max_abs_deviation", round12(std::abs(brute - dp))},
               {"within_tolerance", ok}});
    return ok ? kOk : kFail;
  }
  try {
    if (a.name == "fairness-induction") {
      const auto f = resolve_graph_solution(a.f.empty() ? "myerson" : a.f);
      const CommGame x = require_graph(file);
      return compare(a.name, solve_by_fairness_induction(f, x, tol),
                     apply_graph_ess_operator(f, x), tol);
    }
    if (a.name == "rbcc-induction") {
      const auto f = resolve_partition_solution(a.f.empty() ? "ad" : a.f);
      const PartitionGame x = require_partition(file);
      return compare(a.name, solve_by_rbcc_induction(f, x, tol),
                     apply_partition_ess_operator(f, x), tol);
    }
  } catch (const InconsistentSystem& e) {
    std::cerr << "tugx: " << e.what() << "\n";
    return kFail;
  }
  throw UnknownName("unknown oracle \"" + a.name + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative game solutions, extension operators and axiom checks"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Evaluate a solution or an extension operator");
  s->add_option("game", solve.game, "Game file")->required();
  s->add_option("--solution", solve.solution, "Solution name");
  s->add_option("--operator", solve.op, "Extension operator name");
  s->add_option("--f", solve.f, "Benchmark solution for --operator");
  s->add_option("--format", solve.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Check an axiom or a theorem's axiom list");
  c->add_option("--axiom", check.axiom, "Axiom id, e.g. E, OP-EES, f-FDSC");
  c->add_option("--theorem", check.theorem, "T2.1, T3.1, CB.1, T4.1, T4.2, T5.1, T5.2");
  c->add_option("--subject", check.subject, "Solution, or operator for operator axioms");
  c->add_option("--f", check.f, "Benchmark solution(s); repeatable");
  c->add_option("--corpus", check.corpus, "Directory or gen:n=a..b,count=k,seed=s")
      ->required();
  c->add_option("--tol", check.tol, "Absolute and relative tolerance");
  c->add_option("--workers", check.workers, "Worker threads");
  c->add_flag("--operator-level", check.operator_level,
              "Treat --subject as an operator applied to every --f");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write seeded random game files");
  g->add_option("--n", gen.n, "Player count k or range a..b")->required();
  g->add_option("--count", gen.count, "Games per player count");
  g->add_option("--seed", gen.seed, "Seed")->required();
  g->add_option("--profile", gen.profile, "general, positive-singletons or zero-normalized");
  g->add_option("--out", gen.out, "Output directory");
  g->add_flag("--graph", gen.graph, "Attach a random graph");
  g->add_flag("--partition", gen.partition, "Attach a random partition");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Compare an independent computation with the closed form");
  o->add_option("name", oracle.name,
                "shapley-perm, fairness-induction, rbcc-induction or partition-brute")
      ->required();
  o->add_option("game", oracle.game, "Game file")->required();
  o->add_option("--f", oracle.f, "Benchmark (graph or partition solution)");
  o->add_option("--tol", oracle.tol, "Absolute and relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*c) return cmd_check(check);
    if (*g) return cmd_gen(gen);
    if (*o) return cmd_oracle(oracle);
  } catch (const std::exception& e) {
    std::cerr << "tugx: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
