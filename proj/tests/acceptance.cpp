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

// Acceptance run: ten criteria, one PASS/FAIL line each. Exits 1 if any
// criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tugx/io.hpp"

using namespace tugx;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

std::size_t workers() { return std::max(1U, std::thread::hardware_concurrency()); }

bool close(double a, double b, double eps) { return std::abs(a - b) <= eps; }

bool payoffs_are(const PayoffAllocation& p, const std::vector<double>& want, double eps = 1e-9) {
  return oracle::max_abs_diff(want, p.values()) < eps;
}

std::vector<std::pair<std::size_t, std::size_t>> index_links(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [a, b] : g.links()) out.emplace_back(a - 1, b - 1);
  return out;
}

std::vector<std::uint32_t> index_blocks(const Partition& p, const std::vector<PlayerId>& players) {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < p.blocks().size(); ++k) out.push_back(p.block_mask(k, players).mask());
  return out;
}

// --- 1 ---------------------------------------------------------------------

Outcome closed_form_fixtures() {
  Outcome o;
  const Game a = fixture::game_a();
  o.require(payoffs_are(sol::shapley().evaluate(a), {4, 2}), "Sh(gameA)");
  o.require(oracle::max_abs_diff(oracle::shapley(a), std::vector<double>{4, 2}) < 1e-9, "oracle Sh(gameA)");
  o.require(payoffs_are(sol::ess_value().evaluate(a), {4, 2}), "ESS(gameA)");
  o.require(payoffs_are(sol::ps_value().evaluate(a), {6, 0}), "PS(gameA)");

  const Game b = fixture::game_b();
  const Graph g = fixture::graph_12();
  const Partition p = fixture::partition_12_3();
  o.require(payoffs_are(sol::shapley().evaluate(b), {7.0 / 6, 7.0 / 6, 2.0 / 3}), "Sh(gameB)");
  o.require(oracle::max_abs_diff(oracle::shapley(b), std::vector<double>{7.0 / 6, 7.0 / 6, 2.0 / 3}) < 1e-9,
            "oracle Sh(gameB)");
  o.require(payoffs_are(myerson(b, g), {0.5, 0.5, 0}), "My(gameB, {12})");
  o.require(oracle::max_abs_diff(oracle::myerson(b, index_links(g)), std::vector<double>{0.5, 0.5, 0}) < 1e-9,
            "oracle My(gameB, {12})");
  o.require(payoffs_are(eemy(b, g), {7.0 / 6, 7.0 / 6, 2.0 / 3}), "EEMy(gameB, {12})");
  o.require(payoffs_are(sol::ee_ad().evaluate(PartitionGame(b, p)), {7.0 / 6, 7.0 / 6, 2.0 / 3}),
            "AD extension (gameB, {12|3})");
  o.require(payoffs_are(aumann_dreze(PartitionGame(b, p)), {0.5, 0.5, 0}), "AD(gameB, {12|3})");
  o.detail = "gameA and gameB values";
  return o;
}

// --- 2 ---------------------------------------------------------------------

Outcome shapley_vs_orders() {
  Outcome o;
  double worst = 0;
  std::size_t games = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 0; k < 40; ++k) {
      const Game v = random_game(player_range(n), game_seed(20'000, n, k));
      const double d = oracle::max_abs_diff(oracle::shapley(v), sol::shapley().evaluate(v).values());
      worst = std::max(worst, d);
      ++games;
    }
  }
  o.require(games == 200, "expected 200 games");
  o.require(worst < 1e-9, "deviation " + fmt(worst));
  o.detail = std::to_string(games) + " games, max deviation " + fmt(worst);
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome myerson_ce_fa() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n : {3, 4}) {
    Corpus c;
    for (std::size_t k = 0; k < 20; ++k) {
      const Game v = random_game(player_range(n), game_seed(30'000, n, k));
      for (const Graph& g : all_graphs(player_range(n))) c.comm_games.emplace_back(v, g);
    }
    o.require(c.comm_games.size() == 20 * (n == 3 ? 8 : 64), "graph count");
    for (AxiomId id : {AxiomId::CE, AxiomId::FA}) {
      const auto r = check_axiom_parallel(id, GraphSubject{sol::myerson(), {}}, c, workers());
      o.require(r.pass && r.violations == 0, std::string(to_string(id)) + " violated at n=" + std::to_string(n));
      o.require(r.cases_checked > 0, "no cases");
      checked += r.cases_checked;
    }
    // and the values themselves against the independent oracle
    for (const auto& x : c.comm_games) {
      o.require(oracle::max_abs_diff(oracle::myerson(x.game, index_links(x.graph)),
                                     myerson(x.game, x.graph).values()) < 1e-9,
                "Myerson differs from the oracle");
    }
  }
  o.detail = std::to_string(checked) + " CE/FA cases over 1440 (game, graph) pairs";
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome operator_laws() {
  Outcome o;
  const std::vector<std::pair<std::string, SolutionConcept>> fs{{"shapley", sol::shapley()},
                                                                {"stand-alone", sol::stand_alone()},
                                                                {"equal-division", sol::equal_division()},
                                                                {"constant(1.5)", sol::constant(1.5)}};
  const Corpus general = generate_corpus({2, 5, 100, 40'000, GameProfile::general});
  const Corpus positive = generate_corpus({2, 5, 100, 40'001, GameProfile::positive_singletons});
  std::size_t cases = 0;
  for (const auto& [label, f] : fs) {
    for (AxiomId id : {AxiomId::E, AxiomId::OP_ET, AxiomId::OP_EES, AxiomId::f_IES}) {
      const auto r = check_axiom_parallel(id, OperatorSubject{ExtensionOperator::ess(), {f}}, general, workers());
      o.require(r.pass, "ess/" + label + " fails " + std::string(to_string(id)));
      o.require(r.cases_checked > 0, "ess/" + label + " " + std::string(to_string(id)) + " checked nothing");
      cases += r.cases_checked;
    }
    for (AxiomId id : {AxiomId::E, AxiomId::f_IER}) {
      const auto r = check_axiom_parallel(id, OperatorSubject{ExtensionOperator::ps(), {f}}, positive, workers());
      o.require(r.pass, "ps/" + label + " fails " + std::string(to_string(id)));
      o.require(r.cases_checked > 0, "ps/" + label + " " + std::string(to_string(id)) + " checked nothing");
      cases += r.cases_checked;
    }
  }
  o.detail = std::to_string(cases) + " cases, 400 games per corpus";
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome counterexample() {
  Outcome o;
  const Game w = fixture::reference_w();
  const auto sa = sol::stand_alone();
  // f'(v) = (v({1}), 0)
  const auto f_prime = make_componentwise<Game>("v1-then-zero", sa, {{1, {}}});
  Corpus c;
  c.games = {fixture::game_a()};
  for (std::size_t k = 0; k < 30; ++k) c.games.push_back(random_game({1, 2}, game_seed(50'000, 2, k)));
  const OperatorSubject s{ExtensionOperator::example_31(w), {sa, f_prime}};

  const auto ees = check_axiom(AxiomId::OP_EES, s, c);
  o.require(!ees.pass && ees.witness.has_value(), "OP-EES found no witness");
  double diff = 0;
  if (ees.witness) {
    diff = ees.witness->lhs - ees.witness->rhs;
    const double expected = -(w.worth(Coalition::singleton(1))) / 2.0;  // -sum_{k != 1} w({k}) / n
    o.require(diff == expected, "witness difference " + fmt(diff) + " instead of " + fmt(expected));
    o.require(ees.witness->players == std::vector<PlayerId>{1}, "witness player");
    o.require(ees.witness->instances.front().game == fixture::game_a(), "witness game is not gameA");
  }
  const auto wees = check_axiom(AxiomId::OP_WEES, s, c);
  const auto ies = check_axiom(AxiomId::f_IES, s, c);
  o.require(wees.pass, "OP-WEES fails");
  o.require(ies.pass && ies.cases_checked > 0, "f-IES fails or is empty");

  // Two players make the weak hypothesis force f = f', so also run WEES on
  // three players, where it has real content.
  const Game w3 = Game::from_entries({1, 2, 3}, {{{1}, 1.0}, {{2}, 3.0}});
  const Corpus c3 = generate_corpus({3, 3, 30, 50'001, GameProfile::general});
  const auto wees3 = check_axiom(AxiomId::OP_WEES,
                                 OperatorSubject{ExtensionOperator::example_31(w3),
                                                 {sa, sol::shapley(), sol::equal_division()}},
                                 c3);
  o.require(wees3.pass && wees3.cases_checked > 0, "OP-WEES on three players");
  o.detail = "EES difference " + fmt(diff) + "; WEES " + std::to_string(wees.cases_checked) + "+" +
             std::to_string(wees3.cases_checked) + " cases, f-IES " + std::to_string(ies.cases_checked) +
             " cases";
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome uniqueness_oracles() {
  Outcome o;
  double worst = 0;
  std::size_t instances = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Graph> graphs;
    for (const Graph& g : all_graphs(player_range(n))) {
      if (g.link_count() <= 5) graphs.push_back(g);
    }
    const auto parts = all_partitions(player_range(n));
    for (std::size_t k = 0; k < 40; ++k) {
      const Game v = random_game(player_range(n), game_seed(60'000, n, k));
      for (const auto& f : {sol::myerson(), sol::zero_graph()}) {
        for (const Graph& g : graphs) {
          const CommGame x(v, g);
          const double d = max_abs_deviation(solve_by_fairness_induction(f, x), apply_graph_ess_operator(f, x));
          worst = std::max(worst, d);
          ++instances;
        }
      }
      if (k >= 20) continue;
      for (const auto& f : {sol::aumann_dreze(), sol::zero_partition()}) {
        for (const Partition& p : parts) {
          const PartitionGame x(v, p);
          const double d = max_abs_deviation(solve_by_rbcc_induction(f, x), apply_partition_ess_operator(f, x));
          worst = std::max(worst, d);
          ++instances;
        }
      }
    }
  }
  o.require(worst < 1e-8, "deviation " + fmt(worst));
  o.detail = std::to_string(instances) + " instances, max deviation " + fmt(worst);
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome cohesive_dp() {
  Outcome o;
  std::size_t games = 0;
  std::size_t operator_checks = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 0; k < 40; ++k) {
      const Game v = oracle::quarter_game(n, game_seed(70'000, n, k));
      const double dp = max_partition_value(v).value;
      o.require(dp == oracle::best_partition_value(v), "DP differs from enumeration");
      o.require(dp == max_partition_value_brute(v).value, "DP differs from the library enumeration");
      for (const auto& f : {sol::shapley(), sol::stand_alone(), sol::equal_division()}) {
        o.require(close(apply_cohesive_ess(f, v).total(), dp, 1e-9), "cohesive-ess total");
        ++operator_checks;
        try {
          o.require(close(apply_cohesive_ps(f, v).total(), dp, 1e-9), "cohesive-ps total");
          ++operator_checks;
        } catch (const DomainViolation&) {
          // zero benchmark total
        }
      }
      ++games;
    }
  }
  o.require(games == 200, "expected 200 games");
  o.detail = std::to_string(games) + " games, " + std::to_string(operator_checks) + " operator totals";
  return o;
}

// --- 8 ---------------------------------------------------------------------

Outcome negative_witnesses() {
  Outcome o;
  const Corpus c = generate_corpus({2, 4, 10, 80'000, GameProfile::general});
  const auto crbc = check_axiom_parallel(AxiomId::CRBC, PartitionSubject{sol::ee_ad(), {}}, c, workers());
  o.require(!crbc.pass && crbc.witness.has_value(), "no CRBC violation for the extended AD value");
  const auto e = check_axiom_parallel(AxiomId::E, GraphSubject{sol::myerson(), {}}, c, workers());
  o.require(!e.pass && e.witness.has_value(), "no efficiency violation for Myerson");
  if (e.witness) {
    const auto& inst = e.witness->instances.front();
    o.require(inst.graph && components(*inst.graph, inst.game.grand()).size() > 1,
              "the efficiency witness is connected");
    o.require(!Tolerance{}.equal(myerson(inst.game, *inst.graph).total(), inst.game.grand_worth()),
              "the efficiency witness does not reproduce");
  }
  o.detail = "CRBC: " + std::to_string(crbc.violations) + "/" + std::to_string(crbc.cases_checked) +
             " violations; E: " + std::to_string(e.violations) + "/" + std::to_string(e.cases_checked);
  return o;
}

// --- 9 ---------------------------------------------------------------------

Outcome rbcc_preservation() {
  Outcome o;
  const auto ad = sol::aumann_dreze();
  const auto extended = sol::partition_ess(ad);
  std::size_t instances = 0;
  std::size_t zero_cycles = 0;
  std::size_t nonzero = 0;
  auto check_instance = [&](const PartitionGame& y) {
    ++instances;
    for (const Block& block : y.partition.blocks()) {
      if (block.size() < 2) continue;
      std::vector<PlayerId> order = block;
      do {
        if (std::abs(rbcc_cycle_residual(ad, y, order)) > 1e-8) {
          ++nonzero;
          continue;
        }
        ++zero_cycles;
        const double r = rbcc_cycle_residual(extended, y, order);
        o.require(std::abs(r) <= 1e-8, "residual " + fmt(r) + " for the extended value");
      } while (std::next_permutation(order.begin(), order.end()));
    }
  };
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto parts = all_partitions(player_range(n));
    for (std::size_t k = 0; k < 10; ++k) {
      const Game v = random_game(player_range(n), game_seed(90'000, n, k));
      for (const Partition& p : parts) {
        const PartitionGame x(v, p);
        check_instance(x);
        for (PlayerId i : x.game.player_list()) {
          if (x.game.size() > 1) check_instance(remove_player(x, i));
          check_instance(extend_with_null(x, i, fresh_player(x)));
        }
      }
    }
  }
  o.require(zero_cycles > 0, "no balanced cycles to test");
  o.require(nonzero == 0, std::to_string(nonzero) + " unbalanced cycles for AD itself");
  o.detail = std::to_string(instances) + " instances, " + std::to_string(zero_cycles) + " balanced cycles";
  return o;
}

// --- 10 --------------------------------------------------------------------

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + TUGX_BIN + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_contract() {
  Outcome o;
  const fs::path fixtures{TUGX_FIXTURES};
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(fixtures)) {
    if (e.path().extension() != ".json") continue;
    const GameFile f = load_game_file(e.path());
    const std::string text = render_game_file(f);
    o.require(parse_game_file(text) == f, "round trip of " + e.path().filename().string());
    o.require(render_game_file(parse_game_file(text)) == text, "render is not stable");
    ++files;
  }
  o.require(files >= 4, "fixture files missing");

  const std::string a = (fixtures / "gameA.json").string();
  o.require(run_cli("solve " + a + " --solution shapley").code == 0, "solve exit 0");
  o.require(run_cli("check --axiom E --subject shapley --corpus " + fixtures.string()).code == 0, "check pass exit 0");
  o.require(run_cli("check --axiom E --subject standalone --corpus " + fixtures.string()).code == 1,
            "check fail exit 1");
  o.require(run_cli("oracle shapley-perm " + a).code == 0, "oracle exit 0");
  o.require(run_cli("solve " + a + " --solution no-such-value").code == 2, "unknown name exit 2");
  o.require(run_cli("solve " + (fixtures / "absent.json").string() + " --solution shapley").code == 2,
            "missing file exit 2");
  o.require(run_cli("check --axiom FA --subject shapley --corpus " + fixtures.string()).code == 2,
            "incompatible subject exit 2");
  o.require(run_cli("bogus").code == 2, "bad usage exit 2");

  const fs::path base = fs::temp_directory_path() / ("tugx_accept_" + std::to_string(::getpid()));
  fs::remove_all(base);
  const std::string common = "gen --n 2..5 --count 3 --seed 1234 --graph --partition --out ";
  const Run first = run_cli(common + (base / "one").string());
  const Run second = run_cli(common + (base / "two").string());
  o.require(first.code == 0 && second.code == 0, "gen exit 0");
  o.require(first.out == second.out, "gen listings differ");
  std::size_t compared = 0;
  for (const auto& e : fs::directory_iterator(base / "one")) {
    const auto twin = base / "two" / e.path().filename();
    o.require(fs::exists(twin) && slurp(e.path()) == slurp(twin), "gen output differs: " +
                                                                      e.path().filename().string());
    ++compared;
  }
  o.require(compared == 12, "expected 12 generated files");
  fs::remove_all(base);
  o.detail = std::to_string(files) + " fixtures round-tripped, " + std::to_string(compared) +
             " generated files byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form fixtures", closed_form_fixtures},
      {"Shapley formula vs permutation oracle", shapley_vs_orders},
      {"Myerson CE and FA, all graphs n=3,4", myerson_ce_fa},
      {"operator laws for ess and ps", operator_laws},
      {"corrected-operator counterexample", counterexample},
      {"induction solvers vs closed forms", uniqueness_oracles},
      {"cohesive DP vs enumeration", cohesive_dp},
      {"negative witnesses", negative_witnesses},
      {"RBCC preservation", rbcc_preservation},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << (k + 1) << (k + 1 < 10 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[k].first << " (" << fmt(secs) << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n";
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
