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

// Runs the built tugx binary end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support.hpp"
#include "tugx/io.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("'") + TUGX_BIN + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture_path(const char* name) { return std::string(TUGX_FIXTURES) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("cli: solve") {
  auto r = run("solve " + fixture_path("gameA.json") + " --solution shapley");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["payoffs"] == json::array({4.0, 2.0}));

  r = run("solve " + fixture_path("gameB.json") + " --operator ess --f myerson");
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["surplus"].get<double>() == doctest::Approx(2));
  CHECK(j["extended"]["payoffs"][2].get<double>() == doctest::Approx(2.0 / 3.0));

  r = run("solve " + fixture_path("gameA.json") + " --solution shapley --format table");
  CHECK(r.code == 0);
  CHECK(r.out.find("total=6") != std::string::npos);

  CHECK(run("solve " + fixture_path("gameA.json") + " --solution nope").code == 2);
  CHECK(run("solve " + fixture_path("missing.json") + " --solution shapley").code == 2);
  CHECK(run("solve " + fixture_path("gameA.json") + " --solution myerson").code == 2);
  CHECK(run("solve").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("cli: check exit codes follow the verdict") {
  const std::string dir = std::string(TUGX_FIXTURES);
  auto r = run("check --axiom E --subject shapley --corpus " + dir);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verdict"] == "pass");
  r = run("check --axiom E --subject standalone --corpus " + dir);
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["witness"]["difference"].get<double>() != 0);
  r = run("check --axiom CRBC --subject ee-ad --corpus gen:n=2..4,count=2,seed=1");
  CHECK(r.code == 1);
  r = run("check --theorem T4.1 --f myerson --corpus gen:n=2..4,count=2,seed=1 --workers 3");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).size() == 3);
  CHECK(run("check --axiom NOPE --subject shapley --corpus " + dir).code == 2);
  CHECK(run("check --axiom FA --subject shapley --corpus " + dir).code == 2);
  CHECK(run("check --axiom E --subject shapley --corpus gen:seed=1").code == 2);
  CHECK(run("check --axiom E --subject shapley").code == 2);
}

TEST_CASE("cli: gen is deterministic and readable") {
  const fs::path base = fs::temp_directory_path() / ("tugx_cli_" + std::to_string(::getpid()));
  fs::remove_all(base);
  const auto a = base / "a";
  const auto b = base / "b";
  auto r = run("gen --n 2..3 --count 2 --seed 9 --graph --partition --out " + a.string());
  REQUIRE(r.code == 0);
  REQUIRE(run("gen --n 2..3 --count 2 --seed 9 --graph --partition --out " + b.string()).code == 0);
  const auto written = json::parse(r.out)["written"];
  CHECK(written.size() == 4);
  for (const auto& name : written) {
    const std::string file = name.get<std::string>();
    CHECK(slurp(a / file) == slurp(b / file));
    const auto f = tugx::load_game_file(a / file);
    CHECK(f.graph.has_value());
    CHECK(f.partition.has_value());
  }
  // the files are exactly the games of the matching generated corpus
  const auto corpus = tugx::load_corpus("gen:n=2..3,count=2,seed=9");
  CHECK(tugx::load_game_file(a / "game_s9_n3_i1.json").game == corpus.games[3]);
  CHECK(run("check --axiom E --subject shapley --corpus " + a.string()).code == 0);
  CHECK(run("gen --n 2 --count 1").code == 2);
  CHECK(run("gen --n 0 --count 1 --seed 1 --out " + base.string()).code == 2);
  fs::remove_all(base);
}

TEST_CASE("cli: oracles") {
  auto r = run("oracle shapley-perm " + fixture_path("gameB.json"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["within_tolerance"] == true);
  for (const char* name : {"partition-brute", "fairness-induction", "rbcc-induction"}) {
    INFO(name);
    CHECK(run(std::string("oracle ") + name + " " + fixture_path("gameB.json")).code == 0);
  }
  CHECK(run("oracle fairness-induction " + fixture_path("gameB.json") + " --f eemy").code == 0);
  CHECK(run("oracle fairness-induction " + fixture_path("gameA.json")).code == 2);
  CHECK(run("oracle nope " + fixture_path("gameA.json")).code == 2);
}
