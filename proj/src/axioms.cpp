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

#include "tugx/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

namespace tugx {

// --- Names -----------------------------------------------------------------

namespace {

constexpr std::array<std::pair<AxiomId, std::string_view>, 21> kAxiomNames = {{
    {AxiomId::E, "E"},
    {AxiomId::CE, "CE"},
    {AxiomId::SYM, "SYM"},
    {AxiomId::ET, "ET"},
    {AxiomId::f_IES, "f-IES"},
    {AxiomId::f_IER, "f-IER"},
    {AxiomId::OP_ET, "OP-ET"},
    {AxiomId::OP_EES, "OP-EES"},
    {AxiomId::OP_WEES, "OP-WEES"},
    {AxiomId::FA, "FA"},
    {AxiomId::FA_v, "FA-v"},
    {AxiomId::FDS, "FDS"},
    {AxiomId::f_FDS, "f-FDS"},
    {AxiomId::CRBC, "CRBC"},
    {AxiomId::RBCC, "RBCC"},
    {AxiomId::RBCC_v, "RBCC-v"},
    {AxiomId::f_EGN, "f-EGN"},
    {AxiomId::f_FDSC, "f-FDSC"},
    {AxiomId::CoE, "CoE"},
    {AxiomId::f_IECoS, "f-IECoS"},
    {AxiomId::f_IECoR, "f-IECoR"},
}};

constexpr std::array<std::pair<Theorem, std::string_view>, 7> kTheoremNames = {{
    {Theorem::T2_1, "T2.1"},
    {Theorem::T3_1, "T3.1"},
    {Theorem::CB_1, "CB.1"},
    {Theorem::T4_1, "T4.1"},
    {Theorem::T4_2, "T4.2"},
    {Theorem::T5_1, "T5.1"},
    {Theorem::T5_2, "T5.2"},
}};

}  // namespace

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> ids = [] {
    std::vector<AxiomId> out;
    for (const auto& [id, name] : kAxiomNames) out.push_back(id);
    return out;
  }();
  return ids;
}

std::optional<AxiomId> parse_axiom(std::string_view name) {
  for (const auto& [id, text] : kAxiomNames) {
    if (text == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(AxiomId id) {
  for (const auto& [key, text] : kAxiomNames) {
    if (key == id) return text;
  }
  return "?";
}

bool is_operator_axiom(AxiomId id) {
  return id == AxiomId::OP_ET || id == AxiomId::OP_EES || id == AxiomId::OP_WEES;
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (const auto& [id, text] : kTheoremNames) {
    if (text == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Theorem t) {
  for (const auto& [key, text] : kTheoremNames) {
    if (key == t) return text;
  }
  return "?";
}

namespace {

template <class S>
std::string join_names(const std::vector<S>& solutions) {
  std::string out;
  for (const auto& f : solutions) {
    if (!out.empty()) out += ", ";
    out += f.name();
  }
  return out;
}

}  // namespace

std::string subject_name(const CheckSubject& subject) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OperatorSubject>) {
          return s.op.name() + " on {" + join_names(s.solutions) + "}";
        } else if constexpr (std::is_same_v<T, GraphOperatorSubject> ||
                             std::is_same_v<T, PartitionOperatorSubject>) {
          return s.name + " on {" + join_names(s.solutions) + "}";
        } else {
          return s.phi.name();
        }
      },
      subject);
}

GraphOperatorSubject graph_ess_operator(std::vector<GraphSolutionConcept> solutions) {
  return {"ess", [](GraphSolutionConcept f) { return sol::graph_ess(std::move(f)); },
          std::move(solutions)};
}

PartitionOperatorSubject partition_ess_operator(
    std::vector<PartitionSolutionConcept> solutions) {
  return {"ess",
          [](PartitionSolutionConcept f) { return sol::partition_ess(std::move(f)); },
          std::move(solutions)};
}

// --- Corpora ---------------------------------------------------------------

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix(a ^ splitmix(b));
}

}  // namespace

std::uint64_t game_seed(std::uint64_t corpus_seed, std::size_t n, std::size_t idx) {
  return mix(corpus_seed, (static_cast<std::uint64_t>(n) << 32) | idx);
}

Graph random_graph(const std::vector<PlayerId>& players, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Link> links;
  for (std::size_t a = 0; a < players.size(); ++a) {
    for (std::size_t b = a + 1; b < players.size(); ++b) {
      if (rng() & 1U) links.emplace_back(players[a], players[b]);
    }
  }
  return Graph(players, std::move(links));
}

Partition random_partition(const std::vector<PlayerId>& players,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Block> blocks;
  for (PlayerId id : players) {
    const std::size_t k = static_cast<std::size_t>(rng() % (blocks.size() + 1));
    if (k == blocks.size()) {
      blocks.push_back({id});
    } else {
      blocks[k].push_back(id);
    }
  }
  return Partition(std::move(blocks));
}

Corpus generate_corpus(const CorpusSpec& spec) {
  if (spec.n_min < 1 || spec.n_min > spec.n_max || spec.n_max > kMaxPlayers) {
    throw std::invalid_argument("player counts must satisfy 1 <= n_min <= n_max <= 16");
  }
  Corpus c;
  c.seed = spec.seed;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    const auto players = player_range(n);
    const std::vector<Graph> graphs =
        n <= 4 ? all_graphs(players) : std::vector<Graph>{};
    const std::vector<Partition> partitions =
        n <= 4 ? all_partitions(players) : std::vector<Partition>{};
    for (std::size_t idx = 0; idx < spec.count; ++idx) {
      const std::uint64_t s = game_seed(spec.seed, n, idx);
      Game v = random_game(players, s, spec.profile);
      if (n <= 4) {
        for (const Graph& g : graphs) c.comm_games.emplace_back(v, g);
        for (const Partition& p : partitions) c.partition_games.emplace_back(v, p);
      } else {
        c.comm_games.emplace_back(v, random_graph(players, mix(s, 1)));
        c.partition_games.emplace_back(v, random_partition(players, mix(s, 2)));
      }
      c.games.push_back(std::move(v));
    }
  }
  return c;
}

// --- Shared machinery ------------------------------------------------------

namespace {

class Sink {
 public:
  Sink(AxiomReport& report, const Tolerance& tol) : report_(report), tol_(tol) {}

  const Tolerance& tol() const { return tol_; }

  template <class MakeWitness>
  void expect_equal(double lhs, double rhs, MakeWitness&& make) {
    ++report_.cases_checked;
    if (tol_.equal(lhs, rhs)) return;
    ++report_.violations;
    report_.pass = false;
    if (!report_.witness) {
      Witness w = make();
      w.lhs = lhs;
      w.rhs = rhs;
      report_.witness = std::move(w);
    }
  }

 private:
  AxiomReport& report_;
  Tolerance tol_;
};

WitnessInstance instance(std::string role, const Game& v) {
  return {std::move(role), v, std::nullopt, std::nullopt};
}
WitnessInstance instance(std::string role, const CommGame& x) {
  return {std::move(role), x.game, x.graph, std::nullopt};
}
WitnessInstance instance(std::string role, const PartitionGame& x) {
  return {std::move(role), x.game, std::nullopt, x.partition};
}

template <class I>
std::optional<PayoffAllocation> try_eval(const BasicSolution<I>& f, const I& x) {
  try {
    return f.evaluate(x);
  } catch (const DomainViolation&) {
    return std::nullopt;
  }
}

template <class I>
const std::vector<I>& entries(const Corpus& c);
template <>
const std::vector<Game>& entries<Game>(const Corpus& c) {
  return c.games;
}
template <>
const std::vector<CommGame>& entries<CommGame>(const Corpus& c) {
  return c.comm_games;
}
template <>
const std::vector<PartitionGame>& entries<PartitionGame>(const Corpus& c) {
  return c.partition_games;
}

template <class I>
const std::vector<I>& require_entries(const Corpus& c) {
  const auto& list = entries<I>(c);
  if (list.empty()) {
    if constexpr (std::is_same_v<I, CommGame>) {
      throw MissingStructure("the corpus has no games with a graph");
    } else if constexpr (std::is_same_v<I, PartitionGame>) {
      throw MissingStructure("the corpus has no games with a partition");
    } else {
      throw MissingStructure("the corpus has no games");
    }
  }
  return list;
}

std::mt19937_64 case_rng(const Corpus& c, std::size_t k, std::uint64_t salt) {
  return std::mt19937_64(mix(mix(c.seed, c.index_base + k), salt));
}

std::string num(double x) { return format_real(x); }

std::string player_text(PlayerId i) { return std::to_string(i); }

// Blocks of the structure: graph components or partition blocks.
std::vector<Coalition> blocks_of(const CommGame& x) {
  return components(x.graph, x.game.grand());
}
std::vector<Coalition> blocks_of(const PartitionGame& x) {
  std::vector<Coalition> out;
  for (std::size_t b = 0; b < x.partition.blocks().size(); ++b) {
    out.push_back(x.partition.block_mask(b, x.game.player_list()));
  }
  return out;
}

bool same_group(const Game& a, const Game& b) {
  return a.player_list() == b.player_list();
}
bool same_group(const CommGame& a, const CommGame& b) {
  return a.graph == b.graph;
}
bool same_group(const PartitionGame& a, const PartitionGame& b) {
  return a.partition == b.partition;
}

template <class I>
std::vector<std::vector<std::size_t>> groups_of(const std::vector<I>& list) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    bool placed = false;
    for (auto& g : out) {
      if (same_group(list[g.front()], list[k])) {
        g.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({k});
  }
  return out;
}

// --- Efficiency-type axioms ------------------------------------------------

template <class I>
void check_efficiency(const BasicSolution<I>& phi, const Corpus& c, Sink& sink) {
  for (const I& x : require_entries<I>(c)) {
    const auto p = try_eval(phi, x);
    if (!p) continue;
    const Game& v = underlying_game(x);
    sink.expect_equal(p->total(), v.grand_worth(), [&] {
      return Witness{{instance("v", x)}, v.player_list(), 0, 0,
                     "sum of payoffs (lhs) against v(N) (rhs)"};
    });
  }
}

void check_cohesive_efficiency(const SolutionConcept& phi, const Corpus& c,
                               Sink& sink) {
  for (const Game& v : require_entries<Game>(c)) {
    const auto p = try_eval(phi, v);
    if (!p) continue;
    sink.expect_equal(p->total(), max_partition_value(v).value, [&] {
      return Witness{{instance("v", v)}, v.player_list(), 0, 0,
                     "sum of payoffs (lhs) against the best partition total (rhs)"};
    });
  }
}

template <class I>
void check_component_efficiency(const BasicSolution<I>& phi, const Corpus& c,
                                Sink& sink) {
  for (const I& x : require_entries<I>(c)) {
    const auto p = try_eval(phi, x);
    if (!p) continue;
    const Game& v = underlying_game(x);
    for (Coalition b : blocks_of(x)) {
      sink.expect_equal(p->sum_over(b), v(b), [&] {
        return Witness{{instance("v", x)}, v.members(b), 0, 0,
                       "sum of payoffs over the component (lhs) against its "
                       "worth (rhs)"};
      });
    }
  }
}

// Per-capita surplus of every block against that of the first block, the
// surplus measured against v(C) or against a benchmark.
template <class I>
void check_fair_surplus(const BasicSolution<I>& phi,
                        const std::optional<BasicSolution<I>>& bench,
                        const Corpus& c, Sink& sink) {
  for (const I& x : require_entries<I>(c)) {
    const auto p = try_eval(phi, x);
    if (!p) continue;
    std::optional<PayoffAllocation> fx;
    if (bench) {
      fx = try_eval(*bench, x);
      if (!fx) continue;
    }
    const Game& v = underlying_game(x);
    const auto blocks = blocks_of(x);
    auto per_capita = [&](Coalition b) {
      const double base = fx ? fx->sum_over(b) : v(b);
      return (p->sum_over(b) - base) / static_cast<double>(b.size());
    };
    const double first = per_capita(blocks.front());
    for (std::size_t k = 1; k < blocks.size(); ++k) {
      sink.expect_equal(first, per_capita(blocks[k]), [&] {
        std::vector<PlayerId> players = v.members(blocks.front());
        const auto other = v.members(blocks[k]);
        players.insert(players.end(), other.begin(), other.end());
        return Witness{{instance("v", x)}, players, 0, 0,
                       std::string("per-capita surplus over ") +
                           (fx ? "the benchmark" : "the component worth") +
                           ": first component (lhs) against component of player " +
                           player_text(other.front()) + " (rhs)"};
      });
    }
  }
}

// --- Symmetry-type axioms --------------------------------------------------

void check_symmetry(const SolutionConcept& phi, const Corpus& c, Sink& sink) {
  const auto& list = require_entries<Game>(c);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Game& v = list[k];
    const auto p = try_eval(phi, v);
    if (!p) continue;
    const auto& players = v.player_list();
    std::vector<Permutation> perms;
    for (std::size_t a = 0; a < players.size(); ++a) {
      for (std::size_t b = a + 1; b < players.size(); ++b) {
        perms.push_back(Permutation::transposition(players, players[a], players[b]));
      }
    }
    auto rng = case_rng(c, k, 0x5157);
    std::vector<PlayerId> image = players;
    for (std::size_t a = image.size(); a > 1; --a) {
      std::swap(image[a - 1], image[static_cast<std::size_t>(rng() % a)]);
    }
    perms.emplace_back(players, image);

    for (const Permutation& pi : perms) {
      const Game w = permute_game(v, pi);
      const auto q = try_eval(phi, w);
      if (!q) continue;
      for (PlayerId i : players) {
        sink.expect_equal(p->at(i), q->at(pi(i)), [&] {
          std::string detail = "phi_i(v) (lhs) against phi_pi(i)(pi v) (rhs), pi =";
          for (PlayerId j : players) {
            detail += " " + player_text(j) + "->" + player_text(pi(j));
          }
          return Witness{{instance("v", v), instance("pi v", w)}, {i, pi(i)}, 0, 0,
                         detail};
        });
      }
    }
  }
}

void check_equal_treatment(const SolutionConcept& phi, const Corpus& c,
                           Sink& sink) {
  for (const Game& v : require_entries<Game>(c)) {
    const auto& players = v.player_list();
    std::vector<Game> games{v};
    for (std::size_t a = 0; a < players.size(); ++a) {
      for (std::size_t b = a + 1; b < players.size(); ++b) {
        const auto tau = Permutation::transposition(players, players[a], players[b]);
        games.push_back(0.5 * (v + permute_game(v, tau)));
      }
    }
    for (const Game& u : games) {
      std::optional<PayoffAllocation> p;
      bool evaluated = false;
      for (std::size_t a = 0; a < players.size(); ++a) {
        for (std::size_t b = a + 1; b < players.size(); ++b) {
          if (!are_symmetric(u, players[a], players[b], sink.tol())) continue;
          if (!evaluated) {
            p = try_eval(phi, u);
            evaluated = true;
          }
          if (!p) continue;
          sink.expect_equal((*p)[a], (*p)[b], [&] {
            return Witness{{instance("v", u)}, {players[a], players[b]}, 0, 0,
                           "payoffs of two symmetric players"};
          });
        }
      }
    }
  }
}

// --- Individualistic axioms --------------------------------------------------

enum class Situation { surplus, ratio, cohesive_surplus, cohesive_ratio };

bool is_ratio(Situation s) {
  return s == Situation::ratio || s == Situation::cohesive_ratio;
}
bool is_cohesive(Situation s) {
  return s == Situation::cohesive_surplus || s == Situation::cohesive_ratio;
}

const char* situation_text(Situation s) {
  switch (s) {
    case Situation::surplus:
      return "surplus";
    case Situation::ratio:
      return "ratio";
    case Situation::cohesive_surplus:
      return "cohesive surplus";
    case Situation::cohesive_ratio:
      return "cohesive ratio";
  }
  return "?";
}

// The quantity the axiom's first hypothesis compares; nullopt when undefined.
std::optional<double> situation_value(Situation s, const Game& v,
                                      const PayoffAllocation& fv) {
  const double top = is_cohesive(s) ? max_partition_value(v).value : v.grand_worth();
  if (!is_ratio(s)) return top - fv.total();
  if (!(fv.total() > 0.0) || !v.is_positive()) return std::nullopt;
  return top / fv.total();
}

Game perturbation(const std::vector<PlayerId>& players, std::mt19937_64& rng) {
  const std::size_t count = std::size_t{1} << players.size();
  std::vector<double> worths(count, 0.0);
  for (std::size_t m = 1; m < count; ++m) {
    worths[m] = static_cast<double>(static_cast<int>(rng() % 9) - 4) / 8.0;
  }
  return Game(players, std::move(worths));
}

// Solves [p1 q1; p2 q2] (x, y) = (r1, r2); singular systems get the solution
// of one nonzero row with the other unknown at 0, left to the caller to
// verify.
std::optional<std::pair<double, double>> solve2(double p1, double q1, double r1,
                                                double p2, double q2, double r2) {
  const double scale =
      std::max({std::abs(p1), std::abs(q1), std::abs(p2), std::abs(q2), 1.0});
  const double eps = 1e-12 * scale;
  const double det = p1 * q2 - p2 * q1;
  if (std::abs(det) > eps * scale) {
    return std::pair{(r1 * q2 - r2 * q1) / det, (p1 * r2 - p2 * r1) / det};
  }
  for (auto [p, q, r] : {std::array{p1, q1, r1}, std::array{p2, q2, r2}}) {
    if (std::abs(p) > eps || std::abs(q) > eps) {
      if (std::abs(p) >= std::abs(q)) return std::pair{r / p, 0.0};
      return std::pair{0.0, r / q};
    }
  }
  return std::pair{0.0, 0.0};
}

// A game w != v with f_i(w) = f_i(v) and the same situational quantity,
// searched in the affine family w = v + a + x b + y c. Exact for benchmarks
// affine in the game; other benchmarks only yield pairs that pass the
// check at the end.
std::optional<Game> hypothesis_partner(Situation s, const SolutionConcept& f,
                                       const Game& v, const PayoffAllocation& fv,
                                       double target, std::size_t i,
                                       std::mt19937_64& rng,
                                       const Tolerance& tol) {
  const auto& players = v.player_list();
  const Game a = perturbation(players, rng);
  const Game b = perturbation(players, rng);
  const Game c = perturbation(players, rng);

  std::vector<Coalition> best;
  double best_value = 0.0;
  if (is_cohesive(s)) {
    const auto opt = max_partition_value(v);
    best = opt.partition;
    best_value = opt.value;
  }
  auto linear = [&](const Game& w) -> std::optional<std::array<double, 2>> {
    const auto fw = try_eval(f, w);
    if (!fw) return std::nullopt;
    double top = w.grand_worth();
    double base = v.grand_worth();
    if (is_cohesive(s)) {
      base = best_value;
      top = best_value;
      for (Coalition t : best) top += w(t) - v(t);
    }
    const double l1 = (*fw)[i] - fv[i];
    const double l2 = is_ratio(s) ? top * fv.total() - base * fw->total()
                                  : (top - fw->total()) - (base - fv.total());
    return std::array{l1, l2};
  };

  const Game va = v + a;
  const auto l0 = linear(va);
  const auto lb = linear(va + b);
  const auto lc = linear(va + c);
  if (!l0 || !lb || !lc) return std::nullopt;
  const auto xy = solve2((*lb)[0] - (*l0)[0], (*lc)[0] - (*l0)[0], -(*l0)[0],
                         (*lb)[1] - (*l0)[1], (*lc)[1] - (*l0)[1], -(*l0)[1]);
  if (!xy) return std::nullopt;
  const Game w = va + xy->first * b + xy->second * c;

  bool moved = false;
  for (std::size_t m = 1; m < w.worths().size(); ++m) {
    if (!tol.equal(w.worths()[m], v.worths()[m])) moved = true;
  }
  if (!moved) return std::nullopt;
  const auto fw = try_eval(f, w);
  if (!fw || !tol.equal((*fw)[i], fv[i])) return std::nullopt;
  const auto sw = situation_value(s, w, *fw);
  if (!sw || !tol.equal(*sw, target)) return std::nullopt;
  return w;
}

void check_individualistic(Situation s, const SolutionConcept& phi,
                           const SolutionConcept& f, const Corpus& c,
                           Sink& sink) {
  const auto& list = require_entries<Game>(c);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Game& v = list[k];
    const auto fv = try_eval(f, v);
    const auto pv = try_eval(phi, v);
    if (!fv || !pv) continue;
    const auto target = situation_value(s, v, *fv);
    if (!target) continue;

    auto compare = [&](const Game& w, std::size_t i, const char* how) {
      const auto pw = try_eval(phi, w);
      if (!pw) return;
      const auto fw = f.evaluate(w);
      sink.expect_equal((*pv)[i], (*pw)[i], [&] {
        return Witness{{instance("v", v), instance("w", w)},
                       {v.player(i)},
                       0,
                       0,
                       std::string(how) + " pair: f_i(v) = " + num((*fv)[i]) +
                           ", f_i(w) = " + num(fw[i]) + ", " + situation_text(s) +
                           " = " + num(*target) +
                           "; phi_i(v) (lhs) against phi_i(w) (rhs)"};
      });
    };

    auto rng = case_rng(c, k, 0x1E5);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t t = 0; t < c.pairs_per_player; ++t) {
        const auto w = hypothesis_partner(s, f, v, *fv, *target, i, rng, sink.tol());
        if (w) compare(*w, i, "constructed");
      }
    }
    if (is_ratio(s)) {
      // Scaled games keep the ratio for homogeneous benchmarks; the
      // individual hypothesis then holds only where f_i vanishes.
      for (double lambda : {2.0, 0.5}) {
        const Game w = lambda * v;
        const auto fw = try_eval(f, w);
        if (!fw) continue;
        const auto sw = situation_value(s, w, *fw);
        if (!sw || !sink.tol().equal(*sw, *target)) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (sink.tol().equal((*fw)[i], (*fv)[i])) compare(w, i, "scaled");
        }
      }
    }
  }
}

// --- Fairness --------------------------------------------------------------

// Calls on_case(h, link, lhs, rhs) for every link of every subgraph h of
// x.graph (or of x.graph alone when `all_subgraphs` is false).
template <class OnCase>
void fairness_cases(const GraphSolutionConcept& phi, const CommGame& x,
                    bool all_subgraphs, OnCase&& on_case) {
  const std::size_t links = x.graph.link_count();
  if (links > 12) {
    throw std::invalid_argument("fairness checks are limited to 12 links");
  }
  const std::uint32_t full = static_cast<std::uint32_t>((1U << links) - 1);
  std::vector<std::optional<std::optional<PayoffAllocation>>> memo(
      std::size_t{1} << links);
  auto at = [&](std::uint32_t mask) -> const std::optional<PayoffAllocation>& {
    auto& slot = memo[mask];
    if (!slot) slot = try_eval(phi, CommGame(x.game, x.graph.sublinks(mask)));
    return *slot;
  };
  for (std::uint32_t mask = all_subgraphs ? 0 : full; mask <= full; ++mask) {
    const auto& here = at(mask);
    if (!here) continue;
    for (std::size_t e = 0; e < links; ++e) {
      if (!((mask >> e) & 1U)) continue;
      const auto& cut = at(mask & ~(1U << e));
      if (!cut) continue;
      const auto [i, j] = x.graph.links()[e];
      on_case(mask, x.graph.links()[e], here->at(i) - cut->at(i),
              here->at(j) - cut->at(j));
    }
  }
}

Witness fairness_witness(const CommGame& x, std::uint32_t mask, Link link,
                         const std::string& who) {
  const Graph h = x.graph.sublinks(mask);
  return Witness{{instance("(v, h)", CommGame(x.game, h)),
                  instance("(v, h - ij)", CommGame(x.game, h.without(link.first, link.second)))},
                 {link.first, link.second},
                 0,
                 0,
                 "change of " + who + "_i (lhs) and " + who +
                     "_j (rhs) when link " + player_text(link.first) + "-" +
                     player_text(link.second) + " is cut"};
}

void check_fairness(const GraphSolutionConcept& phi, const Corpus& c,
                    bool all_subgraphs, Sink& sink) {
  for (const CommGame& x : require_entries<CommGame>(c)) {
    fairness_cases(phi, x, all_subgraphs,
                   [&](std::uint32_t mask, Link link, double lhs, double rhs) {
                     sink.expect_equal(lhs, rhs, [&] {
                       return fairness_witness(x, mask, link, "phi");
                     });
                   });
  }
}

// FA-v preservation: wherever f is fair at v on every subgraph, op(f) must
// be too.
void check_fairness_preservation(const GraphSolutionConcept& f,
                                 const GraphSolutionConcept& image,
                                 const Corpus& c, Sink& sink) {
  for (const CommGame& x : require_entries<CommGame>(c)) {
    bool fair = true;
    fairness_cases(f, x, true, [&](std::uint32_t, Link, double lhs, double rhs) {
      if (!sink.tol().equal(lhs, rhs)) fair = false;
    });
    if (!fair) continue;
    fairness_cases(image, x, true,
                   [&](std::uint32_t mask, Link link, double lhs, double rhs) {
                     sink.expect_equal(lhs, rhs, [&] {
                       Witness w = fairness_witness(x, mask, link, image.name());
                       w.detail += "; " + f.name() + " is fair on every subgraph";
                       return w;
                     });
                   });
  }
}

// --- Coalition structures --------------------------------------------------

std::vector<std::vector<PlayerId>> block_orders(const PartitionGame& x,
                                                std::mt19937_64& rng,
                                                std::size_t random_orders) {
  std::vector<std::vector<PlayerId>> out;
  for (const Block& b : x.partition.blocks()) {
    if (b.size() < 3) continue;
    out.push_back(b);
    for (std::size_t t = 0; t < random_orders; ++t) {
      std::vector<PlayerId> order = b;
      for (std::size_t a = order.size(); a > 1; --a) {
        std::swap(order[a - 1], order[static_cast<std::size_t>(rng() % a)]);
      }
      out.push_back(std::move(order));
    }
  }
  return out;
}

// x, x without each player, and x with a null player joined to each block.
std::vector<std::pair<std::string, PartitionGame>> rbcc_closure(
    const PartitionGame& x) {
  std::vector<std::pair<std::string, PartitionGame>> out;
  out.emplace_back("game", x);
  if (x.game.size() >= 2) {
    for (PlayerId i : x.game.player_list()) {
      out.emplace_back("without " + player_text(i), remove_player(x, i));
    }
  }
  const PlayerId fresh = fresh_player(x);
  for (const Block& b : x.partition.blocks()) {
    out.emplace_back("null " + player_text(fresh) + " joined to block of " +
                         player_text(b.front()),
                     extend_with_null(x, b.front(), fresh));
  }
  return out;
}

std::optional<double> try_residual(const PartitionSolutionConcept& f,
                                   const PartitionGame& x,
                                   const std::vector<PlayerId>& order) {
  try {
    return rbcc_cycle_residual(f, x, order);
  } catch (const DomainViolation&) {
    return std::nullopt;
  }
}

Witness cycle_witness(const PartitionGame& x, const std::string& role,
                      const std::vector<PlayerId>& order, const std::string& who) {
  std::string text;
  for (PlayerId i : order) text += (text.empty() ? "" : ",") + player_text(i);
  return Witness{{instance(role, x)}, order, 0, 0,
                 "cycle residual of " + who + " (lhs) for the order (" + text +
                     ") against 0 (rhs)"};
}

void check_rbcc(const PartitionSolutionConcept& phi, const Corpus& c,
                Sink& sink) {
  const auto& list = require_entries<PartitionGame>(c);
  for (std::size_t k = 0; k < list.size(); ++k) {
    auto rng = case_rng(c, k, 0xBCC);
    for (const auto& [role, y] : rbcc_closure(list[k])) {
      for (const auto& order : block_orders(y, rng, c.random_orders)) {
        const auto r = try_residual(phi, y, order);
        if (!r) continue;
        sink.expect_equal(*r, 0.0, [&] { return cycle_witness(y, role, order, phi.name()); });
      }
    }
  }
}

void check_rbcc_at_v(const PartitionSolutionConcept& phi, const Corpus& c,
                     Sink& sink) {
  const auto& list = require_entries<PartitionGame>(c);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Game& v = list[k].game;
    if (v.size() > 7) {
      throw std::invalid_argument("RBCC-v enumerates partitions only up to 7 players");
    }
    auto rng = case_rng(c, k, 0xBCC);
    for (const Partition& p : all_partitions(v.player_list())) {
      const PartitionGame y(v, p);
      for (const auto& order : block_orders(y, rng, c.random_orders)) {
        const auto r = try_residual(phi, y, order);
        if (!r) continue;
        sink.expect_equal(*r, 0.0, [&] { return cycle_witness(y, "game", order, phi.name()); });
      }
    }
  }
}

// RBCC-v preservation on the removal/extension closure: wherever f's cycle
// residual vanishes, the image's must too.
void check_rbcc_preservation(const PartitionSolutionConcept& f,
                             const PartitionSolutionConcept& image,
                             const Corpus& c, Sink& sink) {
  const auto& list = require_entries<PartitionGame>(c);
  for (std::size_t k = 0; k < list.size(); ++k) {
    auto rng = case_rng(c, k, 0xBCC);
    for (const auto& [role, y] : rbcc_closure(list[k])) {
      for (const auto& order : block_orders(y, rng, c.random_orders)) {
        const auto rf = try_residual(f, y, order);
        if (!rf || !sink.tol().is_zero(*rf)) continue;
        const auto r = try_residual(image, y, order);
        if (!r) continue;
        sink.expect_equal(*r, 0.0, [&] {
          Witness w = cycle_witness(y, role, order, image.name());
          w.detail += "; the residual of " + f.name() + " is 0";
          return w;
        });
      }
    }
  }
}

void check_crbc(const PartitionSolutionConcept& phi, const Corpus& c, Sink& sink) {
  for (const PartitionGame& x : require_entries<PartitionGame>(c)) {
    const auto p = try_eval(phi, x);
    if (!p) continue;
    for (const Block& b : x.partition.blocks()) {
      for (std::size_t a = 0; a < b.size(); ++a) {
        for (std::size_t d = a + 1; d < b.size(); ++d) {
          const PlayerId i = b[a];
          const PlayerId j = b[d];
          const PartitionGame without_j(x.game, x.partition.split_off(j));
          const PartitionGame without_i(x.game, x.partition.split_off(i));
          const auto pj = try_eval(phi, without_j);
          const auto pi = try_eval(phi, without_i);
          if (!pj || !pi) continue;
          sink.expect_equal(p->at(i) - pj->at(i), p->at(j) - pi->at(j), [&] {
            return Witness{{instance("P", x), instance("P split at j", without_j),
                            instance("P split at i", without_i)},
                           {i, j},
                           0,
                           0,
                           "phi_i(P) - phi_i(P_-j) (lhs) against phi_j(P) - "
                           "phi_j(P_-i) (rhs)"};
          });
        }
      }
    }
  }
}

void check_null_gain(const PartitionSolutionConcept& phi,
                     const PartitionSolutionConcept& f, const Corpus& c,
                     Sink& sink) {
  for (const PartitionGame& x : require_entries<PartitionGame>(c)) {
    std::vector<PartitionGame> games{x};
    const PlayerId fresh = fresh_player(x);
    for (const Block& b : x.partition.blocks()) {
      games.push_back(extend_with_null(x, b.front(), fresh));
    }
    for (const PartitionGame& y : games) {
      std::optional<PayoffAllocation> p;
      std::optional<PayoffAllocation> fy;
      bool evaluated = false;
      for (const Block& b : y.partition.blocks()) {
        for (PlayerId j : b) {
          if (!is_null_player(y.game, j, c.tol)) continue;
          if (!evaluated) {
            p = try_eval(phi, y);
            fy = try_eval(f, y);
            evaluated = true;
          }
          if (!p || !fy) continue;
          for (PlayerId i : b) {
            if (i == j) continue;
            sink.expect_equal(p->at(i) - p->at(j), fy->at(i) - fy->at(j), [&] {
              return Witness{{instance("game", y)}, {i, j}, 0, 0,
                             "player " + player_text(j) +
                                 " is null: phi_i - phi_j (lhs) against f_i - "
                                 "f_j (rhs)"};
            });
          }
        }
      }
    }
  }
}

// --- Operator axioms -------------------------------------------------------

template <class I>
struct OpModel {
  std::string name;
  std::function<PayoffAllocation(const BasicSolution<I>&, const I&)> apply;
  std::vector<BasicSolution<I>> solutions;
};

template <class I>
std::optional<PayoffAllocation> try_apply(const OpModel<I>& m,
                                          const BasicSolution<I>& f, const I& x) {
  try {
    return m.apply(f, x);
  } catch (const DomainViolation&) {
    return std::nullopt;
  }
}

template <class I>
BasicSolution<I> copy_variant(const BasicSolution<I>& f, std::size_t i,
                              std::size_t j) {
  return make_componentwise<I>(
      "copy(" + f.name() + "," + std::to_string(i) + "->" + std::to_string(j) + ")",
      f, {{j, {{f, i, 1.0}}}});
}

template <class I>
BasicSolution<I> swap_variant(const BasicSolution<I>& f, std::size_t j,
                              std::size_t k) {
  return make_componentwise<I>(
      "swap(" + f.name() + "," + std::to_string(j) + "," + std::to_string(k) + ")",
      f, {{j, {{f, k, 1.0}}}, {k, {{f, j, 1.0}}}});
}

template <class I>
BasicSolution<I> merge_variant(const BasicSolution<I>& f, std::size_t j,
                               std::size_t k) {
  return make_componentwise<I>(
      "merge(" + f.name() + "," + std::to_string(j) + "+=" + std::to_string(k) + ")",
      f, {{j, {{f, j, 1.0}, {f, k, 1.0}}}, {k, {}}});
}

// OP-ET: a variant whose j-th component copies the i-th satisfies the
// hypothesis identically; supplied solutions are used where their two
// components agree on the whole group of corpus games.
template <class I>
void check_op_equal_treatment(const OpModel<I>& m, const Corpus& c, Sink& sink) {
  const auto& list = require_entries<I>(c);
  for (const I& x : list) {
    const Game& v = underlying_game(x);
    for (const auto& f : m.solutions) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (i == j) continue;
          const auto fp = copy_variant(f, i, j);
          const auto out = try_apply(m, fp, x);
          if (!out) continue;
          sink.expect_equal((*out)[i], (*out)[j], [&] {
            return Witness{{instance("v", x)}, {v.player(i), v.player(j)}, 0, 0,
                           "benchmark " + fp.name() +
                               " pays both players alike; Phi_i (lhs) against "
                               "Phi_j (rhs)"};
          });
        }
      }
    }
  }
  for (const auto& group : groups_of(list)) {
    const std::size_t n = underlying_game(list[group.front()]).size();
    for (const auto& f : m.solutions) {
      std::vector<PayoffAllocation> fx;
      for (std::size_t k : group) {
        const auto out = try_eval(f, list[k]);
        if (!out) break;
        fx.push_back(*out);
      }
      if (fx.size() != group.size()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const bool equal = std::all_of(fx.begin(), fx.end(), [&](const auto& p) {
            return sink.tol().equal(p[i], p[j]);
          });
          if (!equal) continue;
          for (std::size_t k : group) {
            const auto out = try_apply(m, f, list[k]);
            if (!out) continue;
            const Game& v = underlying_game(list[k]);
            sink.expect_equal((*out)[i], (*out)[j], [&] {
              return Witness{{instance("v", list[k])}, {v.player(i), v.player(j)}, 0, 0,
                             f.name() + " pays both players alike on every "
                                        "corpus game of this shape; Phi_i "
                                        "(lhs) against Phi_j (rhs)"};
            });
          }
        }
      }
    }
  }
}

// Variants agreeing with f on component i and on the total, identically.
template <class I>
void constructed_equal_surplus(const OpModel<I>& m, const I& x, Sink& sink) {
  const Game& v = underlying_game(x);
  for (const auto& f : m.solutions) {
    const auto base = try_apply(m, f, x);
    if (!base) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        for (std::size_t k = j + 1; k < v.size(); ++k) {
          if (j == i || k == i) continue;
          for (const auto& fp : {swap_variant(f, j, k), merge_variant(f, j, k)}) {
            const auto out = try_apply(m, fp, x);
            if (!out) continue;
            sink.expect_equal((*base)[i], (*out)[i], [&] {
              return Witness{{instance("v", x)}, {v.player(i)}, 0, 0,
                             "Phi_i(" + f.name() + ") (lhs) against Phi_i(" +
                                 fp.name() + ") (rhs)"};
            });
          }
        }
      }
    }
  }
}

template <class I>
void check_op_equal_surplus(const OpModel<I>& m, const Corpus& c, Sink& sink) {
  for (const I& x : require_entries<I>(c)) {
    constructed_equal_surplus(m, x, sink);
    // Supplied pairs meeting the hypothesis at this game.
    const Game& v = underlying_game(x);
    for (std::size_t a = 0; a < m.solutions.size(); ++a) {
      for (std::size_t b = a + 1; b < m.solutions.size(); ++b) {
        const auto& f = m.solutions[a];
        const auto& g = m.solutions[b];
        const auto fx = try_eval(f, x);
        const auto gx = try_eval(g, x);
        if (!fx || !gx || !sink.tol().equal(fx->total(), gx->total())) continue;
        const auto pf = try_apply(m, f, x);
        const auto pg = try_apply(m, g, x);
        if (!pf || !pg) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!sink.tol().equal((*fx)[i], (*gx)[i])) continue;
          sink.expect_equal((*pf)[i], (*pg)[i], [&] {
            return Witness{{instance("v", x)}, {v.player(i)}, 0, 0,
                           f.name() + " and " + g.name() +
                               " agree on player i and on the total here; "
                               "Phi_i(f) (lhs) against Phi_i(f') (rhs)"};
          });
        }
      }
    }
  }
}

template <class I>
void check_op_weak_equal_surplus(const OpModel<I>& m, const Corpus& c, Sink& sink) {
  const auto& list = require_entries<I>(c);
  for (const I& x : list) constructed_equal_surplus(m, x, sink);
  // Supplied pairs agreeing on the whole group of corpus games.
  for (const auto& group : groups_of(list)) {
    const std::size_t n = underlying_game(list[group.front()]).size();
    for (std::size_t a = 0; a < m.solutions.size(); ++a) {
      for (std::size_t b = a + 1; b < m.solutions.size(); ++b) {
        const auto& f = m.solutions[a];
        const auto& g = m.solutions[b];
        std::vector<std::pair<PayoffAllocation, PayoffAllocation>> vals;
        for (std::size_t k : group) {
          const auto fx = try_eval(f, list[k]);
          const auto gx = try_eval(g, list[k]);
          if (!fx || !gx || !sink.tol().equal(fx->total(), gx->total())) break;
          vals.emplace_back(*fx, *gx);
        }
        if (vals.size() != group.size()) continue;
        for (std::size_t i = 0; i < n; ++i) {
          const bool agree = std::all_of(vals.begin(), vals.end(), [&](const auto& p) {
            return sink.tol().equal(p.first[i], p.second[i]);
          });
          if (!agree) continue;
          for (std::size_t k : group) {
            const auto pf = try_apply(m, f, list[k]);
            const auto pg = try_apply(m, g, list[k]);
            if (!pf || !pg) continue;
            const Game& v = underlying_game(list[k]);
            sink.expect_equal((*pf)[i], (*pg)[i], [&] {
              return Witness{{instance("v", list[k])}, {v.player(i)}, 0, 0,
                             f.name() + " and " + g.name() +
                                 " agree on player i and on the total on every "
                                 "corpus game of this shape; Phi_i(f) (lhs) "
                                 "against Phi_i(f') (rhs)"};
            });
          }
        }
      }
    }
  }
}

template <class I>
void check_operator_axiom(AxiomId axiom, const OpModel<I>& m, const Corpus& c,
                          Sink& sink) {
  switch (axiom) {
    case AxiomId::OP_ET:
      return check_op_equal_treatment(m, c, sink);
    case AxiomId::OP_EES:
      return check_op_equal_surplus(m, c, sink);
    case AxiomId::OP_WEES:
      return check_op_weak_equal_surplus(m, c, sink);
    default:
      throw std::logic_error("not an operator axiom");
  }
}

// --- Dispatch --------------------------------------------------------------

[[noreturn]] void incompatible(AxiomId axiom, const std::string& what) {
  throw IncompatibleSubject(std::string(to_string(axiom)) + " does not apply to " +
                            what);
}

template <class S>
const S& need_benchmark(AxiomId axiom, const std::optional<S>& bench) {
  if (!bench) {
    throw IncompatibleSubject(std::string(to_string(axiom)) +
                              " is relative to a benchmark; none was given");
  }
  return *bench;
}

void run(AxiomId axiom, const SolutionSubject& s, const Corpus& c, Sink& sink) {
  switch (axiom) {
    case AxiomId::E:
      return check_efficiency(s.phi, c, sink);
    case AxiomId::CoE:
      return check_cohesive_efficiency(s.phi, c, sink);
    case AxiomId::SYM:
      return check_symmetry(s.phi, c, sink);
    case AxiomId::ET:
      return check_equal_treatment(s.phi, c, sink);
    case AxiomId::f_IES:
      return check_individualistic(Situation::surplus, s.phi,
                                   need_benchmark(axiom, s.benchmark), c, sink);
    case AxiomId::f_IER:
      return check_individualistic(Situation::ratio, s.phi,
                                   need_benchmark(axiom, s.benchmark), c, sink);
    case AxiomId::f_IECoS:
      return check_individualistic(Situation::cohesive_surplus, s.phi,
                                   need_benchmark(axiom, s.benchmark), c, sink);
    case AxiomId::f_IECoR:
      return check_individualistic(Situation::cohesive_ratio, s.phi,
                                   need_benchmark(axiom, s.benchmark), c, sink);
    default:
      incompatible(axiom, "a solution on plain games");
  }
}

void run(AxiomId axiom, const GraphSubject& s, const Corpus& c, Sink& sink) {
  switch (axiom) {
    case AxiomId::E:
      return check_efficiency(s.phi, c, sink);
    case AxiomId::CE:
      return check_component_efficiency(s.phi, c, sink);
    case AxiomId::FA:
      return check_fairness(s.phi, c, false, sink);
    case AxiomId::FA_v:
      return check_fairness(s.phi, c, true, sink);
    case AxiomId::FDS:
      return check_fair_surplus<CommGame>(s.phi, std::nullopt, c, sink);
    case AxiomId::f_FDS:
      return check_fair_surplus<CommGame>(s.phi, need_benchmark(axiom, s.benchmark),
                                          c, sink);
    default:
      incompatible(axiom, "a solution on communication games");
  }
}

void run(AxiomId axiom, const PartitionSubject& s, const Corpus& c, Sink& sink) {
  switch (axiom) {
    case AxiomId::E:
      return check_efficiency(s.phi, c, sink);
    case AxiomId::CE:
      return check_component_efficiency(s.phi, c, sink);
    case AxiomId::CRBC:
      return check_crbc(s.phi, c, sink);
    case AxiomId::RBCC:
      return check_rbcc(s.phi, c, sink);
    case AxiomId::RBCC_v:
      return check_rbcc_at_v(s.phi, c, sink);
    case AxiomId::f_EGN:
      return check_null_gain(s.phi, need_benchmark(axiom, s.benchmark), c, sink);
    case AxiomId::f_FDSC:
      return check_fair_surplus<PartitionGame>(
          s.phi, need_benchmark(axiom, s.benchmark), c, sink);
    default:
      incompatible(axiom, "a solution on games with a coalition structure");
  }
}

OpModel<Game> model_of(const OperatorSubject& s) {
  ExtensionOperator op = s.op;
  return {op.name(), [op](const SolutionConcept& f, const Game& v) { return op.apply(f, v); },
          s.solutions};
}

OpModel<CommGame> model_of(const GraphOperatorSubject& s) {
  auto op = s.op;
  return {s.name,
          [op](const GraphSolutionConcept& f, const CommGame& x) {
            return op(f).evaluate(x);
          },
          s.solutions};
}

OpModel<PartitionGame> model_of(const PartitionOperatorSubject& s) {
  auto op = s.op;
  return {s.name,
          [op](const PartitionSolutionConcept& f, const PartitionGame& x) {
            return op(f).evaluate(x);
          },
          s.solutions};
}

void require_solutions(const std::string& name, std::size_t count) {
  if (count == 0) {
    throw IncompatibleSubject("operator " + name + " needs at least one solution");
  }
}

// Non-operator axioms under an operator subject apply to Phi(f) with
// benchmark f for each supplied f, except the local-preservation axioms.
void run(AxiomId axiom, const OperatorSubject& s, const Corpus& c, Sink& sink) {
  require_solutions(s.op.name(), s.solutions.size());
  if (is_operator_axiom(axiom)) return check_operator_axiom(axiom, model_of(s), c, sink);
  for (const auto& f : s.solutions) {
    run(axiom, SolutionSubject{wrap(s.op, f), f}, c, sink);
  }
}

void run(AxiomId axiom, const GraphOperatorSubject& s, const Corpus& c, Sink& sink) {
  require_solutions(s.name, s.solutions.size());
  if (is_operator_axiom(axiom)) return check_operator_axiom(axiom, model_of(s), c, sink);
  for (const auto& f : s.solutions) {
    if (axiom == AxiomId::FA_v) {
      check_fairness_preservation(f, s.op(f), c, sink);
    } else {
      run(axiom, GraphSubject{s.op(f), f}, c, sink);
    }
  }
}

void run(AxiomId axiom, const PartitionOperatorSubject& s, const Corpus& c,
         Sink& sink) {
  require_solutions(s.name, s.solutions.size());
  if (is_operator_axiom(axiom)) return check_operator_axiom(axiom, model_of(s), c, sink);
  for (const auto& f : s.solutions) {
    if (axiom == AxiomId::RBCC_v) {
      check_rbcc_preservation(f, s.op(f), c, sink);
    } else {
      run(axiom, PartitionSubject{s.op(f), f}, c, sink);
    }
  }
}

}  // namespace

AxiomReport check_axiom(AxiomId axiom, const CheckSubject& subject,
                        const Corpus& corpus) {
  AxiomReport report;
  report.axiom = axiom;
  report.subject = subject_name(subject);
  Sink sink(report, corpus.tol);
  std::visit([&](const auto& s) { run(axiom, s, corpus, sink); }, subject);
  return report;
}

AxiomReport merge_reports(const std::vector<AxiomReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("no reports to merge");
  AxiomReport out;
  out.axiom = parts.front().axiom;
  out.subject = parts.front().subject;
  for (const auto& r : parts) {
    out.cases_checked += r.cases_checked;
    out.violations += r.violations;
    out.pass = out.pass && r.pass;
    if (!out.witness && r.witness) out.witness = r.witness;
  }
  return out;
}

namespace {

Corpus slice(const Corpus& c, std::size_t which, std::size_t begin, std::size_t end) {
  Corpus out;
  out.seed = c.seed;
  out.index_base = c.index_base + begin;
  out.random_orders = c.random_orders;
  out.pairs_per_player = c.pairs_per_player;
  out.tol = c.tol;
  auto cut = [&](const auto& list, auto& into) {
    into.assign(list.begin() + static_cast<std::ptrdiff_t>(begin),
                list.begin() + static_cast<std::ptrdiff_t>(end));
  };
  if (which == 0) cut(c.games, out.games);
  if (which == 1) cut(c.comm_games, out.comm_games);
  if (which == 2) cut(c.partition_games, out.partition_games);
  return out;
}

AxiomReport sliced(AxiomId axiom, const CheckSubject& subject, const Corpus& c,
                   std::size_t workers) {
  std::size_t which = 0;
  std::size_t size = c.games.size();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GraphSubject> ||
                      std::is_same_v<T, GraphOperatorSubject>) {
          which = 1;
          size = c.comm_games.size();
        } else if constexpr (std::is_same_v<T, PartitionSubject> ||
                             std::is_same_v<T, PartitionOperatorSubject>) {
          which = 2;
          size = c.partition_games.size();
        }
      },
      subject);
  workers = std::min(workers, size);
  if (workers <= 1) return check_axiom(axiom, subject, c);

  std::vector<AxiomReport> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = size * w / workers;
    const std::size_t end = size * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        parts[w] = check_axiom(axiom, subject, slice(c, which, begin, end));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return merge_reports(parts);
}

}  // namespace

AxiomReport check_axiom_parallel(AxiomId axiom, const CheckSubject& subject,
                                 const Corpus& corpus, std::size_t workers) {
  // These compare solutions across a whole group of games, so a slice of
  // the corpus would see a different hypothesis.
  if (workers <= 1 || axiom == AxiomId::OP_ET || axiom == AxiomId::OP_WEES) {
    return check_axiom(axiom, subject, corpus);
  }
  // Operator subjects iterate solutions outermost; keep that order when
  // splitting so the witness matches the single-threaded run.
  auto per_solution = [&](const auto& s, auto make) {
    std::vector<AxiomReport> parts;
    for (const auto& f : s.solutions) {
      auto single = s;
      single.solutions = {f};
      parts.push_back(sliced(axiom, make(single), corpus, workers));
    }
    AxiomReport out = merge_reports(parts);
    out.subject = subject_name(subject);
    return out;
  };
  if (!is_operator_axiom(axiom)) {
    if (const auto* s = std::get_if<OperatorSubject>(&subject)) {
      require_solutions(s->op.name(), s->solutions.size());
      return per_solution(*s, [](auto x) { return CheckSubject(x); });
    }
    if (const auto* s = std::get_if<GraphOperatorSubject>(&subject)) {
      require_solutions(s->name, s->solutions.size());
      return per_solution(*s, [](auto x) { return CheckSubject(x); });
    }
    if (const auto* s = std::get_if<PartitionOperatorSubject>(&subject)) {
      require_solutions(s->name, s->solutions.size());
      return per_solution(*s, [](auto x) { return CheckSubject(x); });
    }
  }
  return sliced(axiom, subject, corpus, workers);
}

// --- Theorem suites --------------------------------------------------------

namespace {

template <class T>
const T& benchmark_as(Theorem t, const Benchmark& b, const char* kind) {
  if (const auto* p = std::get_if<T>(&b)) return *p;
  throw IncompatibleSubject(std::string(to_string(t)) + " needs a benchmark " + kind);
}

}  // namespace

std::vector<AxiomReport> check_theorem_suite(Theorem theorem,
                                             const Benchmark& benchmark,
                                             const Corpus& corpus,
                                             std::size_t workers) {
  std::vector<AxiomReport> out;
  auto run_all = [&](const CheckSubject& subject, std::initializer_list<AxiomId> ids) {
    for (AxiomId id : ids) out.push_back(check_axiom_parallel(id, subject, corpus, workers));
  };
  using A = AxiomId;
  switch (theorem) {
    case Theorem::T2_1: {
      const auto& f = benchmark_as<SolutionConcept>(theorem, benchmark, "on plain games");
      run_all(SolutionSubject{wrap(ExtensionOperator::ess(), f), f},
              {A::E, A::ET, A::f_IES});
      run_all(SolutionSubject{wrap(ExtensionOperator::ps(), f), f},
              {A::E, A::ET, A::f_IER});
      break;
    }
    case Theorem::T3_1: {
      const auto& f = benchmark_as<SolutionConcept>(theorem, benchmark, "on plain games");
      run_all(OperatorSubject{ExtensionOperator::ess(), {f}},
              {A::E, A::OP_ET, A::OP_EES, A::f_IES});
      run_all(OperatorSubject{ExtensionOperator::ps(), {f}},
              {A::E, A::OP_ET, A::OP_EES, A::f_IER});
      break;
    }
    case Theorem::CB_1: {
      const auto& f = benchmark_as<SolutionConcept>(theorem, benchmark, "on plain games");
      run_all(OperatorSubject{ExtensionOperator::cohesive_ess(), {f}},
              {A::CoE, A::OP_ET, A::OP_EES, A::f_IECoS});
      run_all(OperatorSubject{ExtensionOperator::cohesive_ps(), {f}},
              {A::CoE, A::OP_ET, A::OP_EES, A::f_IECoR});
      break;
    }
    case Theorem::T4_1: {
      const auto& f = benchmark_as<GraphSolutionConcept>(theorem, benchmark,
                                                         "on communication games");
      run_all(GraphSubject{sol::graph_ess(f), f}, {A::E, A::FA, A::f_FDS});
      break;
    }
    case Theorem::T4_2: {
      const auto& f = benchmark_as<GraphSolutionConcept>(theorem, benchmark,
                                                         "on communication games");
      run_all(graph_ess_operator({f}),
              {A::E, A::FA_v, A::OP_ET, A::OP_WEES, A::f_FDS});
      break;
    }
    case Theorem::T5_1: {
      const auto& f = benchmark_as<PartitionSolutionConcept>(
          theorem, benchmark, "on games with a coalition structure");
      run_all(PartitionSubject{sol::partition_ess(f), f},
              {A::E, A::RBCC, A::f_EGN, A::f_FDSC});
      break;
    }
    case Theorem::T5_2: {
      const auto& f = benchmark_as<PartitionSolutionConcept>(
          theorem, benchmark, "on games with a coalition structure");
      run_all(partition_ess_operator({f}),
              {A::E, A::RBCC_v, A::OP_ET, A::OP_WEES, A::f_EGN, A::f_FDSC});
      break;
    }
  }
  return out;
}

}  // namespace tugx
