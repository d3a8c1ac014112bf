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

#include "tugx/game.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tugx {

bool Tolerance::equal(double a, double b) const {
  const double diff = std::abs(a - b);
  return diff <= abs_eps + rel_eps * std::max(std::abs(a), std::abs(b));
}

std::vector<std::size_t> Coalition::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (mask_type m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

namespace {

void check_player_list(const std::vector<PlayerId>& players) {
  if (players.empty()) {
    throw std::invalid_argument("a game needs at least one player");
  }
  if (players.size() > kMaxPlayers) {
    throw std::invalid_argument("games are limited to " +
                                std::to_string(kMaxPlayers) + " players");
  }
  for (std::size_t k = 1; k < players.size(); ++k) {
    if (players[k - 1] >= players[k]) {
      throw std::invalid_argument(
          "player ids must be distinct and listed in increasing order");
    }
  }
}

}  // namespace

Game::Game(std::vector<PlayerId> players, std::vector<double> worths)
    : players_(std::move(players)), worths_(std::move(worths)) {
  check_player_list(players_);
  if (worths_.size() != (std::size_t{1} << players_.size())) {
    throw std::invalid_argument("worth table must have 2^n entries");
  }
  if (worths_[0] != 0.0) {
    throw std::invalid_argument("the empty coalition must have worth 0");
  }
  for (double w : worths_) {
    if (!std::isfinite(w)) {
      throw std::invalid_argument("worths must be finite");
    }
  }
}

Game Game::from_function(std::vector<PlayerId> players,
                         const std::function<double(Coalition)>& worth) {
  std::sort(players.begin(), players.end());
  check_player_list(players);
  std::vector<double> worths(std::size_t{1} << players.size(), 0.0);
  for (std::size_t m = 1; m < worths.size(); ++m) {
    worths[m] = worth(Coalition(static_cast<Coalition::mask_type>(m)));
  }
  return Game(std::move(players), std::move(worths));
}

Game Game::from_entries(
    std::vector<PlayerId> players,
    const std::vector<std::pair<std::vector<PlayerId>, double>>& entries) {
  std::sort(players.begin(), players.end());
  check_player_list(players);
  std::vector<double> worths(std::size_t{1} << players.size(), 0.0);
  std::vector<bool> seen(worths.size(), false);
  const Game shape(players, std::vector<double>(worths.size(), 0.0));
  for (const auto& [members, value] : entries) {
    const Coalition s = shape.coalition_of(members);
    if (s.empty()) {
      throw std::invalid_argument("the empty coalition cannot be assigned");
    }
    if (s.size() != members.size()) {
      throw std::invalid_argument("coalition lists a player twice");
    }
    if (seen[s.mask()]) {
      throw std::invalid_argument("duplicate coalition entry");
    }
    seen[s.mask()] = true;
    worths[s.mask()] = value;
  }
  return Game(std::move(players), std::move(worths));
}

std::optional<std::size_t> Game::find_index(PlayerId id) const {
  const auto it = std::lower_bound(players_.begin(), players_.end(), id);
  if (it == players_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - players_.begin());
}

std::size_t Game::index_of(PlayerId id) const {
  if (auto idx = find_index(id)) return *idx;
  throw std::invalid_argument("player " + std::to_string(id) +
                              " is not in the game");
}

Coalition Game::coalition_of(std::span<const PlayerId> members) const {
  Coalition s;
  for (PlayerId id : members) s = s.with(index_of(id));
  return s;
}

std::vector<PlayerId> Game::members(Coalition s) const {
  std::vector<PlayerId> out;
  for (std::size_t k : s.indices()) out.push_back(players_.at(k));
  return out;
}

double Game::singleton_sum() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < size(); ++k) sum += singleton_worth(k);
  return sum;
}

Game operator+(const Game& a, const Game& b) {
  if (a.player_list() != b.player_list()) {
    throw std::invalid_argument("cannot add games on different player sets");
  }
  std::vector<double> w(a.worths().begin(), a.worths().end());
  for (std::size_t m = 0; m < w.size(); ++m) w[m] += b.worths()[m];
  return Game(a.player_list(), std::move(w));
}

Game operator*(double factor, const Game& a) {
  std::vector<double> w(a.worths().begin(), a.worths().end());
  for (double& x : w) x *= factor;
  w[0] = 0.0;
  return Game(a.player_list(), std::move(w));
}

// --- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<PlayerId> domain,
                         std::vector<PlayerId> image) {
  if (domain.size() != image.size()) {
    throw std::invalid_argument("permutation domain and image differ in size");
  }
  std::vector<std::pair<PlayerId, PlayerId>> pairs;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    pairs.emplace_back(domain[k], image[k]);
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [from, to] : pairs) {
    domain_.push_back(from);
    image_.push_back(to);
  }
  if (std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end()) {
    throw std::invalid_argument("permutation domain repeats a player");
  }
  std::vector<PlayerId> sorted_image = image_;
  std::sort(sorted_image.begin(), sorted_image.end());
  if (sorted_image != domain_) {
    throw std::invalid_argument("mapping is not a bijection on its domain");
  }
}

Permutation Permutation::identity(std::span<const PlayerId> players) {
  std::vector<PlayerId> p(players.begin(), players.end());
  return Permutation(p, p);
}

Permutation Permutation::transposition(std::span<const PlayerId> players,
                                       PlayerId i, PlayerId j) {
  std::vector<PlayerId> domain(players.begin(), players.end());
  std::vector<PlayerId> image = domain;
  for (PlayerId& x : image) {
    if (x == i) {
      x = j;
    } else if (x == j) {
      x = i;
    }
  }
  return Permutation(std::move(domain), std::move(image));
}

PlayerId Permutation::operator()(PlayerId i) const {
  const auto it = std::lower_bound(domain_.begin(), domain_.end(), i);
  if (it == domain_.end() || *it != i) {
    throw std::invalid_argument("player outside permutation domain");
  }
  return image_[static_cast<std::size_t>(it - domain_.begin())];
}

Permutation Permutation::inverse() const { return Permutation(image_, domain_); }

Permutation Permutation::compose(const Permutation& other) const {
  if (other.domain_ != domain_) {
    throw std::invalid_argument("cannot compose permutations of different sets");
  }
  std::vector<PlayerId> image;
  for (PlayerId x : domain_) image.push_back((*this)(other(x)));
  return Permutation(domain_, std::move(image));
}

// --- Profiles --------------------------------------------------------------

std::optional<GameProfile> parse_profile(std::string_view name) {
  if (name == "general") return GameProfile::general;
  if (name == "positive-singletons") return GameProfile::positive_singletons;
  if (name == "zero-normalized") return GameProfile::zero_normalized;
  return std::nullopt;
}

std::string_view to_string(GameProfile profile) {
  switch (profile) {
    case GameProfile::general:
      return "general";
    case GameProfile::positive_singletons:
      return "positive-singletons";
    case GameProfile::zero_normalized:
      return "zero-normalized";
  }
  return "general";
}

// --- Structural operations -------------------------------------------------

double marginal_contribution(const Game& v, Coalition s, PlayerId i) {
  const std::size_t k = v.index_of(i);
  if (!s.is_subset_of(v.grand())) {
    throw std::invalid_argument("coalition is not a subset of the players");
  }
  if (s.contains(k)) {
    throw std::invalid_argument("player already belongs to the coalition");
  }
  return v(s.with(k)) - v(s);
}

bool are_symmetric(const Game& v, PlayerId i, PlayerId j,
                   const Tolerance& tol) {
  if (i == j) throw std::invalid_argument("symmetry needs two distinct players");
  const std::size_t ki = v.index_of(i);
  const std::size_t kj = v.index_of(j);
  const Coalition rest = v.grand().without(ki).without(kj);
  // Enumerate all subsets of `rest`.
  const Coalition::mask_type r = rest.mask();
  for (Coalition::mask_type m = r;; m = (m - 1) & r) {
    const Coalition s(m);
    if (!tol.equal(v(s.with(ki)) - v(s), v(s.with(kj)) - v(s))) return false;
    if (m == 0) break;
  }
  return true;
}

bool is_null_player(const Game& v, PlayerId i, const Tolerance& tol) {
  const std::size_t k = v.index_of(i);
  const Coalition::mask_type r = v.grand().without(k).mask();
  for (Coalition::mask_type m = r;; m = (m - 1) & r) {
    const Coalition s(m);
    if (!tol.equal(v(s.with(k)), v(s))) return false;
    if (m == 0) break;
  }
  return true;
}

Game permute_game(const Game& v, const Permutation& pi) {
  if (pi.domain() != v.player_list()) {
    throw std::invalid_argument("permutation must act on the game's players");
  }
  const std::size_t n = v.size();
  std::vector<std::size_t> target(n);
  for (std::size_t k = 0; k < n; ++k) target[k] = v.index_of(pi(v.player(k)));
  std::vector<double> w(v.worths().size(), 0.0);
  for (std::size_t m = 1; m < w.size(); ++m) {
    Coalition image;
    for (std::size_t k : Coalition(static_cast<Coalition::mask_type>(m)).indices()) {
      image = image.with(target[k]);
    }
    w[image.mask()] = v.worths()[m];
  }
  return Game(v.player_list(), std::move(w));
}

Game subgame(const Game& v, Coalition s) {
  if (s.empty()) throw std::invalid_argument("subgame needs a nonempty coalition");
  if (!s.is_subset_of(v.grand())) {
    throw std::invalid_argument("coalition is not a subset of the players");
  }
  const std::vector<std::size_t> idx = s.indices();
  std::vector<PlayerId> players;
  for (std::size_t k : idx) players.push_back(v.player(k));
  std::vector<double> w(std::size_t{1} << idx.size(), 0.0);
  for (std::size_t m = 1; m < w.size(); ++m) {
    Coalition outer;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if ((m >> b) & 1U) outer = outer.with(idx[b]);
    }
    w[m] = v(outer);
  }
  return Game(std::move(players), std::move(w));
}

Game unanimity_game(std::vector<PlayerId> players,
                    const std::vector<PlayerId>& carrier) {
  if (carrier.empty()) {
    throw std::invalid_argument("unanimity carrier must be nonempty");
  }
  std::sort(players.begin(), players.end());
  const Game shape(players, std::vector<double>(std::size_t{1} << players.size(), 0.0));
  const Coalition t = shape.coalition_of(carrier);
  return Game::from_function(std::move(players),
                             [t](Coalition s) { return t.is_subset_of(s) ? 1.0 : 0.0; });
}

Game additive_game(std::vector<PlayerId> players,
                   const std::vector<double>& singleton_worths) {
  if (players.size() != singleton_worths.size()) {
    throw std::invalid_argument("one singleton worth per player required");
  }
  std::vector<std::pair<PlayerId, double>> paired;
  for (std::size_t k = 0; k < players.size(); ++k) {
    paired.emplace_back(players[k], singleton_worths[k]);
  }
  std::sort(paired.begin(), paired.end());
  std::vector<double> sorted_worths;
  for (const auto& p : paired) sorted_worths.push_back(p.second);
  return Game::from_function(std::move(players), [&](Coalition s) {
    double sum = 0.0;
    for (std::size_t k : s.indices()) sum += sorted_worths[k];
    return sum;
  });
}

Game random_game(std::vector<PlayerId> players, std::uint64_t seed,
                 GameProfile profile) {
  std::mt19937_64 rng(seed);
  // Quarter-unit grid; the modulo bias is irrelevant at this range.
  auto quarter = [&rng](std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return static_cast<double>(lo + static_cast<std::int64_t>(rng() % span)) / 4.0;
  };
  return Game::from_function(std::move(players), [&](Coalition s) {
    const auto size = static_cast<std::int64_t>(s.size());
    switch (profile) {
      case GameProfile::general:
        return quarter(-20 * size, 40 * size);
      case GameProfile::positive_singletons:
        return quarter(1, 40 * size);
      case GameProfile::zero_normalized:
        return size == 1 ? 0.0 : quarter(-20 * size, 40 * size);
    }
    return 0.0;
  });
}

std::vector<PlayerId> player_range(std::size_t n) {
  std::vector<PlayerId> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<PlayerId>(k + 1);
  return out;
}

namespace {

void partitions_rec(Coalition rest, std::vector<Coalition>& current,
                    std::vector<std::vector<Coalition>>& out) {
  if (rest.empty()) {
    out.push_back(current);
    return;
  }
  const std::size_t low = rest.lowest();
  const Coalition others = rest.without(low);
  // Blocks containing the lowest remaining member.
  const Coalition::mask_type r = others.mask();
  for (Coalition::mask_type m = r;; m = (m - 1) & r) {
    const Coalition block = Coalition(m).with(low);
    current.push_back(block);
    partitions_rec(rest - block, current, out);
    current.pop_back();
    if (m == 0) break;
  }
}

}  // namespace

std::vector<std::vector<Coalition>> set_partitions(Coalition s) {
  std::vector<std::vector<Coalition>> out;
  std::vector<Coalition> current;
  partitions_rec(s, current, out);
  return out;
}

}  // namespace tugx
