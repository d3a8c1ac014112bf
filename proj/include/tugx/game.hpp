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

#ifndef TUGX_GAME_HPP
#define TUGX_GAME_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tugx {

using PlayerId = std::uint32_t;

inline constexpr std::size_t kMaxPlayers = 16;

/// Approximate equality for reals: |a-b| <= abs_eps + rel_eps * max(|a|,|b|).
struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  bool equal(double a, double b) const;
  bool is_zero(double a) const { return equal(a, 0.0); }
};

/// A set of players encoded as a bitmask over the owning game's ordered
/// player list: bit k stands for the k-th player.
class Coalition {
 public:
  using mask_type = std::uint32_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(mask_type mask) : mask_(mask) {}

  static constexpr Coalition singleton(std::size_t index) {
    return Coalition(mask_type{1} << index);
  }
  static constexpr Coalition first(std::size_t n) {
    return Coalition(static_cast<mask_type>((mask_type{1} << n) - 1));
  }

  constexpr mask_type mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool contains(std::size_t index) const {
    return (mask_ >> index) & 1U;
  }
  constexpr bool is_subset_of(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  /// Index of the lowest member; the coalition must be nonempty.
  constexpr std::size_t lowest() const {
    return static_cast<std::size_t>(std::countr_zero(mask_));
  }
  constexpr Coalition with(std::size_t index) const {
    return Coalition(mask_ | (mask_type{1} << index));
  }
  constexpr Coalition without(std::size_t index) const {
    return Coalition(mask_ & ~(mask_type{1} << index));
  }

  /// Member indices in increasing order.
  std::vector<std::size_t> indices() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  mask_type mask_ = 0;
};

/// A TU-game (N, v): an ordered player list (strictly increasing ids) and a
/// dense table of 2^n worths indexed by coalition mask, with v(empty) = 0.
class Game {
 public:
  Game(std::vector<PlayerId> players, std::vector<double> worths);

  /// Builds a game from any player order; `worth` is queried for every
  /// nonempty coalition of the sorted player list.
  static Game from_function(std::vector<PlayerId> players,
                            const std::function<double(Coalition)>& worth);

  /// Builds a game from explicit (members, worth) entries; absent coalitions
  /// read as 0. Rejects duplicates, empty entries and unknown players.
  static Game from_entries(
      std::vector<PlayerId> players,
      const std::vector<std::pair<std::vector<PlayerId>, double>>& entries);

  std::size_t size() const { return players_.size(); }
  std::span<const PlayerId> players() const { return players_; }
  const std::vector<PlayerId>& player_list() const { return players_; }
  PlayerId player(std::size_t index) const { return players_.at(index); }
  std::optional<std::size_t> find_index(PlayerId id) const;
  /// Throws std::invalid_argument when `id` is not a player.
  std::size_t index_of(PlayerId id) const;
  bool has_player(PlayerId id) const { return find_index(id).has_value(); }

  Coalition grand() const { return Coalition::first(size()); }
  Coalition coalition_of(std::span<const PlayerId> members) const;
  std::vector<PlayerId> members(Coalition s) const;

  double worth(Coalition s) const { return worths_[s.mask()]; }
  double operator()(Coalition s) const { return worth(s); }
  double grand_worth() const { return worths_.back(); }
  double singleton_worth(std::size_t index) const {
    return worths_[Coalition::singleton(index).mask()];
  }
  double singleton_sum() const;
  /// Membership in the positive domain: singleton worths sum to > 0.
  bool is_positive() const { return singleton_sum() > 0.0; }

  std::span<const double> worths() const { return worths_; }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<PlayerId> players_;
  std::vector<double> worths_;
};

inline const Game& underlying_game(const Game& v) { return v; }

Game operator+(const Game& a, const Game& b);
Game operator*(double factor, const Game& a);

/// A bijection on a player set.
class Permutation {
 public:
  /// `image[k]` is the image of `domain[k]`. Rejects non-bijective maps.
  Permutation(std::vector<PlayerId> domain, std::vector<PlayerId> image);

  static Permutation identity(std::span<const PlayerId> players);
  static Permutation transposition(std::span<const PlayerId> players,
                                   PlayerId i, PlayerId j);

  PlayerId operator()(PlayerId i) const;
  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  const std::vector<PlayerId>& domain() const { return domain_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<PlayerId> domain_;  // sorted
  std::vector<PlayerId> image_;
};

enum class GameProfile { general, positive_singletons, zero_normalized };

std::optional<GameProfile> parse_profile(std::string_view name);
std::string_view to_string(GameProfile profile);

/// v(S ∪ {i}) - v(S). Rejects i in S and unknown i.
double marginal_contribution(const Game& v, Coalition s, PlayerId i);

bool are_symmetric(const Game& v, PlayerId i, PlayerId j,
                   const Tolerance& tol = {});

bool is_null_player(const Game& v, PlayerId i, const Tolerance& tol = {});

/// The game w with w(πS) = v(S) for all S.
Game permute_game(const Game& v, const Permutation& pi);

/// Restriction of v to the nonempty coalition S (with S's members as players).
Game subgame(const Game& v, Coalition s);

Game unanimity_game(std::vector<PlayerId> players,
                    const std::vector<PlayerId>& carrier);

Game additive_game(std::vector<PlayerId> players,
                   const std::vector<double>& singleton_worths);

/// Deterministic pseudo-random game; worths are multiples of 1/4 so that
/// sums of worths are exact in binary floating point.
Game random_game(std::vector<PlayerId> players, std::uint64_t seed,
                 GameProfile profile = GameProfile::general);

/// Convenience: players 1..n.
std::vector<PlayerId> player_range(std::size_t n);

/// Every set partition of `s`, each as a list of blocks ordered by lowest
/// member. Bell(|s|) entries; intended for |s| <= 8.
std::vector<std::vector<Coalition>> set_partitions(Coalition s);

}  // namespace tugx

#endif  // TUGX_GAME_HPP
