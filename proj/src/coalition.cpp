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

#include "tugx/coalition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tugx {

// --- Partition -------------------------------------------------------------

Partition::Partition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("a partition needs a block");
  for (Block& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  const std::vector<PlayerId> all = players();
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("partition blocks must be disjoint");
  }
}

Partition Partition::grand(const std::vector<PlayerId>& players) {
  return Partition({players});
}

Partition Partition::singletons(const std::vector<PlayerId>& players) {
  std::vector<Block> blocks;
  for (PlayerId i : players) blocks.push_back({i});
  return Partition(std::move(blocks));
}

Partition Partition::from_coalitions(const std::vector<PlayerId>& players,
                                     const std::vector<Coalition>& blocks) {
  std::vector<Block> out;
  for (Coalition c : blocks) {
    Block b;
    for (std::size_t k : c.indices()) b.push_back(players.at(k));
    out.push_back(std::move(b));
  }
  return Partition(std::move(out));
}

std::vector<PlayerId> Partition::players() const {
  std::vector<PlayerId> all;
  for (const Block& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t Partition::block_of(PlayerId id) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), id)) return k;
  }
  throw std::invalid_argument("player " + std::to_string(id) +
                              " is not in the partition");
}

Partition Partition::split_off(PlayerId id) const {
  std::vector<Block> out = blocks_;
  Block& b = out[block_of(id)];
  if (b.size() == 1) return *this;
  b.erase(std::find(b.begin(), b.end(), id));
  out.push_back({id});
  return Partition(std::move(out));
}

Partition Partition::without(PlayerId id) const {
  std::vector<Block> out = blocks_;
  const std::size_t k = block_of(id);
  if (out[k].size() == 1) {
    if (out.size() == 1) {
      throw std::invalid_argument("cannot remove the only player");
    }
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    out[k].erase(std::find(out[k].begin(), out[k].end(), id));
  }
  return Partition(std::move(out));
}

Partition Partition::join(PlayerId fresh, PlayerId member) const {
  for (const Block& b : blocks_) {
    if (std::binary_search(b.begin(), b.end(), fresh)) {
      throw std::invalid_argument("player " + std::to_string(fresh) +
                                  " is already in the partition");
    }
  }
  std::vector<Block> out = blocks_;
  out[block_of(member)].push_back(fresh);
  return Partition(std::move(out));
}

Coalition Partition::block_mask(std::size_t k,
                                const std::vector<PlayerId>& players) const {
  Coalition c;
  for (PlayerId id : blocks_.at(k)) {
    auto it = std::lower_bound(players.begin(), players.end(), id);
    if (it == players.end() || *it != id) {
      throw std::invalid_argument("block member " + std::to_string(id) +
                                  " is not a player");
    }
    c = c.with(static_cast<std::size_t>(it - players.begin()));
  }
  return c;
}

PartitionGame::PartitionGame(Game v, Partition p)
    : game(std::move(v)), partition(std::move(p)) {
  if (game.player_list() != partition.players()) {
    throw std::invalid_argument("game and partition must share the player set");
  }
}

PartitionGame remove_player(const PartitionGame& x, PlayerId i) {
  const std::size_t k = x.game.index_of(i);
  return PartitionGame(subgame(x.game, x.game.grand().without(k)),
                       x.partition.without(i));
}

// --- Values ----------------------------------------------------------------

PayoffAllocation aumann_dreze(const PartitionGame& x) {
  PayoffAllocation out = PayoffAllocation::zeros(x.game);
  for (std::size_t b = 0; b < x.partition.blocks().size(); ++b) {
    const Coalition c = x.partition.block_mask(b, x.game.player_list());
    const PayoffAllocation phi = shapley(subgame(x.game, c));
    std::size_t j = 0;
    for (std::size_t k : c.indices()) out[k] = phi[j++];
  }
  return out;
}

PayoffAllocation apply_partition_ess_operator(const PartitionSolutionConcept& f,
                                              const PartitionGame& x) {
  PayoffAllocation out = f.evaluate(x);
  const double share =
      (x.game.grand_worth() - out.total()) / static_cast<double>(out.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += share;
  return out;
}

namespace sol {
namespace {

class AdRule final : public PartitionSolutionConcept::Rule {
 public:
  explicit AdRule(bool efficient) : efficient_(efficient) {}
  SolutionKind kind() const override {
    return efficient_ ? SolutionKind::ee_ad : SolutionKind::aumann_dreze;
  }
  std::string name() const override { return efficient_ ? "ee-ad" : "ad"; }
  PayoffAllocation evaluate(const PartitionGame& x) const override {
    PayoffAllocation out = tugx::aumann_dreze(x);
    if (efficient_) {
      const double share = (x.game.grand_worth() - out.total()) /
                           static_cast<double>(out.size());
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += share;
    }
    return out;
  }

 private:
  bool efficient_;
};

class PartitionEssRule final : public PartitionSolutionConcept::Rule {
 public:
  explicit PartitionEssRule(PartitionSolutionConcept f) : f_(std::move(f)) {}
  SolutionKind kind() const override { return SolutionKind::partition_ess; }
  std::string name() const override { return "partition-ess:f=" + f_.name(); }
  SolutionDomain domain() const override { return f_.domain(); }
  PayoffAllocation evaluate(const PartitionGame& x) const override {
    return apply_partition_ess_operator(f_, x);
  }

 private:
  PartitionSolutionConcept f_;
};

}  // namespace

PartitionSolutionConcept aumann_dreze() {
  return PartitionSolutionConcept(std::make_shared<AdRule>(false));
}
PartitionSolutionConcept ee_ad() {
  return PartitionSolutionConcept(std::make_shared<AdRule>(true));
}
PartitionSolutionConcept zero_partition() {
  return PartitionSolutionConcept(std::make_shared<ConstantRule<PartitionGame>>(
      0.0, "zero-partition", SolutionKind::zero));
}
PartitionSolutionConcept partition_ess(PartitionSolutionConcept f) {
  return PartitionSolutionConcept(
      std::make_shared<PartitionEssRule>(std::move(f)));
}

}  // namespace sol

// --- Null extension and cycles ---------------------------------------------

PlayerId fresh_player(const PartitionGame& x) {
  return x.game.player_list().back() + 1;
}

PartitionGame extend_with_null(const PartitionGame& x, PlayerId member,
                               PlayerId fresh) {
  if (x.game.has_player(fresh)) {
    throw std::invalid_argument("player " + std::to_string(fresh) +
                                " is already in the game");
  }
  Partition p = x.partition.join(fresh, member);
  std::vector<PlayerId> players = x.game.player_list();
  players.push_back(fresh);
  std::sort(players.begin(), players.end());
  const std::size_t pos = static_cast<std::size_t>(
      std::find(players.begin(), players.end(), fresh) - players.begin());
  const Coalition::mask_type low = (Coalition::mask_type{1} << pos) - 1;
  Game w = Game::from_function(players, [&](Coalition s) {
    // Drop the fresh player's bit and close the gap.
    const Coalition::mask_type m = s.mask();
    return x.game(Coalition((m & low) | ((m >> (pos + 1)) << pos)));
  });
  return PartitionGame(std::move(w), std::move(p));
}

namespace {

void require_block_order(const PartitionGame& x,
                         const std::vector<PlayerId>& order) {
  if (order.empty()) throw std::invalid_argument("empty block order");
  Block sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != x.partition.block_containing(order.front())) {
    throw std::invalid_argument("order does not enumerate a block of the partition");
  }
}

}  // namespace

double rbcc_cycle_residual(const PartitionSolutionConcept& f,
                           const PartitionGame& x,
                           const std::vector<PlayerId>& order) {
  require_block_order(x, order);
  const std::size_t k = order.size();
  if (k <= 2) return 0.0;
  // removed[m] = F on the game without order[m].
  std::vector<PayoffAllocation> removed;
  removed.reserve(k);
  for (PlayerId i : order) removed.push_back(f.evaluate(remove_player(x, i)));
  double residual = 0.0;
  for (std::size_t l = 0; l < k; ++l) {
    const PlayerId i = order[l];
    residual += removed[(l + 1) % k].at(i);
    residual -= removed[(l + k - 1) % k].at(i);
  }
  return residual;
}

PayoffAllocation solve_by_rbcc_induction(const PartitionSolutionConcept& f,
                                         const PartitionGame& x,
                                         const Tolerance& tol) {
  const PayoffAllocation fx = f.evaluate(x);
  const double n = static_cast<double>(fx.size());
  const double surplus = x.game.grand_worth() - fx.total();
  const PlayerId fresh = fresh_player(x);
  PayoffAllocation phi = PayoffAllocation::zeros(x.game);

  for (std::size_t b = 0; b < x.partition.blocks().size(); ++b) {
    const Block& block = x.partition.blocks()[b];
    const Coalition c = x.partition.block_mask(b, x.game.player_list());
    const double share =
        fx.sum_over(c) + static_cast<double>(c.size()) / n * surplus;
    const std::size_t k = block.size();
    if (k == 1) {
      phi[x.game.index_of(block.front())] = share;
      continue;
    }

    const PartitionGame ext = extend_with_null(x, block.front(), fresh);
    // gain[l][m] = F_{i_l} - F_{n'} on the extended game without i_m.
    std::vector<std::vector<double>> gain(k, std::vector<double>(k, 0.0));
    for (std::size_t m = 0; m < k; ++m) {
      const PayoffAllocation fm = f.evaluate(remove_player(ext, block[m]));
      const double null_payoff = fm.at(fresh);
      for (std::size_t l = 0; l < k; ++l) {
        if (l != m) gain[l][m] = fm.at(block[l]) - null_payoff;
      }
    }
    double forward = 0.0;   // sum_l gain(l, l+1)
    double backward = 0.0;  // sum_l gain(l, l-1)
    for (std::size_t l = 0; l < k; ++l) {
      forward += gain[l][(l + 1) % k];
      backward += gain[l][(l + k - 1) % k];
    }
    // The k consecutive differences sum to (k-1)(forward - backward).
    if (!tol.equal(forward, backward)) {
      throw InconsistentSystem(
          "consecutive differences do not close around the block of player " +
          std::to_string(block.front()) + " for " + f.name());
    }
    std::vector<double> pot(k, 0.0);
    for (std::size_t s = 0; s + 1 < k; ++s) {
      const double d = (forward - gain[s][s + 1]) - (backward - gain[s + 1][s]);
      pot[s + 1] = pot[s] + d;
    }
    double pot_sum = 0.0;
    for (double p : pot) pot_sum += p;
    const double base = (share - pot_sum) / static_cast<double>(k);
    for (std::size_t l = 0; l < k; ++l) {
      phi[x.game.index_of(block[l])] = base + pot[l];
    }
  }
  return phi;
}

// --- Adapters --------------------------------------------------------------

namespace {

std::string render_partition(const Partition& p) {
  std::string out = "{";
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) out += "|";
    for (std::size_t k = 0; k < p.blocks()[b].size(); ++k) {
      if (k > 0) out += ",";
      out += std::to_string(p.blocks()[b][k]);
    }
  }
  return out + "}";
}

class FixedPartitionRule final : public SolutionConcept::Rule {
 public:
  FixedPartitionRule(PartitionSolutionConcept f, Partition p)
      : f_(std::move(f)), p_(std::move(p)) {}
  SolutionKind kind() const override { return SolutionKind::partition_based; }
  std::string name() const override {
    return f_.name() + "@P=" + render_partition(p_);
  }
  SolutionDomain domain() const override { return f_.domain(); }
  PayoffAllocation evaluate(const Game& v) const override {
    return f_.evaluate(PartitionGame(v, p_));
  }

 private:
  PartitionSolutionConcept f_;
  Partition p_;
};

}  // namespace

SolutionConcept as_solution(PartitionSolutionConcept f, Partition p) {
  return SolutionConcept(
      std::make_shared<FixedPartitionRule>(std::move(f), std::move(p)));
}

std::vector<Partition> all_partitions(const std::vector<PlayerId>& players) {
  if (players.size() > 10) {
    throw std::invalid_argument("too many partitions to enumerate");
  }
  std::vector<Partition> out;
  for (const auto& blocks : set_partitions(Coalition::first(players.size()))) {
    out.push_back(Partition::from_coalitions(players, blocks));
  }
  return out;
}

}  // namespace tugx
