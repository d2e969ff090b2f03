#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chargeplan/greedy.hpp"
#include "chargeplan/instance.hpp"

namespace chargeplan {

struct RankInput {
  SiteId id;
  double demand;
  double cost;  // > 0
  InterestSet covers;
};

struct RankEntry {
  SiteId id;
  double value;  // importance v_i, >= 0
};

/// Ranks items in increasing importance v_i = (d_i / sum_j d_j + |S_i| / |I|) / c_i,
/// where the demand pool and the universe I are taken over the supplied items.
/// A zero demand pool or empty universe zeroes the corresponding term. Ties
/// break toward the lower id.
std::vector<RankEntry> rank_items(std::span<const RankInput> items);

using KnapsackFn =
    std::function<PackSelection(std::span<const PackItem>, double)>;
using SetCoverFn =
    std::function<CoverSelection(std::span<const CoverCandidate>, const InterestSet&)>;
using RankFn = std::function<std::vector<RankEntry>(std::span<const RankInput>)>;

/// Injected subroutines; defaults are the greedy implementations.
struct IpacHooks {
  KnapsackFn knapsack;
  SetCoverFn set_cover;
  RankFn rank;

  static IpacHooks defaults();
};

/// Snapshot of the budget split at one iteration of the solve loop.
struct IpacState {
  std::vector<SiteId> chosen;  // L^p
  double packed_budget = 0.0;  // B^p
  double cover_budget = 0.0;   // B^c (+inf when the residual is uncoverable)
  double free_budget = 0.0;    // B^free = B - B^p
  InterestSet covered;         // I^p
  std::size_t iteration = 0;   // removal passes performed so far
};

/// Iterative pack-and-cover: start from a pure packing solution, then trade
/// packed items for covering budget until the residual cover fits, merge, and
/// top up with a final packing pass. Returns nullopt when no feasible
/// selection exists under the configured set-cover subroutine, which happens
/// exactly when min_feasible_budget(inst) > inst.budget.
std::optional<Solution> ipac_solve(const MpcInstance& inst,
                                   const IpacHooks& hooks = IpacHooks::defaults(),
                                   std::vector<IpacState>* trace = nullptr);

/// Baseline: solve the covering problem first, then pack the leftover budget.
std::optional<Solution> naive_solve(const MpcInstance& inst,
                                    const IpacHooks& hooks = IpacHooks::defaults());

/// Cost of greedily covering the whole universe; +inf when uncoverable.
double min_feasible_budget(const MpcInstance& inst,
                           const IpacHooks& hooks = IpacHooks::defaults());

}  // namespace chargeplan
