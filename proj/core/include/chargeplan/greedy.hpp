#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chargeplan/bitset.hpp"
#include "chargeplan/types.hpp"

namespace chargeplan {

struct PackItem {
  SiteId id;
  double value;   // d_i >= 0
  double weight;  // c_i > 0
};

struct PackSelection {
  std::vector<SiteId> ids;  // ascending
  double total_value = 0.0;
  double total_weight = 0.0;
};

/// Density greedy with single-item rescue and a maximality pass. The returned
/// selection fits the budget, is maximal, and its value is at least half the
/// exact optimum. Ties break toward the lower id everywhere.
PackSelection greedy_knapsack(std::span<const PackItem> items, double budget);

struct CoverCandidate {
  SiteId id;
  double cost;  // > 0
  InterestSet covers;
};

struct CoverSelection {
  std::vector<SiteId> ids;  // ascending
  double total_cost = 0.0;
};

/// Cost-effectiveness greedy followed by a redundant-set pruning pass, so the
/// result is minimal. Throws UncoverableUniverse (listing the uncoverable
/// elements) when the candidates cannot cover the universe.
CoverSelection greedy_set_cover(std::span<const CoverCandidate> cands,
                                const InterestSet& universe);

/// Covers a demand target at small cost: density prefixes are completed with
/// the cheapest single closing item, the best completion wins, and a pruning
/// pass removes redundant items. Throws UnreachableDemand when the total
/// value of all items falls short of the target.
PackSelection greedy_min_knapsack(std::span<const PackItem> items,
                                  double demand_target);

/// One (site, participant) bid in a multi-dimensional packing problem.
struct MultiDimItem {
  SiteId site;
  std::uint32_t participant;
  double value;
  std::vector<double> weights;  // one entry per budget dimension, >= 0
};

struct MultiSelection {
  std::vector<std::size_t> item_indices;  // into the input span, ascending
  double total_value = 0.0;
  std::vector<double> spend;  // per budget dimension
};

/// Multi-dimensional knapsack with at most one winner per site. Density is
/// value / sum_k(weight_k / budget_k) over positive budget dimensions; with a
/// single dimension this reduces to the greedy_knapsack ordering exactly.
MultiSelection greedy_multidim_knapsack(std::span<const MultiDimItem> items,
                                        std::span<const double> budgets);

struct DscSelection {
  std::vector<SiteId> ids;  // ascending
  double total_cost = 0.0;
};

/// Union combiner for the demand-and-set-cover problem: the set-cover
/// selection handles coverage, the min-knapsack selection handles the demand
/// floor, and their union is feasible for both. Propagates the subproblem
/// errors.
DscSelection dsc_union(std::span<const CoverCandidate> cands,
                       const InterestSet& universe,
                       std::span<const PackItem> items, double demand_target);

}  // namespace chargeplan
