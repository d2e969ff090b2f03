#include "chargeplan/ipac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chargeplan/errors.hpp"

namespace chargeplan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<RankEntry> rank_items(std::span<const RankInput> items) {
  double pool = 0.0;
  for (const RankInput& it : items) pool += it.demand;

  InterestSet universe;
  if (!items.empty()) {
    universe = InterestSet(items.front().covers.universe_size());
    for (const RankInput& it : items) universe |= it.covers;
  }
  const double universe_count = static_cast<double>(universe.count());

  std::vector<RankEntry> entries;
  entries.reserve(items.size());
  for (const RankInput& it : items) {
    const double demand_term = pool > 0.0 ? it.demand / pool : 0.0;
    const double cover_term =
        universe_count > 0.0 ? static_cast<double>(it.covers.count()) / universe_count : 0.0;
    entries.push_back({it.id, (demand_term + cover_term) / it.cost});
  }
  std::sort(entries.begin(), entries.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.id < b.id;
  });
  return entries;
}

IpacHooks IpacHooks::defaults() {
  IpacHooks h;
  h.knapsack = [](std::span<const PackItem> items, double budget) {
    return greedy_knapsack(items, budget);
  };
  h.set_cover = [](std::span<const CoverCandidate> cands, const InterestSet& universe) {
    return greedy_set_cover(cands, universe);
  };
  h.rank = [](std::span<const RankInput> items) { return rank_items(items); };
  return h;
}

namespace {

// Pack items for every site not yet selected.
std::vector<PackItem> unselected_items(const MpcInstance& inst, const Selection& chosen) {
  std::vector<PackItem> items;
  for (std::size_t i = 0; i < inst.site_count; ++i) {
    if (chosen[i]) continue;
    items.push_back({static_cast<SiteId>(i), inst.demand[i], inst.cost[i]});
  }
  return items;
}

}  // namespace

std::optional<Solution> ipac_solve(const MpcInstance& inst, const IpacHooks& hooks,
                                   std::vector<IpacState>* trace) {
  const std::size_t n = inst.site_count;
  Selection chosen(n, 0);

  {
    const std::vector<PackItem> all = unselected_items(inst, chosen);
    for (SiteId id : hooks.knapsack(all, inst.budget).ids) chosen[id] = 1;
  }

  const InterestSet universe = inst.full_universe();
  std::size_t passes = 0;
  CoverSelection last_cover;

  for (;;) {
    InterestSet covered(inst.interest_count);
    double packed_budget = 0.0;
    std::vector<SiteId> chosen_ids;
    for (std::size_t i = 0; i < n; ++i) {
      if (!chosen[i]) continue;
      covered |= inst.cover_sets[i];
      packed_budget += inst.cost[i];
      chosen_ids.push_back(static_cast<SiteId>(i));
    }
    const double free_budget = inst.budget - packed_budget;

    InterestSet residual = universe;
    residual.subtract(covered);

    double cover_budget = 0.0;
    last_cover = CoverSelection{};
    if (!residual.empty()) {
      std::vector<CoverCandidate> cands;
      for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i]) continue;
        cands.push_back({static_cast<SiteId>(i), inst.cost[i], inst.cover_sets[i]});
      }
      try {
        last_cover = hooks.set_cover(cands, residual);
        cover_budget = last_cover.total_cost;
      } catch (const UncoverableUniverse&) {
        cover_budget = kInf;
      }
    }

    if (trace)
      trace->push_back({chosen_ids, packed_budget, cover_budget, free_budget,
                        covered, passes});

    if (cover_budget <= free_budget) break;  // merge below

    // Infeasible only once everything packed has been traded away: at that
    // point the covering run above was the whole-universe one, so failing
    // here coincides with min_feasible_budget > B.
    if (chosen_ids.empty()) return std::nullopt;

    std::vector<RankInput> pool;
    pool.reserve(chosen_ids.size());
    for (SiteId id : chosen_ids)
      pool.push_back({id, inst.demand[id], inst.cost[id], inst.cover_sets[id]});
    const std::vector<RankEntry> ranked = hooks.rank(pool);

    if (cover_budget <= inst.budget) {
      // Free budget until the pending cover fits, least important first.
      double freed = free_budget;
      for (const RankEntry& e : ranked) {
        if (freed >= cover_budget) break;
        chosen[e.id] = 0;
        freed += inst.cost[e.id];
      }
    } else {
      // The residual cover is too expensive for the whole budget; shed one
      // item at a time so the cover is re-evaluated at every step.
      chosen[ranked.front().id] = 0;
    }
    ++passes;
  }

  for (SiteId id : last_cover.ids) chosen[id] = 1;

  // Final packing pass over the unallocated items and leftover budget.
  double spent = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (chosen[i]) spent += inst.cost[i];
  const std::vector<PackItem> rest = unselected_items(inst, chosen);
  for (SiteId id : hooks.knapsack(rest, inst.budget - spent).ids) chosen[id] = 1;

  return score_solution(inst, chosen);
}

std::optional<Solution> naive_solve(const MpcInstance& inst, const IpacHooks& hooks) {
  const std::size_t n = inst.site_count;
  Selection chosen(n, 0);

  const InterestSet universe = inst.full_universe();
  if (!universe.empty()) {
    std::vector<CoverCandidate> cands;
    for (std::size_t i = 0; i < n; ++i)
      cands.push_back({static_cast<SiteId>(i), inst.cost[i], inst.cover_sets[i]});
    CoverSelection cover;
    try {
      cover = hooks.set_cover(cands, universe);
    } catch (const UncoverableUniverse&) {
      return std::nullopt;
    }
    if (cover.total_cost > inst.budget) return std::nullopt;
    for (SiteId id : cover.ids) chosen[id] = 1;
  }

  double spent = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (chosen[i]) spent += inst.cost[i];
  const std::vector<PackItem> rest = unselected_items(inst, chosen);
  for (SiteId id : hooks.knapsack(rest, inst.budget - spent).ids) chosen[id] = 1;

  return score_solution(inst, chosen);
}

double min_feasible_budget(const MpcInstance& inst, const IpacHooks& hooks) {
  const InterestSet universe = inst.full_universe();
  if (universe.empty()) return 0.0;
  std::vector<CoverCandidate> cands;
  for (std::size_t i = 0; i < inst.site_count; ++i)
    cands.push_back({static_cast<SiteId>(i), inst.cost[i], inst.cover_sets[i]});
  try {
    return hooks.set_cover(cands, universe).total_cost;
  } catch (const UncoverableUniverse&) {
    return kInf;
  }
}

}  // namespace chargeplan
