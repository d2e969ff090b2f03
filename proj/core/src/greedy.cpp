#include "chargeplan/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "chargeplan/errors.hpp"

namespace chargeplan {

namespace {

// value/weight density order, descending, ties to the lower id. Cross
// multiplication avoids division rounding in the comparison.
bool denser(double va, double wa, SiteId ia, double vb, double wb, SiteId ib) {
  const double lhs = va * wb;
  const double rhs = vb * wa;
  if (lhs != rhs) return lhs > rhs;
  return ia < ib;
}

PackSelection finalize_pack(std::span<const PackItem> items,
                            const std::vector<char>& taken) {
  PackSelection sel;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!taken[k]) continue;
    sel.ids.push_back(items[k].id);
    sel.total_value += items[k].value;
    sel.total_weight += items[k].weight;
  }
  std::sort(sel.ids.begin(), sel.ids.end());
  return sel;
}

}  // namespace

PackSelection greedy_knapsack(std::span<const PackItem> items, double budget) {
  std::vector<std::size_t> order;
  order.reserve(items.size());
  for (std::size_t k = 0; k < items.size(); ++k)
    if (items[k].weight <= budget) order.push_back(k);  // drop unaffordable items
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return denser(items[a].value, items[a].weight, items[a].id,
                  items[b].value, items[b].weight, items[b].id);
  });

  std::vector<char> taken(items.size(), 0);
  double spent = 0.0, fill_value = 0.0;
  for (std::size_t k : order) {
    if (spent + items[k].weight <= budget) {
      taken[k] = 1;
      spent += items[k].weight;
      fill_value += items[k].value;
    }
  }

  // Single-item rescue: the density fill alone can land below half the
  // optimum; the better of the two restores the bound.
  std::size_t best_single = items.size();
  for (std::size_t k : order) {
    if (best_single == items.size() || items[k].value > items[best_single].value ||
        (items[k].value == items[best_single].value &&
         (items[k].weight < items[best_single].weight ||
          (items[k].weight == items[best_single].weight &&
           items[k].id < items[best_single].id))))
      best_single = k;
  }
  if (best_single != items.size() && items[best_single].value > fill_value) {
    std::fill(taken.begin(), taken.end(), 0);
    taken[best_single] = 1;
    spent = items[best_single].weight;
  }

  // Maximality pass (a no-op after a full density fill).
  for (std::size_t k : order) {
    if (!taken[k] && spent + items[k].weight <= budget) {
      taken[k] = 1;
      spent += items[k].weight;
    }
  }
  return finalize_pack(items, taken);
}

CoverSelection greedy_set_cover(std::span<const CoverCandidate> cands,
                                const InterestSet& universe) {
  InterestSet remaining = universe;
  std::vector<char> taken(cands.size(), 0);
  std::vector<std::size_t> picked;

  std::size_t left = remaining.count();
  while (left > 0) {
    // Cost-effectiveness greedy: minimize cost / newly-covered, ties to the
    // lower id. Comparison by cross multiplication with integer gain counts.
    std::size_t best = cands.size();
    std::size_t best_new = 0;
    double best_cost = 0.0;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (taken[k]) continue;
      const std::size_t gain = left - remaining.count_not_in(cands[k].covers);
      if (gain == 0) continue;
      if (best == cands.size()) {
        best = k;
        best_new = gain;
        best_cost = cands[k].cost;
        continue;
      }
      const double lhs = cands[k].cost * static_cast<double>(best_new);
      const double rhs = best_cost * static_cast<double>(gain);
      if (lhs < rhs || (lhs == rhs && cands[k].id < cands[best].id)) {
        best = k;
        best_new = gain;
        best_cost = cands[k].cost;
      }
    }
    if (best == cands.size())
      throw UncoverableUniverse(remaining.to_indices());
    taken[best] = 1;
    picked.push_back(best);
    remaining.subtract(cands[best].covers);
    left -= best_new;
  }

  // Minimality: drop any set whose removal keeps the universe covered,
  // most expensive first.
  std::vector<std::size_t> prune_order = picked;
  std::sort(prune_order.begin(), prune_order.end(), [&](std::size_t a, std::size_t b) {
    if (cands[a].cost != cands[b].cost) return cands[a].cost > cands[b].cost;
    return cands[a].id < cands[b].id;
  });
  for (std::size_t k : prune_order) {
    InterestSet covered(universe.universe_size());
    for (std::size_t j : picked)
      if (j != k && taken[j]) covered |= cands[j].covers;
    if (covered.contains_all(universe)) taken[k] = 0;
  }

  CoverSelection sel;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (!taken[k]) continue;
    sel.ids.push_back(cands[k].id);
    sel.total_cost += cands[k].cost;
  }
  std::sort(sel.ids.begin(), sel.ids.end());
  return sel;
}

PackSelection greedy_min_knapsack(std::span<const PackItem> items,
                                  double demand_target) {
  const double available =
      std::accumulate(items.begin(), items.end(), 0.0,
                      [](double acc, const PackItem& it) { return acc + it.value; });
  if (available < demand_target) throw UnreachableDemand(demand_target, available);

  std::vector<char> taken(items.size(), 0);
  if (demand_target > 0.0) {
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return denser(items[a].value, items[a].weight, items[a].id,
                    items[b].value, items[b].weight, items[b].id);
    });

    // Density prefix until the target is met.
    std::size_t t = 0;
    double prefix_value = 0.0, prefix_cost = 0.0;
    while (prefix_value < demand_target) {
      prefix_value += items[order[t]].value;
      prefix_cost += items[order[t]].weight;
      ++t;
    }

    // Candidate completions: each shorter prefix plus the cheapest single
    // item that closes its remaining gap. This rescues the fat-tail cases
    // where the plain density prefix overshoots with an expensive item.
    double best_cost = prefix_cost;
    std::size_t best_k = t;        // prefix length
    std::size_t best_closer = items.size();
    double running_value = 0.0, running_cost = 0.0;
    std::vector<char> in_prefix(items.size(), 0);
    for (std::size_t k = 0; k < t; ++k) {
      const double need = demand_target - running_value;
      std::size_t closer = items.size();
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (in_prefix[j] || items[j].value < need) continue;
        if (closer == items.size() || items[j].weight < items[closer].weight ||
            (items[j].weight == items[closer].weight && items[j].id < items[closer].id))
          closer = j;
      }
      if (closer != items.size() && running_cost + items[closer].weight < best_cost) {
        best_cost = running_cost + items[closer].weight;
        best_k = k;
        best_closer = closer;
      }
      in_prefix[order[k]] = 1;
      running_value += items[order[k]].value;
      running_cost += items[order[k]].weight;
    }

    for (std::size_t k = 0; k < best_k; ++k) taken[order[k]] = 1;
    if (best_closer != items.size()) taken[best_closer] = 1;

    // Redundancy prune, most expensive first.
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < items.size(); ++k)
      if (taken[k]) chosen.push_back(k);
    std::sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) {
      if (items[a].weight != items[b].weight) return items[a].weight > items[b].weight;
      return items[a].id < items[b].id;
    });
    double total_value = 0.0;
    for (std::size_t k : chosen) total_value += items[k].value;
    for (std::size_t k : chosen) {
      if (total_value - items[k].value >= demand_target) {
        taken[k] = 0;
        total_value -= items[k].value;
      }
    }
  }
  return finalize_pack(items, taken);
}

MultiSelection greedy_multidim_knapsack(std::span<const MultiDimItem> items,
                                        std::span<const double> budgets) {
  const std::size_t dims = budgets.size();

  auto fits_alone = [&](const MultiDimItem& it) {
    for (std::size_t d = 0; d < dims; ++d)
      if (it.weights[d] > budgets[d]) return false;
    return true;
  };

  // Normalized multi-resource density denominator. With a single dimension
  // the budget scaling cancels in every density comparison, so the raw
  // weight is used and the ordering matches greedy_knapsack bit for bit.
  auto denominator = [&](const MultiDimItem& it) {
    if (dims == 1) return it.weights[0];
    double den = 0.0;
    for (std::size_t d = 0; d < dims; ++d)
      if (budgets[d] > 0.0) den += it.weights[d] / budgets[d];
    return den;
  };

  std::vector<std::size_t> order;
  std::vector<double> den(items.size(), 0.0);
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!fits_alone(items[k])) continue;
    den[k] = denominator(items[k]);
    order.push_back(k);
  }
  auto before = [&](std::size_t a, std::size_t b) {
    // Zero denominator = free item, sorts first by value.
    if (den[a] == 0.0 || den[b] == 0.0) {
      if ((den[a] == 0.0) != (den[b] == 0.0)) return den[a] == 0.0;
      if (items[a].value != items[b].value) return items[a].value > items[b].value;
    } else {
      const double lhs = items[a].value * den[b];
      const double rhs = items[b].value * den[a];
      if (lhs != rhs) return lhs > rhs;
    }
    if (items[a].site != items[b].site) return items[a].site < items[b].site;
    return items[a].participant < items[b].participant;
  };
  std::sort(order.begin(), order.end(), before);

  std::vector<double> spend(dims, 0.0);
  std::vector<char> taken(items.size(), 0);
  std::unordered_map<SiteId, char> site_used;
  auto fits_now = [&](const MultiDimItem& it) {
    if (site_used.count(it.site)) return false;
    for (std::size_t d = 0; d < dims; ++d)
      if (spend[d] + it.weights[d] > budgets[d]) return false;
    return true;
  };
  auto take = [&](std::size_t k) {
    taken[k] = 1;
    site_used[items[k].site] = 1;
    for (std::size_t d = 0; d < dims; ++d) spend[d] += items[k].weights[d];
  };

  double fill_value = 0.0;
  for (std::size_t k : order) {
    if (fits_now(items[k])) {
      take(k);
      fill_value += items[k].value;
    }
  }

  // Single-item rescue, mirroring greedy_knapsack.
  std::size_t best_single = items.size();
  for (std::size_t k : order) {
    if (best_single == items.size() || items[k].value > items[best_single].value ||
        (items[k].value == items[best_single].value &&
         (den[k] < den[best_single] ||
          (den[k] == den[best_single] &&
           (items[k].site < items[best_single].site ||
            (items[k].site == items[best_single].site &&
             items[k].participant < items[best_single].participant))))))
      best_single = k;
  }
  if (best_single != items.size() && items[best_single].value > fill_value) {
    std::fill(taken.begin(), taken.end(), 0);
    std::fill(spend.begin(), spend.end(), 0.0);
    site_used.clear();
    take(best_single);
  }

  // Maximality pass.
  for (std::size_t k : order) {
    if (!taken[k] && fits_now(items[k])) take(k);
  }

  MultiSelection sel;
  sel.spend.assign(dims, 0.0);
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!taken[k]) continue;
    sel.item_indices.push_back(k);
    sel.total_value += items[k].value;
    for (std::size_t d = 0; d < dims; ++d) sel.spend[d] += items[k].weights[d];
  }
  return sel;
}

DscSelection dsc_union(std::span<const CoverCandidate> cands,
                       const InterestSet& universe,
                       std::span<const PackItem> items, double demand_target) {
  const CoverSelection sc = greedy_set_cover(cands, universe);
  const PackSelection kp = greedy_min_knapsack(items, demand_target);

  std::unordered_map<SiteId, double> cost_of;
  for (const CoverCandidate& c : cands) cost_of.emplace(c.id, c.cost);
  for (const PackItem& it : items) cost_of.emplace(it.id, it.weight);

  std::vector<SiteId> ids = sc.ids;
  ids.insert(ids.end(), kp.ids.begin(), kp.ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  DscSelection out;
  out.ids = std::move(ids);
  for (SiteId id : out.ids) out.total_cost += cost_of.at(id);
  return out;
}

}  // namespace chargeplan
