#include "chargeplan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

#include "chargeplan/errors.hpp"

namespace chargeplan {

namespace {

// Lexicographic order on ascending selected-index sequences: {0,2} < {1},
// and a strict prefix precedes its extensions.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

void guard_size(std::size_t n, const char* what) {
  if (n > kMaxExactItems)
    throw TooLarge(std::string(what) + ": " + std::to_string(n) +
                   " items exceeds the exhaustive guard of " +
                   std::to_string(kMaxExactItems));
}

}  // namespace

std::optional<Solution> exact_mpc(const MpcInstance& inst) {
  guard_size(inst.site_count, "exact_mpc");
  const std::uint32_t n = static_cast<std::uint32_t>(inst.site_count);
  const std::uint64_t limit = std::uint64_t{1} << n;

  bool found = false;
  std::uint32_t best_mask = 0;
  double best_demand = -1.0, best_cost = 0.0;

  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    double cost = 0.0, demand = 0.0;
    InterestSet covered(inst.interest_count);
    for (std::uint32_t rest = static_cast<std::uint32_t>(mask); rest;
         rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      cost += inst.cost[i];
      demand += inst.demand[i];
      covered |= inst.cover_sets[i];
    }
    if (cost > inst.budget) continue;
    if (covered.count() != inst.interest_count) continue;
    const std::uint32_t m = static_cast<std::uint32_t>(mask);
    if (!found || demand > best_demand ||
        (demand == best_demand &&
         (cost < best_cost || (cost == best_cost && lex_less(m, best_mask))))) {
      found = true;
      best_mask = m;
      best_demand = demand;
      best_cost = cost;
    }
  }
  if (!found) return std::nullopt;

  Selection sel(inst.site_count, 0);
  for (std::uint32_t rest = best_mask; rest; rest &= rest - 1)
    sel[static_cast<std::size_t>(std::countr_zero(rest))] = 1;
  return score_solution(inst, sel);
}

std::optional<CoverSelection> exact_cover(std::span<const CoverCandidate> cands,
                                          const InterestSet& universe) {
  guard_size(cands.size(), "exact_cover");
  const std::uint32_t n = static_cast<std::uint32_t>(cands.size());
  const std::uint64_t limit = std::uint64_t{1} << n;

  bool found = false;
  std::uint32_t best_mask = 0;
  double best_cost = 0.0;

  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    double cost = 0.0;
    InterestSet covered(universe.universe_size());
    for (std::uint32_t rest = static_cast<std::uint32_t>(mask); rest;
         rest &= rest - 1) {
      const int k = std::countr_zero(rest);
      cost += cands[k].cost;
      covered |= cands[k].covers;
    }
    if (!covered.contains_all(universe)) continue;
    const std::uint32_t m = static_cast<std::uint32_t>(mask);
    if (!found || cost < best_cost ||
        (cost == best_cost && lex_less(m, best_mask))) {
      found = true;
      best_mask = m;
      best_cost = cost;
    }
  }
  if (!found) return std::nullopt;

  CoverSelection sel;
  for (std::uint32_t rest = best_mask; rest; rest &= rest - 1) {
    const int k = std::countr_zero(rest);
    sel.ids.push_back(cands[k].id);
    sel.total_cost += cands[k].cost;
  }
  std::sort(sel.ids.begin(), sel.ids.end());
  return sel;
}

PackSelection exact_pack(std::span<const PackItem> items, double limit,
                         PackMode mode) {
  guard_size(items.size(), "exact_pack");
  if (mode == PackMode::MinCostToTarget) {
    const double available =
        std::accumulate(items.begin(), items.end(), 0.0,
                        [](double acc, const PackItem& it) { return acc + it.value; });
    if (available < limit) throw UnreachableDemand(limit, available);
  }

  const std::uint32_t n = static_cast<std::uint32_t>(items.size());
  const std::uint64_t end = std::uint64_t{1} << n;

  bool found = false;
  std::uint32_t best_mask = 0;
  double best_value = 0.0, best_weight = 0.0;

  for (std::uint64_t mask = 0; mask < end; ++mask) {
    double value = 0.0, weight = 0.0;
    for (std::uint32_t rest = static_cast<std::uint32_t>(mask); rest;
         rest &= rest - 1) {
      const int k = std::countr_zero(rest);
      value += items[k].value;
      weight += items[k].weight;
    }
    const std::uint32_t m = static_cast<std::uint32_t>(mask);
    if (mode == PackMode::MaxValue) {
      if (weight > limit) continue;
      if (!found || value > best_value ||
          (value == best_value &&
           (weight < best_weight || (weight == best_weight && lex_less(m, best_mask))))) {
        found = true;
        best_mask = m;
        best_value = value;
        best_weight = weight;
      }
    } else {
      if (value < limit) continue;
      if (!found || weight < best_weight ||
          (weight == best_weight && lex_less(m, best_mask))) {
        found = true;
        best_mask = m;
        best_value = value;
        best_weight = weight;
      }
    }
  }

  PackSelection sel;
  if (!found) return sel;  // MaxValue with nothing affordable -> empty
  for (std::uint32_t rest = best_mask; rest; rest &= rest - 1) {
    const int k = std::countr_zero(rest);
    sel.ids.push_back(items[k].id);
    sel.total_value += items[k].value;
    sel.total_weight += items[k].weight;
  }
  std::sort(sel.ids.begin(), sel.ids.end());
  return sel;
}

std::optional<DscSelection> exact_dsc(std::span<const CoverCandidate> cands,
                                      const InterestSet& universe,
                                      std::span<const PackItem> items,
                                      double demand_target) {
  // Merge both views of the site list into one ground set.
  struct Entry {
    SiteId id;
    double cost = 0.0;
    double value = 0.0;
    InterestSet covers;
  };
  std::map<SiteId, Entry> merged;
  for (const CoverCandidate& c : cands) {
    Entry& e = merged[c.id];
    e.id = c.id;
    e.cost = c.cost;
    e.covers = c.covers;
  }
  for (const PackItem& it : items) {
    Entry& e = merged[it.id];
    e.id = it.id;
    e.cost = it.weight;
    e.value = it.value;
    if (e.covers.universe_size() == 0) e.covers = InterestSet(universe.universe_size());
  }
  std::vector<Entry> ground;
  ground.reserve(merged.size());
  for (auto& [id, e] : merged) ground.push_back(std::move(e));
  guard_size(ground.size(), "exact_dsc");

  const std::uint32_t n = static_cast<std::uint32_t>(ground.size());
  const std::uint64_t end = std::uint64_t{1} << n;
  bool found = false;
  std::uint32_t best_mask = 0;
  double best_cost = 0.0;

  for (std::uint64_t mask = 0; mask < end; ++mask) {
    double cost = 0.0, value = 0.0;
    InterestSet covered(universe.universe_size());
    for (std::uint32_t rest = static_cast<std::uint32_t>(mask); rest;
         rest &= rest - 1) {
      const int k = std::countr_zero(rest);
      cost += ground[k].cost;
      value += ground[k].value;
      covered |= ground[k].covers;
    }
    if (value < demand_target || !covered.contains_all(universe)) continue;
    const std::uint32_t m = static_cast<std::uint32_t>(mask);
    if (!found || cost < best_cost ||
        (cost == best_cost && lex_less(m, best_mask))) {
      found = true;
      best_mask = m;
      best_cost = cost;
    }
  }
  if (!found) return std::nullopt;

  DscSelection sel;
  for (std::uint32_t rest = best_mask; rest; rest &= rest - 1)
    sel.ids.push_back(ground[static_cast<std::size_t>(std::countr_zero(rest))].id);
  std::sort(sel.ids.begin(), sel.ids.end());
  sel.total_cost = best_cost;
  return sel;
}

std::optional<SubsidyOutcome> exact_subsidy(const SubsidyInstance& s) {
  const std::size_t n = s.base.site_count;
  const std::size_t participants = s.providers.size() + 1;
  const std::size_t bases = participants + 1;  // plus "not selected"

  double states = 1.0;
  for (std::size_t i = 0; i < n; ++i) states *= static_cast<double>(bases);
  if (states > static_cast<double>(1 << 22))
    throw TooLarge("exact_subsidy: assignment space too large");

  // bid[i][j] = (subsidy, price) if participant j bid on site i.
  struct Bid {
    bool present = false;
    double subsidy = 0.0, price = 0.0;
  };
  std::vector<std::vector<Bid>> bids(n, std::vector<Bid>(participants));
  for (std::size_t i = 0; i < n; ++i)
    bids[i][kGovernment] = {true, s.base.cost[i], 0.0};
  for (std::size_t j = 0; j < s.providers.size(); ++j)
    for (const ProviderBid& b : s.providers[j].bids)
      bids[b.site][j + 1] = {true, b.subsidy, b.price};

  std::vector<std::size_t> digits(n, 0);  // 0 = unselected, else participant+1
  std::vector<std::size_t> best;
  bool found = false;
  double best_demand = -1.0, best_subsidy = 0.0;

  for (;;) {
    bool valid = true;
    double demand = 0.0, gov = 0.0;
    std::vector<double> provider_spend(s.providers.size(), 0.0);
    InterestSet covered(s.base.interest_count);
    for (std::size_t i = 0; i < n && valid; ++i) {
      if (digits[i] == 0) continue;
      const std::size_t j = digits[i] - 1;
      if (!bids[i][j].present) {
        valid = false;
        break;
      }
      demand += s.base.demand[i];
      gov += bids[i][j].subsidy;
      if (j != kGovernment) provider_spend[j - 1] += bids[i][j].price;
      covered |= s.base.cover_sets[i];
    }
    if (valid && gov <= s.base.budget &&
        covered.count() == s.base.interest_count) {
      for (std::size_t j = 0; j < s.providers.size(); ++j)
        if (provider_spend[j] > s.providers[j].budget) valid = false;
      if (valid &&
          (!found || demand > best_demand ||
           (demand == best_demand &&
            (gov < best_subsidy ||
             (gov == best_subsidy && digits < best))))) {
        found = true;
        best = digits;
        best_demand = demand;
        best_subsidy = gov;
      }
    }

    // Mixed-radix increment.
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == bases) digits[pos++] = 0;
    if (pos == n) break;
  }
  if (!found) return std::nullopt;

  SubsidyOutcome out;
  out.covered = InterestSet(s.base.interest_count);
  out.provider_spend.assign(s.providers.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i] == 0) continue;
    const std::size_t j = best[i] - 1;
    out.awards.push_back({static_cast<SiteId>(i), static_cast<std::uint32_t>(j),
                          bids[i][j].subsidy, bids[i][j].price});
    out.government_spend += bids[i][j].subsidy;
    if (j != kGovernment) out.provider_spend[j - 1] += bids[i][j].price;
    out.total_demand += s.base.demand[i];
    out.covered |= s.base.cover_sets[i];
  }
  return out;
}

}  // namespace chargeplan
