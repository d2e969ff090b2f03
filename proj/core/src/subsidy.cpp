#include "chargeplan/subsidy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "chargeplan/errors.hpp"

namespace chargeplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint32_t kUnassigned = 0;  // winner codes: 0 none, else participant+1

struct BidTable {
  // bids[site] = (participant, subsidy, price), government first, providers
  // in index order.
  struct Entry {
    std::uint32_t participant;
    double subsidy;
    double price;
  };
  std::vector<std::vector<Entry>> bids;
};

BidTable build_bids(const SubsidyInstance& s) {
  BidTable t;
  t.bids.resize(s.base.site_count);
  for (std::size_t i = 0; i < s.base.site_count; ++i)
    t.bids[i].push_back({kGovernment, s.base.cost[i], 0.0});
  for (std::size_t j = 0; j < s.providers.size(); ++j)
    for (const ProviderBid& b : s.providers[j].bids)
      t.bids[b.site].push_back({static_cast<std::uint32_t>(j + 1), b.subsidy, b.price});
  return t;
}

double normalized_cost(double subsidy, double price, double gov_budget,
                       double provider_budget, bool is_gov) {
  double norm = 0.0;
  if (gov_budget > 0.0) norm += subsidy / gov_budget;
  if (!is_gov && provider_budget > 0.0) norm += price / provider_budget;
  return norm;
}

}  // namespace

Selection SubsidyOutcome::selected_sites(std::size_t site_count) const {
  Selection sel(site_count, 0);
  for (const SubsidyAward& a : awards) sel[a.site] = 1;
  return sel;
}

SubsidyHooks SubsidyHooks::defaults() {
  SubsidyHooks h;
  h.multi_knapsack = [](std::span<const MultiDimItem> items,
                        std::span<const double> budgets) {
    return greedy_multidim_knapsack(items, budgets);
  };
  h.set_cover = [](std::span<const CoverCandidate> cands, const InterestSet& universe) {
    return greedy_set_cover(cands, universe);
  };
  // Delegates to rank_items so the government-only case orders identically
  // to the single-budget solve (sites are unique among chosen bids).
  h.rank = [](std::span<const SubsidyRankInput> inputs) {
    std::vector<RankInput> rows;
    rows.reserve(inputs.size());
    std::map<SiteId, std::size_t> back;
    for (const SubsidyRankInput& in : inputs) {
      rows.push_back({in.site, in.demand, in.normalized_cost, in.covers});
      back[in.site] = in.bid_index;
    }
    std::vector<std::size_t> order;
    order.reserve(rows.size());
    for (const RankEntry& e : rank_items(rows)) order.push_back(back.at(e.id));
    return order;
  };
  return h;
}

std::optional<SubsidyOutcome> subsidy_solve(const SubsidyInstance& s,
                                            const SubsidyHooks& hooks) {
  const MpcInstance& base = s.base;
  const std::size_t n = base.site_count;
  const std::size_t providers = s.providers.size();
  const std::size_t dims = 1 + providers;
  const bool gov_only = providers == 0;

  // One MultiDimItem per bid; dimension 0 is the government grant budget.
  std::vector<MultiDimItem> items;
  const BidTable table = build_bids(s);
  for (std::size_t i = 0; i < n; ++i) {
    for (const BidTable::Entry& b : table.bids[i]) {
      MultiDimItem item;
      item.site = static_cast<SiteId>(i);
      item.participant = b.participant;
      item.value = base.demand[i];
      item.weights.assign(dims, 0.0);
      item.weights[0] = b.subsidy;
      if (b.participant != kGovernment) item.weights[b.participant] = b.price;
      items.push_back(std::move(item));
    }
  }
  std::vector<double> budgets(dims, 0.0);
  budgets[0] = base.budget;
  for (std::size_t j = 0; j < providers; ++j) budgets[j + 1] = s.providers[j].budget;

  // winner[site]: 0 = unselected, else participant + 1.
  std::vector<std::uint32_t> winner(n, kUnassigned);
  auto award_of = [&](std::size_t i) -> BidTable::Entry {
    const std::uint32_t participant = winner[i] - 1;
    for (const BidTable::Entry& b : table.bids[i])
      if (b.participant == participant) return b;
    return {kGovernment, base.cost[i], 0.0};  // unreachable for valid winners
  };

  for (std::size_t idx : hooks.multi_knapsack(items, budgets).item_indices)
    winner[items[idx].site] = items[idx].participant + 1;

  const InterestSet universe = base.full_universe();
  struct CoverAssignment {
    SiteId site;
    BidTable::Entry bid;
  };
  std::vector<CoverAssignment> pending_cover;

  for (;;) {
    InterestSet covered(base.interest_count);
    double gov_packed = 0.0;
    std::vector<double> provider_packed(providers, 0.0);
    std::vector<std::size_t> chosen_sites;
    for (std::size_t i = 0; i < n; ++i) {
      if (winner[i] == kUnassigned) continue;
      covered |= base.cover_sets[i];
      const BidTable::Entry b = award_of(i);
      gov_packed += b.subsidy;
      if (b.participant != kGovernment) provider_packed[b.participant - 1] += b.price;
      chosen_sites.push_back(i);
    }
    const double free_budget = base.budget - gov_packed;

    InterestSet residual = universe;
    residual.subtract(covered);

    pending_cover.clear();
    double cover_cost = 0.0;
    if (!residual.empty()) {
      // Static covering candidates: each unselected site at its currently
      // cheapest budget-feasible subsidy.
      std::vector<double> remaining(providers);
      for (std::size_t j = 0; j < providers; ++j)
        remaining[j] = s.providers[j].budget - provider_packed[j];

      auto cheapest_bid = [&](std::size_t i,
                              const std::vector<double>& room) -> BidTable::Entry {
        BidTable::Entry best = table.bids[i].front();  // government, always feasible
        for (const BidTable::Entry& b : table.bids[i]) {
          if (b.participant != kGovernment && b.price > room[b.participant - 1])
            continue;
          if (b.subsidy < best.subsidy ||
              (b.subsidy == best.subsidy && b.participant < best.participant))
            best = b;
        }
        return best;
      };

      std::vector<CoverCandidate> cands;
      for (std::size_t i = 0; i < n; ++i) {
        if (winner[i] != kUnassigned) continue;
        cands.push_back({static_cast<SiteId>(i), cheapest_bid(i, remaining).subsidy,
                         base.cover_sets[i]});
      }
      try {
        const CoverSelection sc = hooks.set_cover(cands, residual);
        // Sequential assignment so several covering sites cannot jointly
        // overrun one provider's budget.
        for (SiteId site : sc.ids) {
          const BidTable::Entry b = cheapest_bid(site, remaining);
          if (b.participant != kGovernment) remaining[b.participant - 1] -= b.price;
          pending_cover.push_back({site, b});
          cover_cost += b.subsidy;
        }
      } catch (const UncoverableUniverse&) {
        cover_cost = kInf;
      }
    }

    if (cover_cost <= free_budget) break;

    if (chosen_sites.empty()) return std::nullopt;

    std::vector<SubsidyRankInput> rank_inputs;
    rank_inputs.reserve(chosen_sites.size());
    for (std::size_t i : chosen_sites) {
      const BidTable::Entry b = award_of(i);
      const double norm =
          gov_only ? b.subsidy
                   : normalized_cost(b.subsidy, b.price, base.budget,
                                     b.participant == kGovernment
                                         ? 0.0
                                         : s.providers[b.participant - 1].budget,
                                     b.participant == kGovernment);
      rank_inputs.push_back({i, static_cast<SiteId>(i), base.demand[i], norm,
                             base.cover_sets[i]});
    }
    const std::vector<std::size_t> ranked = hooks.rank(rank_inputs);

    if (cover_cost <= base.budget) {
      double freed = free_budget;
      for (std::size_t site : ranked) {
        if (freed >= cover_cost) break;
        freed += award_of(site).subsidy;
        winner[site] = kUnassigned;
      }
    } else {
      winner[ranked.front()] = kUnassigned;
    }
  }

  for (const CoverAssignment& a : pending_cover)
    winner[a.site] = a.bid.participant + 1;

  // Final packing pass over the unallocated sites and leftover budgets.
  {
    double gov_spent = 0.0;
    std::vector<double> provider_spent(providers, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (winner[i] == kUnassigned) continue;
      const BidTable::Entry b = award_of(i);
      gov_spent += b.subsidy;
      if (b.participant != kGovernment) provider_spent[b.participant - 1] += b.price;
    }
    std::vector<MultiDimItem> rest;
    for (const MultiDimItem& item : items)
      if (winner[item.site] == kUnassigned) rest.push_back(item);
    std::vector<double> leftover(dims, 0.0);
    leftover[0] = base.budget - gov_spent;
    for (std::size_t j = 0; j < providers; ++j)
      leftover[j + 1] = s.providers[j].budget - provider_spent[j];
    for (std::size_t idx : hooks.multi_knapsack(rest, leftover).item_indices)
      winner[rest[idx].site] = rest[idx].participant + 1;
  }

  SubsidyOutcome out;
  out.covered = InterestSet(base.interest_count);
  out.provider_spend.assign(providers, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (winner[i] == kUnassigned) continue;
    const BidTable::Entry b = award_of(i);
    out.awards.push_back({static_cast<SiteId>(i), b.participant, b.subsidy, b.price});
    out.government_spend += b.subsidy;
    if (b.participant != kGovernment) out.provider_spend[b.participant - 1] += b.price;
    out.total_demand += base.demand[i];
    out.covered |= base.cover_sets[i];
  }
  return out;
}

ValidationReport validate_outcome(const SubsidyInstance& s, const SubsidyOutcome& out) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::string msg) {
    report.violations.push_back({kind, Violation::kNoSite, std::move(msg)});
  };
  constexpr double kTol = 1e-9;
  const BidTable table = build_bids(s);

  std::vector<char> seen(s.base.site_count, 0);
  double gov = 0.0;
  std::vector<double> provider(s.providers.size(), 0.0);
  InterestSet covered(s.base.interest_count);

  for (const SubsidyAward& a : out.awards) {
    if (a.site >= s.base.site_count) {
      add(Violation::Kind::LengthMismatch, "award references unknown site");
      continue;
    }
    if (seen[a.site]++)
      add(Violation::Kind::WinnerConflict,
          "site " + std::to_string(a.site) + " has multiple winners");
    bool matched = false;
    for (const BidTable::Entry& b : table.bids[a.site])
      if (b.participant == a.participant && b.subsidy == a.subsidy &&
          b.price == a.price)
        matched = true;
    if (!matched)
      add(Violation::Kind::WinnerConflict,
          "award at site " + std::to_string(a.site) + " matches no submitted bid");
    gov += a.subsidy;
    if (a.participant != kGovernment) {
      if (a.participant - 1 >= provider.size()) {
        add(Violation::Kind::WinnerConflict, "award names unknown participant");
        continue;
      }
      provider[a.participant - 1] += a.price;
    }
    covered |= s.base.cover_sets[a.site];
  }

  if (gov > s.base.budget + kTol)
    add(Violation::Kind::BudgetBreach, "government spend exceeds the grant budget");
  for (std::size_t j = 0; j < provider.size(); ++j)
    if (provider[j] > s.providers[j].budget + kTol)
      add(Violation::Kind::BudgetBreach,
          "provider " + std::to_string(j + 1) + " spend exceeds its budget");
  if (covered.count() != s.base.interest_count)
    add(Violation::Kind::CoverageBreach, "outcome does not cover every interest");
  if (std::abs(gov - out.government_spend) > kTol)
    add(Violation::Kind::BudgetBreach, "government spend accounting mismatch");
  return report;
}

}  // namespace chargeplan
