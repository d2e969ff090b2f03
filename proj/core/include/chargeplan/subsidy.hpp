#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chargeplan/greedy.hpp"
#include "chargeplan/instance.hpp"
#include "chargeplan/ipac.hpp"

namespace chargeplan {

/// Participant 0 is the government agency; providers are 1..P.
inline constexpr std::uint32_t kGovernment = 0;

/// One provider bid: subsidy asked at a site plus the provider's own cost.
struct ProviderBid {
  SiteId site;
  double subsidy;  // c_ij, paid from the government budget
  double price;    // p_ij, paid from the provider's budget
};

struct Provider {
  double budget = 0.0;             // B_j
  std::vector<ProviderBid> bids;   // sites the provider is interested in
};

/// Grant-allocation instance. The base MPC instance carries the geometry and
/// demands; base.cost is the government's reserve subsidy c_i0 at every site
/// and base.budget the government grant budget B.
struct SubsidyInstance {
  MpcInstance base;
  std::vector<Provider> providers;  // participant j = index + 1
};

struct SubsidyAward {
  SiteId site;
  std::uint32_t participant;  // kGovernment or provider index + 1
  double subsidy;             // c_ij paid
  double price;               // p_ij consumed from the provider budget (0 for gov)
};

struct SubsidyOutcome {
  std::vector<SubsidyAward> awards;   // ascending site id, one per selected site
  double government_spend = 0.0;      // sum of subsidies
  std::vector<double> provider_spend; // per provider, sum of prices
  double total_demand = 0.0;
  InterestSet covered;

  Selection selected_sites(std::size_t site_count) const;
};

using MultiKnapsackFn = std::function<MultiSelection(std::span<const MultiDimItem>,
                                                     std::span<const double>)>;

/// Rank handle over (site, participant) bids; returns bid indices in
/// increasing importance.
struct SubsidyRankInput {
  std::size_t bid_index;
  SiteId site;
  double demand;
  double normalized_cost;  // c_ij/B + p_ij/B_j (gov: c_i0/B)
  InterestSet covers;
};
using SubsidyRankFn =
    std::function<std::vector<std::size_t>(std::span<const SubsidyRankInput>)>;

struct SubsidyHooks {
  MultiKnapsackFn multi_knapsack;
  SetCoverFn set_cover;
  SubsidyRankFn rank;

  static SubsidyHooks defaults();
};

/// Pack-and-cover over (site, participant) bids: the packer is the
/// multi-dimensional knapsack (government budget plus one dimension per
/// provider, at most one winner per site), the covering step assigns each
/// covering site its cheapest-subsidy budget-feasible bidder, and the removal
/// loop frees government budget until the residual cover fits. A P = 0
/// instance reduces bit-exactly to ipac_solve on the base instance.
std::optional<SubsidyOutcome> subsidy_solve(const SubsidyInstance& s,
                                            const SubsidyHooks& hooks = SubsidyHooks::defaults());

/// Checks all four constraint families (government budget, provider budgets,
/// one winner per site, coverage) plus the spend accounting.
ValidationReport validate_outcome(const SubsidyInstance& s, const SubsidyOutcome& out);

}  // namespace chargeplan
