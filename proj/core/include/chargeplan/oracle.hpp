#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chargeplan/greedy.hpp"
#include "chargeplan/instance.hpp"
#include "chargeplan/multi_period.hpp"
#include "chargeplan/subsidy.hpp"

namespace chargeplan {

/// Enumeration guard: 2^20 subsets is the largest desk-scale search.
inline constexpr std::size_t kMaxExactItems = 20;

/// Exhaustive MPC optimum: max demand, ties to lower cost, then to the
/// lexicographically smallest selected-id sequence. Returns nullopt when no
/// feasible selection exists. Throws TooLarge above the guard.
std::optional<Solution> exact_mpc(const MpcInstance& inst);

/// Exhaustive minimum-cost cover. nullopt when the universe is uncoverable.
std::optional<CoverSelection> exact_cover(std::span<const CoverCandidate> cands,
                                          const InterestSet& universe);

enum class PackMode {
  MaxValue,         // maximize value, total weight <= limit
  MinCostToTarget,  // minimize weight, total value >= limit
};

/// Exhaustive packing optimum for the selected mode. Throws UnreachableDemand
/// in MinCostToTarget mode when the target exceeds the total value.
PackSelection exact_pack(std::span<const PackItem> items, double limit,
                         PackMode mode);

/// Exhaustive optimum of the demand-and-set-cover problem (min cost subject
/// to covering the universe and meeting the demand floor). nullopt when no
/// subset is feasible.
std::optional<DscSelection> exact_dsc(std::span<const CoverCandidate> cands,
                                      const InterestSet& universe,
                                      std::span<const PackItem> items,
                                      double demand_target);

/// Exhaustive optimum over all site-to-participant assignments of a subsidy
/// instance. Guarded at (participants+1)^sites <= 2^22 states.
std::optional<SubsidyOutcome> exact_subsidy(const SubsidyInstance& s);

// ---------------------------------------------------------------------------
// Seeded geometric instance generation.

enum class CostSource {
  Uniform,            // c_i ~ U[cost_lo, cost_hi]
  QueueingPipeline,   // c_i = N_i (L_i + F_i) from the sizing pipeline
};

enum class BudgetRule {
  FractionOfTotalCost,     // B = budget_factor * sum c_i
  FractionOfMinCoverCost,  // B = budget_factor * greedy cover cost
};

struct GenParams {
  std::size_t site_count = 12;
  std::size_t interest_count = 12;
  double extent_km = 20.0;   // square side; sites and interests uniform in it
  double radius_km = 6.0;
  double demand_lo = 10.0;
  double demand_hi = 100.0;
  CostSource cost_source = CostSource::Uniform;
  double cost_lo = 1000.0;
  double cost_hi = 10000.0;
  BudgetRule budget_rule = BudgetRule::FractionOfTotalCost;
  double budget_factor = 0.4;
  double noise_sigma = 0.0;  // gaussian cost noise, 0 disables
  std::uint64_t seed = 0;

  // QueueingPipeline knobs.
  double energy_per_session = 20.0;  // kWh per charging session
  double charge_power_kw = 6.4;
  double sla_minutes = 5.0;
  double peak_demand_share = 0.15;   // peak hourly energy as share of d_i
  double infra_unit_cost = 1852.0;
  std::size_t poi_count = 24;
};

struct GeneratedInstance {
  MpcInstance instance;
  DistanceTable dist;
  std::vector<std::array<double, 2>> site_xy;
  std::vector<std::array<double, 2>> interest_xy;
};

/// Planar uniform sites/interests, Euclidean distances, cover sets at the
/// configured radius. Bit-reproducible under a fixed seed.
GeneratedInstance gen_instance(const GenParams& p);

struct MultiPeriodGenParams {
  GenParams base;
  std::size_t periods = 2;
  double demand_growth = 0.25;        // per-period multiplicative drift
  double activation_fraction = 0.6;   // share of sites active in period 0
};

/// Periods share the base geometry; site availability grows monotonically,
/// demands drift upward, and the base budget is released in equal parts.
MultiPeriodInstance gen_multi_period(const MultiPeriodGenParams& p);

struct SubsidyGenParams {
  GenParams base;
  std::size_t providers = 2;
  double bid_probability = 0.6;
  double subsidy_lo = 0.4, subsidy_hi = 1.1;  // as multiples of the reserve
  double price_lo = 0.4, price_hi = 1.2;
  double provider_budget_factor = 0.5;        // of the provider's total asks
};

/// Provider bids priced relative to the government reserve costs.
SubsidyInstance gen_subsidy(const SubsidyGenParams& p);

}  // namespace chargeplan
