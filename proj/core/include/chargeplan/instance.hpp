#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chargeplan/bitset.hpp"
#include "chargeplan/types.hpp"

namespace chargeplan {

/// Rectangular interest x site distance table, entries in km.
struct DistanceTable {
  std::size_t interest_count = 0;
  std::size_t site_count = 0;
  std::vector<double> values;  // row-major: interest * site_count + site

  DistanceTable() = default;
  DistanceTable(std::size_t interests, std::size_t sites)
      : interest_count(interests),
        site_count(sites),
        values(interests * sites, 0.0) {}

  double operator()(std::size_t interest, std::size_t site) const {
    return values[interest * site_count + site];
  }
  double& at(std::size_t interest, std::size_t site) {
    return values[interest * site_count + site];
  }
};

/// One mixed pack-and-cover problem: select sites maximizing total demand
/// subject to a budget and to covering every location of interest.
struct MpcInstance {
  std::size_t site_count = 0;
  std::size_t interest_count = 0;
  std::vector<double> demand;           // d_i, energy units per period
  std::vector<double> cost;             // c_i, money, > 0
  double budget = 0.0;                  // B
  std::vector<InterestSet> cover_sets;  // S_i^r, one per site
  double radius = 0.0;                  // r the cover sets were built at, km

  double total_demand() const;
  double total_cost() const;
  InterestSet full_universe() const;
};

struct Violation {
  enum class Kind {
    LengthMismatch,
    InterestOutOfRange,
    NonPositiveCost,
    NegativeDemand,
    NegativeBudget,
    EmptyUniverse,
    NonFinite,
    // Solution-side breaches reported by the schedule/outcome validators.
    MonotonicityBreach,
    BudgetBreach,
    CoverageBreach,
    WinnerConflict,
  };
  static constexpr std::size_t kNoSite = static_cast<std::size_t>(-1);

  Kind kind;
  std::size_t site = kNoSite;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Report-style validation; an empty report means the instance is well formed.
ValidationReport validate_instance(const MpcInstance& inst);

/// S_i = { interest l : dist(l, i) <= r }. Closed-ball inclusion.
std::vector<InterestSet> build_cover_sets(const DistanceTable& dist, double radius);

/// Selection with derived accounting.
struct Solution {
  Selection selected;
  double total_demand = 0.0;
  double total_cost = 0.0;
  InterestSet covered;

  /// Ascending ids of the selected sites.
  std::vector<SiteId> sites() const;
};

Solution score_solution(const MpcInstance& inst, const Selection& selected);

/// True iff total cost <= budget and the selection covers every interest.
bool is_feasible(const MpcInstance& inst, const Selection& selected);

}  // namespace chargeplan
