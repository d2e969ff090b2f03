#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chargeplan/instance.hpp"
#include "chargeplan/ipac.hpp"

namespace chargeplan {

/// Data for one deployment period. Sites absent in early periods become
/// available later (active masks grow monotonically); a previously installed
/// site stays in the pool with `cost` reinterpreted as the cost of expanding
/// it (extra slots), and `demand` as its current forecast.
struct PeriodSpec {
  std::vector<std::uint8_t> active;  // size = site_count, monotone across periods
  std::vector<double> demand;        // d_i^t
  std::vector<double> cost;          // c_i^t (install, or expansion when installed)
  double budget = 0.0;               // B^t released this period
  DistanceTable dist;                // interest x site for this period
  std::optional<double> radius;      // fixed r^t; nullopt -> choose by sweep
};

struct MultiPeriodInstance {
  std::size_t site_count = 0;
  double alpha = 1.0;  // demand/radius trade-off used when a period sweeps
  std::vector<PeriodSpec> periods;
};

struct PeriodAction {
  std::size_t period;
  SiteId site;
  bool expansion;  // false = new install
  double cost;
};

struct DeploymentSchedule {
  std::vector<Selection> selected_after;  // cumulative x^t per period
  std::vector<double> spend;              // per period
  std::vector<double> carryover;          // unspent budget after each period
  std::vector<double> radius;             // r^t actually used
  std::vector<PeriodAction> actions;
};

/// Greedy per-period deployment: each period solves the residual MPC problem
/// (uncovered interests, not-yet-installed sites plus expansion candidates)
/// with the released budget plus carryover. Installed sites are never
/// uninstalled. Throws PeriodInfeasible when a period's covering constraints
/// cannot be met.
DeploymentSchedule multi_period_solve(const MultiPeriodInstance& mp,
                                      const IpacHooks& hooks = IpacHooks::defaults());

/// Machine-checks the schedule invariants: selection monotonicity, prefix
/// budget feasibility, and per-period coverage.
ValidationReport validate_schedule(const MultiPeriodInstance& mp,
                                   const DeploymentSchedule& s);

/// Sum over periods of alpha * served/total + (1-alpha) * radius term.
double schedule_objective(const MultiPeriodInstance& mp, const DeploymentSchedule& s);

}  // namespace chargeplan
