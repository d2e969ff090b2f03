#include "chargeplan/multi_period.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "chargeplan/errors.hpp"
#include "chargeplan/reachability.hpp"

namespace chargeplan {

namespace {

struct PeriodSubproblem {
  MpcInstance sub;
  std::vector<SiteId> to_global;      // sub site -> global site
  std::vector<char> is_expansion;     // parallel to sub sites
};

// Residual problem for one period at a given radius: interests not yet
// covered by installed stations, fresh sites at install cost, and installed
// sites whose forecast grew re-entering as expansion candidates (their
// coverage is already accounted for, so their residual cover sets are empty).
PeriodSubproblem build_subproblem(const MultiPeriodInstance& mp,
                                  const PeriodSpec& ps, const Selection& installed,
                                  const std::vector<double>& credited,
                                  double radius, double budget) {
  const std::vector<InterestSet> cover_all = build_cover_sets(ps.dist, radius);

  InterestSet covered(ps.dist.interest_count);
  for (std::size_t i = 0; i < mp.site_count; ++i)
    if (installed[i]) covered |= cover_all[i];

  std::vector<std::uint32_t> residual;  // global interest ids, ascending
  for (std::size_t l = 0; l < ps.dist.interest_count; ++l)
    if (!covered.test(l)) residual.push_back(static_cast<std::uint32_t>(l));
  std::vector<std::size_t> to_local(ps.dist.interest_count, 0);
  for (std::size_t k = 0; k < residual.size(); ++k) to_local[residual[k]] = k;

  PeriodSubproblem out;
  out.sub.interest_count = residual.size();
  out.sub.budget = budget;
  out.sub.radius = radius;

  for (std::size_t i = 0; i < mp.site_count; ++i) {
    if (!ps.active[i]) continue;
    double value = ps.demand[i];
    bool expansion = false;
    if (installed[i]) {
      value = ps.demand[i] - credited[i];
      expansion = true;
      if (value <= 0.0) continue;  // nothing gained by adding slots
    }
    InterestSet covers(residual.size());
    cover_all[i].for_each([&](std::size_t l) {
      if (!covered.test(l)) covers.set(to_local[l]);
    });
    out.sub.demand.push_back(value);
    out.sub.cost.push_back(ps.cost[i]);
    out.sub.cover_sets.push_back(std::move(covers));
    out.to_global.push_back(static_cast<SiteId>(i));
    out.is_expansion.push_back(expansion ? 1 : 0);
  }
  out.sub.site_count = out.sub.demand.size();
  return out;
}

double period_objective(const MultiPeriodInstance& mp, const PeriodSpec& ps,
                        const Selection& installed_after, double radius) {
  double served = 0.0, pool = 0.0;
  for (std::size_t i = 0; i < mp.site_count; ++i) {
    if (ps.active[i]) pool += ps.demand[i];
    if (installed_after[i]) served += ps.demand[i];
  }
  const RadiusSet rs = radius_candidates(ps.dist);
  return radius_objective(served, pool, radius, rs.r_min, rs.r_max, mp.alpha);
}

}  // namespace

DeploymentSchedule multi_period_solve(const MultiPeriodInstance& mp,
                                      const IpacHooks& hooks) {
  if (mp.periods.empty())
    throw std::invalid_argument("multi_period_solve: no periods");
  for (const PeriodSpec& ps : mp.periods) {
    if (ps.active.size() != mp.site_count || ps.demand.size() != mp.site_count ||
        ps.cost.size() != mp.site_count || ps.dist.site_count != mp.site_count)
      throw std::invalid_argument("multi_period_solve: period arrays must match site_count");
  }

  DeploymentSchedule schedule;
  Selection installed(mp.site_count, 0);
  std::vector<double> credited(mp.site_count, 0.0);
  double carryover = 0.0;

  for (std::size_t t = 0; t < mp.periods.size(); ++t) {
    const PeriodSpec& ps = mp.periods[t];
    const double budget = ps.budget + carryover;

    std::optional<double> chosen_radius;
    std::optional<Solution> chosen_solution;
    PeriodSubproblem chosen_sub;

    if (ps.radius.has_value()) {
      chosen_sub = build_subproblem(mp, ps, installed, credited, *ps.radius, budget);
      chosen_solution = ipac_solve(chosen_sub.sub, hooks);
      chosen_radius = *ps.radius;
      if (!chosen_solution)
        throw PeriodInfeasible(t, "covering constraints exceed the cumulative budget");
    } else {
      // No fixed radius: evaluate the candidate radii and keep the feasible
      // one with the best demand/radius trade-off (ties to the smaller r).
      double best_obj = 0.0;
      for (double r : radius_candidates(ps.dist).radii) {
        PeriodSubproblem sub = build_subproblem(mp, ps, installed, credited, r, budget);
        std::optional<Solution> sol = ipac_solve(sub.sub, hooks);
        if (!sol) continue;
        Selection after = installed;
        for (SiteId s : sol->sites()) after[sub.to_global[s]] = 1;
        const double obj = period_objective(mp, ps, after, r);
        if (!chosen_radius || obj > best_obj) {
          best_obj = obj;
          chosen_radius = r;
          chosen_solution = std::move(sol);
          chosen_sub = std::move(sub);
        }
      }
      if (!chosen_solution)
        throw PeriodInfeasible(t, "no candidate radius admits a feasible cover");
    }

    for (SiteId s : chosen_solution->sites()) {
      const SiteId g = chosen_sub.to_global[s];
      const bool expansion = chosen_sub.is_expansion[s] != 0;
      schedule.actions.push_back({t, g, expansion, chosen_sub.sub.cost[s]});
      installed[g] = 1;
      credited[g] = ps.demand[g];
    }
    const double spend = chosen_solution->total_cost;
    carryover = budget - spend;

    schedule.selected_after.push_back(installed);
    schedule.spend.push_back(spend);
    schedule.carryover.push_back(carryover);
    schedule.radius.push_back(*chosen_radius);
  }
  return schedule;
}

ValidationReport validate_schedule(const MultiPeriodInstance& mp,
                                   const DeploymentSchedule& s) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::string msg) {
    report.violations.push_back({kind, Violation::kNoSite, std::move(msg)});
  };
  const std::size_t periods = mp.periods.size();
  if (s.selected_after.size() != periods || s.spend.size() != periods ||
      s.radius.size() != periods) {
    add(Violation::Kind::LengthMismatch, "schedule period arrays do not match the instance");
    return report;
  }

  constexpr double kTol = 1e-9;
  double released = 0.0, spent = 0.0;
  for (std::size_t t = 0; t < periods; ++t) {
    const PeriodSpec& ps = mp.periods[t];

    for (std::size_t i = 0; i < mp.site_count; ++i) {
      const bool now = s.selected_after[t][i] != 0;
      const bool before = t > 0 && s.selected_after[t - 1][i] != 0;
      if (before && !now)
        add(Violation::Kind::MonotonicityBreach,
            "site " + std::to_string(i) + " uninstalled in period " + std::to_string(t));
      if (now && !ps.active[i])
        add(Violation::Kind::MonotonicityBreach,
            "site " + std::to_string(i) + " selected while inactive in period " +
                std::to_string(t));
    }

    released += ps.budget;
    spent += s.spend[t];
    if (spent > released + kTol)
      add(Violation::Kind::BudgetBreach,
          "prefix spend " + std::to_string(spent) + " exceeds released " +
              std::to_string(released) + " after period " + std::to_string(t));

    const std::vector<InterestSet> covers = build_cover_sets(ps.dist, s.radius[t]);
    InterestSet covered(ps.dist.interest_count);
    for (std::size_t i = 0; i < mp.site_count; ++i)
      if (s.selected_after[t][i]) covered |= covers[i];
    if (covered.count() != ps.dist.interest_count)
      add(Violation::Kind::CoverageBreach,
          "period " + std::to_string(t) + " leaves " +
              std::to_string(ps.dist.interest_count - covered.count()) +
              " interests uncovered");
  }
  return report;
}

double schedule_objective(const MultiPeriodInstance& mp, const DeploymentSchedule& s) {
  double total = 0.0;
  for (std::size_t t = 0; t < mp.periods.size(); ++t)
    total += period_objective(mp, mp.periods[t], s.selected_after[t], s.radius[t]);
  return total;
}

}  // namespace chargeplan
