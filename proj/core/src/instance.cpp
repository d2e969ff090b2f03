#include "chargeplan/instance.hpp"

#include <cmath>
#include <numeric>

namespace chargeplan {

double MpcInstance::total_demand() const {
  return std::accumulate(demand.begin(), demand.end(), 0.0);
}

double MpcInstance::total_cost() const {
  return std::accumulate(cost.begin(), cost.end(), 0.0);
}

InterestSet MpcInstance::full_universe() const {
  InterestSet u(interest_count);
  u.fill();
  return u;
}

ValidationReport validate_instance(const MpcInstance& inst) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::size_t site, std::string msg) {
    report.violations.push_back({kind, site, std::move(msg)});
  };

  if (inst.demand.size() != inst.site_count)
    add(Violation::Kind::LengthMismatch, Violation::kNoSite,
        "demand length " + std::to_string(inst.demand.size()) +
            " != site count " + std::to_string(inst.site_count));
  if (inst.cost.size() != inst.site_count)
    add(Violation::Kind::LengthMismatch, Violation::kNoSite,
        "cost length " + std::to_string(inst.cost.size()) + " != site count " +
            std::to_string(inst.site_count));
  if (inst.cover_sets.size() != inst.site_count)
    add(Violation::Kind::LengthMismatch, Violation::kNoSite,
        "cover set count " + std::to_string(inst.cover_sets.size()) +
            " != site count " + std::to_string(inst.site_count));

  if (inst.interest_count == 0)
    add(Violation::Kind::EmptyUniverse, Violation::kNoSite,
        "instance has no locations of interest");

  if (inst.budget < 0.0 || !std::isfinite(inst.budget))
    add(Violation::Kind::NegativeBudget, Violation::kNoSite, "budget must be >= 0 and finite");

  for (std::size_t i = 0; i < inst.cost.size(); ++i) {
    if (!std::isfinite(inst.cost[i]))
      add(Violation::Kind::NonFinite, i, "cost[" + std::to_string(i) + "] is not finite");
    else if (inst.cost[i] <= 0.0)
      add(Violation::Kind::NonPositiveCost, i,
          "cost[" + std::to_string(i) + "] = " + std::to_string(inst.cost[i]) +
              " must be > 0");
  }
  for (std::size_t i = 0; i < inst.demand.size(); ++i) {
    if (!std::isfinite(inst.demand[i]))
      add(Violation::Kind::NonFinite, i, "demand[" + std::to_string(i) + "] is not finite");
    else if (inst.demand[i] < 0.0)
      add(Violation::Kind::NegativeDemand, i,
          "demand[" + std::to_string(i) + "] must be >= 0");
  }

  for (std::size_t i = 0; i < inst.cover_sets.size(); ++i) {
    const InterestSet& s = inst.cover_sets[i];
    if (s.universe_size() != inst.interest_count) {
      add(Violation::Kind::InterestOutOfRange, i,
          "cover set " + std::to_string(i) + " sized for " +
              std::to_string(s.universe_size()) + " interests, instance has " +
              std::to_string(inst.interest_count));
      continue;
    }
    // Universe-sized sets cannot hold out-of-range indices; a mismatched
    // universe size above is the only representable range error.
  }
  return report;
}

std::vector<InterestSet> build_cover_sets(const DistanceTable& dist, double radius) {
  std::vector<InterestSet> sets(dist.site_count, InterestSet(dist.interest_count));
  for (std::size_t l = 0; l < dist.interest_count; ++l) {
    const double* row = dist.values.data() + l * dist.site_count;
    for (std::size_t i = 0; i < dist.site_count; ++i) {
      if (row[i] <= radius) sets[i].set(l);
    }
  }
  return sets;
}

std::vector<SiteId> Solution::sites() const {
  std::vector<SiteId> out;
  for (std::size_t i = 0; i < selected.size(); ++i)
    if (selected[i]) out.push_back(static_cast<SiteId>(i));
  return out;
}

Solution score_solution(const MpcInstance& inst, const Selection& selected) {
  Solution sol;
  sol.selected = selected;
  sol.covered = InterestSet(inst.interest_count);
  for (std::size_t i = 0; i < inst.site_count && i < selected.size(); ++i) {
    if (!selected[i]) continue;
    sol.total_demand += inst.demand[i];
    sol.total_cost += inst.cost[i];
    sol.covered |= inst.cover_sets[i];
  }
  return sol;
}

bool is_feasible(const MpcInstance& inst, const Selection& selected) {
  const Solution sol = score_solution(inst, selected);
  return sol.total_cost <= inst.budget && sol.covered.count() == inst.interest_count;
}

}  // namespace chargeplan
