#include "chargeplan/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chargeplan {

RadiusSet radius_candidates(const DistanceTable& dist) {
  if (dist.interest_count == 0 || dist.site_count == 0)
    throw std::invalid_argument("radius_candidates: empty distance table");

  double r_min = 0.0, r_max = 0.0;
  for (std::size_t l = 0; l < dist.interest_count; ++l) {
    double nearest = dist(l, 0), farthest = dist(l, 0);
    for (std::size_t i = 1; i < dist.site_count; ++i) {
      nearest = std::min(nearest, dist(l, i));
      farthest = std::max(farthest, dist(l, i));
    }
    r_min = std::max(r_min, nearest);
    r_max = std::max(r_max, farthest);
  }

  std::vector<double> radii;
  radii.reserve(dist.values.size());
  for (double d : dist.values)
    if (d >= r_min) radii.push_back(d);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return {r_min, r_max, std::move(radii)};
}

MpcInstance instance_at_radius(const PlacementProblem& base, double radius) {
  MpcInstance inst;
  inst.site_count = base.dist.site_count;
  inst.interest_count = base.dist.interest_count;
  inst.demand = base.demand;
  inst.cost = base.cost;
  inst.budget = base.budget;
  inst.radius = radius;
  inst.cover_sets = build_cover_sets(base.dist, radius);
  return inst;
}

double demand_star(const PlacementProblem& base, double radius,
                   const PlacementSolver& solver) {
  const RadiusSet rs = radius_candidates(base.dist);
  if (radius < rs.r_min || radius > rs.r_max)
    throw std::invalid_argument("demand_star: radius outside [R^min, R^max]");
  const std::optional<Solution> sol = solver(instance_at_radius(base, radius));
  return sol ? sol->total_demand : 0.0;
}

double radius_objective(double demand_star_value, double demand_pool_total,
                        double radius, double r_min, double r_max, double alpha) {
  const double demand_term =
      demand_pool_total > 0.0 ? demand_star_value / demand_pool_total : 0.0;
  const double radius_term =
      r_max > r_min ? (r_max - radius) / (r_max - r_min) : 1.0;
  return alpha * demand_term + (1.0 - alpha) * radius_term;
}

namespace {

RadiusSweepResult sweep_impl(const PlacementProblem& base,
                             std::vector<double> radii, double r_min, double r_max,
                             double alpha, const PlacementSolver& solver,
                             bool isotonic_demand) {
  RadiusSweepResult result;
  result.alpha = alpha;
  result.r_min = r_min;
  result.r_max = r_max;

  double pool = 0.0;
  for (double d : base.demand) pool += d;

  for (double r : radii) {
    const std::optional<Solution> sol = solver(instance_at_radius(base, r));
    RadiusRecord rec;
    rec.radius = r;
    rec.feasible = sol.has_value();
    rec.demand = sol ? sol->total_demand : 0.0;
    result.records.push_back(rec);
  }

  if (isotonic_demand) {
    double running = 0.0;
    for (RadiusRecord& rec : result.records) {
      running = std::max(running, rec.demand);
      rec.demand = running;
    }
  }

  for (RadiusRecord& rec : result.records)
    rec.objective = radius_objective(rec.demand, pool, rec.radius, r_min, r_max, alpha);

  // Argmax over feasible radii only; with alpha < 1 an infeasible small
  // radius would otherwise win on its radius term alone. Ties go to the
  // smaller radius (records are ascending).
  double best_obj = 0.0;
  for (const RadiusRecord& rec : result.records) {
    if (!rec.feasible) continue;
    if (!result.best_radius.has_value() || rec.objective > best_obj) {
      result.best_radius = rec.radius;
      best_obj = rec.objective;
    }
  }
  return result;
}

}  // namespace

RadiusSweepResult sweep(const PlacementProblem& base, const RadiusSet& radii,
                        double alpha, const PlacementSolver& solver,
                        bool isotonic_demand) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("sweep: alpha must be in [0, 1]");
  return sweep_impl(base, radii.radii, radii.r_min, radii.r_max, alpha, solver,
                    isotonic_demand);
}

RadiusSweepResult sweep_grid(const PlacementProblem& base,
                             std::span<const double> grid, double alpha,
                             const PlacementSolver& solver, bool isotonic_demand) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("sweep_grid: alpha must be in [0, 1]");
  const RadiusSet rs = radius_candidates(base.dist);
  std::vector<double> radii;
  for (double r : grid)
    if (r >= rs.r_min && r <= rs.r_max) radii.push_back(r);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return sweep_impl(base, std::move(radii), rs.r_min, rs.r_max, alpha, solver,
                    isotonic_demand);
}

}  // namespace chargeplan
