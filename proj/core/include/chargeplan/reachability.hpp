#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chargeplan/instance.hpp"

namespace chargeplan {

/// Candidate radii: every interest-to-site distance at least R^min, where
/// R^min is the smallest radius at which coverage is possible at all and
/// R^max the largest distance any interest would ever need.
struct RadiusSet {
  double r_min = 0.0;         // max over interests of min site distance
  double r_max = 0.0;         // max over interests of max site distance
  std::vector<double> radii;  // strictly increasing, radii.front() == r_min
};

/// Scans the table; requires every interest to have at least one site.
RadiusSet radius_candidates(const DistanceTable& dist);

/// Instance family fixed except for the reachability radius.
struct PlacementProblem {
  std::vector<double> demand;
  std::vector<double> cost;
  double budget = 0.0;
  DistanceTable dist;
};

/// Materializes the MPC instance at a given radius.
MpcInstance instance_at_radius(const PlacementProblem& base, double radius);

using PlacementSolver = std::function<std::optional<Solution>(const MpcInstance&)>;

/// D*(r): demand of the solver's solution at radius r, 0 when infeasible.
/// Throws std::invalid_argument when r lies outside [R^min, R^max].
double demand_star(const PlacementProblem& base, double radius,
                   const PlacementSolver& solver);

/// alpha * D*/total_demand + (1-alpha) * (r_max - r)/(r_max - r_min);
/// the radius term is defined as 1 when r_max == r_min.
double radius_objective(double demand_star_value, double demand_pool_total,
                        double radius, double r_min, double r_max, double alpha);

struct RadiusRecord {
  double radius = 0.0;
  double demand = 0.0;     // D*(r)
  bool feasible = false;
  double objective = 0.0;
};

struct RadiusSweepResult {
  double alpha = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  std::vector<RadiusRecord> records;        // in evaluation (ascending) order
  std::optional<double> best_radius;        // argmax over feasible radii, ties
                                            // to the smaller radius; nullopt
                                            // when no radius is feasible
};

/// Evaluates the trade-off objective at each radius of the set.
/// `isotonic_demand` replaces the recorded demands with their running maximum
/// before computing objectives (presentation aid for heuristic solvers whose
/// D*(r) may dip); default off.
RadiusSweepResult sweep(const PlacementProblem& base, const RadiusSet& radii,
                        double alpha, const PlacementSolver& solver,
                        bool isotonic_demand = false);

/// Same, over an explicit radius grid. Grid values outside [R^min, R^max]
/// are dropped.
RadiusSweepResult sweep_grid(const PlacementProblem& base,
                             std::span<const double> grid, double alpha,
                             const PlacementSolver& solver,
                             bool isotonic_demand = false);

}  // namespace chargeplan
