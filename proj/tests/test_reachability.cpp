#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "chargeplan/ipac.hpp"
#include "chargeplan/oracle.hpp"
#include "chargeplan/reachability.hpp"

using namespace chargeplan;

namespace {

DistanceTable two_by_two() {
  DistanceTable dist(2, 2);
  dist.at(0, 0) = 1.0;
  dist.at(0, 1) = 3.0;
  dist.at(1, 0) = 4.0;
  dist.at(1, 1) = 2.0;
  return dist;
}

PlacementSolver oracle_solver() {
  return [](const MpcInstance& inst) { return exact_mpc(inst); };
}

PlacementSolver ipac_solver() {
  return [](const MpcInstance& inst) { return ipac_solve(inst); };
}

PlacementProblem problem_from(const GeneratedInstance& gen) {
  return {gen.instance.demand, gen.instance.cost, gen.instance.budget, gen.dist};
}

}  // namespace

TEST_CASE("radius_candidates scans min and max distances") {
  const RadiusSet rs = radius_candidates(two_by_two());
  CHECK(rs.r_min == 2.0);  // max over interests of the nearest site
  CHECK(rs.r_max == 4.0);
  CHECK(rs.radii == std::vector<double>{2.0, 3.0, 4.0});
}

TEST_CASE("radius_candidates with one pair collapses to a point") {
  DistanceTable dist(1, 1);
  dist.at(0, 0) = 7.5;
  const RadiusSet rs = radius_candidates(dist);
  CHECK(rs.r_min == 7.5);
  CHECK(rs.r_max == 7.5);
  CHECK(rs.radii == std::vector<double>{7.5});
}

TEST_CASE("radius_candidates deduplicates repeated distances") {
  DistanceTable dist(2, 2);
  dist.at(0, 0) = 2.0;
  dist.at(0, 1) = 2.0;
  dist.at(1, 0) = 2.0;
  dist.at(1, 1) = 2.0;
  CHECK(radius_candidates(dist).radii == std::vector<double>{2.0});
}

TEST_CASE("radius_objective evaluates the trade-off formula") {
  CHECK(radius_objective(0.8, 1.0, 2.0, 2.0, 4.0, 0.5) == doctest::Approx(0.9));
  // Degenerate span: the radius term is pinned to 1.
  CHECK(radius_objective(0.4, 1.0, 3.0, 3.0, 3.0, 0.25) ==
        doctest::Approx(0.25 * 0.4 + 0.75));
}

TEST_CASE("demand_star rejects out-of-domain radii and returns 0 when infeasible") {
  PlacementProblem base{{5.0, 6.0}, {2.0, 2.0}, 10.0, two_by_two()};
  CHECK_THROWS_AS(demand_star(base, 1.9, oracle_solver()), std::invalid_argument);

  PlacementProblem broke = base;
  broke.budget = 1.0;  // cannot afford any site
  CHECK(demand_star(broke, 4.0, oracle_solver()) == 0.0);
}

TEST_CASE("demand_star at the maximal radius is pure packing") {
  PlacementProblem base{{5.0, 6.0}, {2.0, 2.0}, 2.0, two_by_two()};
  // At r = 4 every site covers everything; budget buys one site.
  std::vector<PackItem> items{{0, 5.0, 2.0}, {1, 6.0, 2.0}};
  CHECK(demand_star(base, 4.0, ipac_solver()) ==
        greedy_knapsack(items, base.budget).total_value);
}

TEST_CASE("sweep arbitration: alpha extremes") {
  GenParams p;
  p.seed = 5;
  p.site_count = 8;
  p.interest_count = 6;
  p.radius_km = 10.0;
  p.budget_factor = 0.5;
  const GeneratedInstance gen = gen_instance(p);
  const PlacementProblem base = problem_from(gen);
  const RadiusSet rs = radius_candidates(base.dist);

  const RadiusSweepResult demand_only = sweep(base, rs, 1.0, oracle_solver());
  REQUIRE(demand_only.best_radius.has_value());
  // alpha = 1: the smallest radius attaining the maximal demand wins.
  double top = 0.0;
  for (const RadiusRecord& r : demand_only.records) top = std::max(top, r.demand);
  for (const RadiusRecord& r : demand_only.records) {
    if (r.radius < *demand_only.best_radius) CHECK(r.demand < top);
    if (r.radius == *demand_only.best_radius) CHECK(r.demand == top);
  }

  const RadiusSweepResult radius_only = sweep(base, rs, 0.0, oracle_solver());
  REQUIRE(radius_only.best_radius.has_value());
  // alpha = 0: the smallest feasible radius wins.
  for (const RadiusRecord& r : radius_only.records) {
    if (r.radius < *radius_only.best_radius) CHECK_FALSE(r.feasible);
    if (r.radius == *radius_only.best_radius) CHECK(r.feasible);
  }
}

TEST_CASE("sweep records the documented objective values") {
  PlacementProblem base{{5.0, 6.0}, {2.0, 2.0}, 10.0, two_by_two()};
  const RadiusSet rs = radius_candidates(base.dist);
  const RadiusSweepResult result = sweep(base, rs, 0.5, oracle_solver());
  REQUIRE(result.records.size() == 3);
  for (const RadiusRecord& rec : result.records)
    CHECK(rec.objective == doctest::Approx(radius_objective(
                               rec.demand, 11.0, rec.radius, 2.0, 4.0, 0.5)));
}

TEST_CASE("with the exact solver D*(r) is a nondecreasing step function") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenParams p;
    p.seed = 900 + seed;
    p.site_count = 7;
    p.interest_count = 5;
    p.radius_km = 6.0;
    p.budget_factor = 0.45;
    const GeneratedInstance gen = gen_instance(p);
    const PlacementProblem base = problem_from(gen);
    const RadiusSet rs = radius_candidates(base.dist);

    const RadiusSweepResult result = sweep(base, rs, 0.5, oracle_solver());
    for (std::size_t k = 1; k < result.records.size(); ++k) {
      CHECK(result.records[k].demand >= result.records[k - 1].demand);
      // Constant between consecutive candidate radii.
      const double mid = 0.5 * (rs.radii[k - 1] + rs.radii[k]);
      CHECK(demand_star(base, mid, oracle_solver()) ==
            doctest::Approx(result.records[k - 1].demand));
    }
  }
}

TEST_CASE("sweep over the candidate set dominates any dense grid") {
  GenParams p;
  p.seed = 77;
  p.site_count = 6;
  p.interest_count = 5;
  p.radius_km = 8.0;
  p.budget_factor = 0.5;
  const GeneratedInstance gen = gen_instance(p);
  const PlacementProblem base = problem_from(gen);
  const RadiusSet rs = radius_candidates(base.dist);

  const RadiusSweepResult over_set = sweep(base, rs, 0.5, oracle_solver());
  std::vector<double> grid;
  for (int g = 0; g <= 120; ++g)
    grid.push_back(rs.r_min + (rs.r_max - rs.r_min) * g / 120.0);
  const RadiusSweepResult over_grid = sweep_grid(base, grid, 0.5, oracle_solver());

  REQUIRE(over_set.best_radius.has_value());
  REQUIRE(over_grid.best_radius.has_value());
  double best_set = 0.0, best_grid = 0.0;
  for (const RadiusRecord& r : over_set.records)
    if (r.feasible) best_set = std::max(best_set, r.objective);
  for (const RadiusRecord& r : over_grid.records)
    if (r.feasible) best_grid = std::max(best_grid, r.objective);
  CHECK(best_set >= best_grid - 1e-12);
}

TEST_CASE("isotonic post-pass smooths heuristic dips") {
  GenParams p;
  p.seed = 31;
  p.site_count = 9;
  p.interest_count = 7;
  p.radius_km = 7.0;
  p.budget_factor = 0.4;
  const GeneratedInstance gen = gen_instance(p);
  const PlacementProblem base = problem_from(gen);
  const RadiusSet rs = radius_candidates(base.dist);

  const RadiusSweepResult smoothed = sweep(base, rs, 0.5, ipac_solver(), true);
  for (std::size_t k = 1; k < smoothed.records.size(); ++k)
    CHECK(smoothed.records[k].demand >= smoothed.records[k - 1].demand);
}
