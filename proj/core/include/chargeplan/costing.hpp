#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chargeplan/geo.hpp"

namespace chargeplan {

/// Land-value scoring parameters for candidate sites.
struct LandCostModel {
  double base_price = 4000.0;      // p, minimum per-unit land cost
  double poi_radius_km = 1.0;      // delta, PoI influence radius
  std::map<std::string, double> score_table;  // PoI category -> score
  double default_score = 0.0;      // used for categories absent from the table
  double min_distance_km = 0.05;   // clamp: score/dist is singular at dist = 0
};

/// Returns the conventional category scores (airports and railway stations
/// 800; schools, restaurants and hospitals 300).
std::map<std::string, double> default_poi_scores();

/// A point of interest near a candidate site.
struct PoiRecord {
  std::string category;
  double lat = 0.0;             // or planar x, km
  double lon = 0.0;             // or planar y, km
  double distance_km = -1.0;    // filled by join_poi_distances when pre-joined
};

/// Fills distance_km for each PoI relative to a site location.
void join_poi_distances(std::span<PoiRecord> pois, Metric metric,
                        double site_a, double site_b);

/// L_i = p + sum over PoIs within delta of score / max(dist, clamp).
double land_cost(std::span<const PoiRecord> pois, const LandCostModel& model);

struct SiteCostInputs {
  int slots = 1;            // N_i >= 1
  double land_unit = 0.0;   // L_i
  double infra_unit = 0.0;  // F_i
};

/// c_i = N_i * (L_i + F_i). Throws std::invalid_argument when slots < 1.
double site_cost(const SiteCostInputs& in);

/// Adds independent N(0, sigma^2) noise per site, clamped below at `floor`.
/// Deterministic under `seed`.
std::vector<double> perturb_costs(std::span<const double> costs, double sigma,
                                  std::uint64_t seed, double floor = 1.0);

}  // namespace chargeplan
