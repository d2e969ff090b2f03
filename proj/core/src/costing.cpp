#include "chargeplan/costing.hpp"

#include <algorithm>
#include <stdexcept>

#include "chargeplan/rng.hpp"

namespace chargeplan {

std::map<std::string, double> default_poi_scores() {
  return {
      {"airport", 800.0},        {"railway_station", 800.0},
      {"school", 300.0},         {"restaurant", 300.0},
      {"hospital", 300.0},
  };
}

void join_poi_distances(std::span<PoiRecord> pois, Metric metric,
                        double site_a, double site_b) {
  for (PoiRecord& p : pois)
    p.distance_km = point_distance_km(metric, site_a, site_b, p.lat, p.lon);
}

double land_cost(std::span<const PoiRecord> pois, const LandCostModel& model) {
  double total = model.base_price;
  for (const PoiRecord& p : pois) {
    if (p.distance_km < 0.0 || p.distance_km > model.poi_radius_km) continue;
    const auto it = model.score_table.find(p.category);
    const double score = it != model.score_table.end() ? it->second : model.default_score;
    total += score / std::max(p.distance_km, model.min_distance_km);
  }
  return total;
}

double site_cost(const SiteCostInputs& in) {
  if (in.slots < 1) throw std::invalid_argument("site_cost: slots must be >= 1");
  return static_cast<double>(in.slots) * (in.land_unit + in.infra_unit);
}

std::vector<double> perturb_costs(std::span<const double> costs, double sigma,
                                  std::uint64_t seed, double floor) {
  if (sigma < 0.0) throw std::invalid_argument("perturb_costs: sigma must be >= 0");
  std::vector<double> out(costs.begin(), costs.end());
  if (sigma == 0.0) return out;
  rng::Engine engine(seed);
  for (double& c : out) c = std::max(floor, c + sigma * rng::normal(engine));
  return out;
}

}  // namespace chargeplan
