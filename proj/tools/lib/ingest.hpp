#pragma once

#include <string>
#include <vector>

#include "chargeplan/cca.hpp"
#include "chargeplan/costing.hpp"
#include "chargeplan/instance.hpp"

namespace chargeplan::cli {

struct SiteRecord {
  std::string id;
  double lat, lon;
};

struct IngestConfig {
  std::string sites_path;      // required: site_id, lat, lon
  std::string demand_path;     // site_id, h00..h23 (energy per hour)
  std::string poi_path;        // poi_id, category, lat, lon
  std::string traffic_path;    // junction_id, lat, lon, density
  std::string distances_path;  // optional override: interest_id, site_id, km

  bool hour_filter = true;          // keep 07:00 through 22:00 columns
  double poi_view_radius_km = 0.5;  // PoI frequency view radius
  double poi_cost_radius_km = 1.0;  // land-cost join radius
  int nearest_junctions = 5;
  int nearest_neighbors = 5;        // neighbor-demand view width
  Metric metric = Metric::Geodetic;
};

/// Everything the commands need, parsed and joined.
struct Bundle {
  std::vector<SiteRecord> sites;
  Matrix demand_matrix;                     // rows = sites, filtered hours
  std::vector<std::string> demand_columns;  // e.g. h07..h22
  std::vector<Matrix> views;
  std::vector<std::string> view_names;      // poi / traffic / neighbor_demand
  DistanceTable dist;                       // interest x site
  std::vector<std::vector<PoiRecord>> site_pois;  // joined within the cost radius
  std::vector<std::string> poi_categories;        // data-driven, sorted
  std::vector<std::string> warnings;
};

/// Parses whichever inputs are configured. Without a distance override the
/// interest set is the site set itself and distances are pairwise metric
/// distances between site coordinates.
Bundle ingest(const IngestConfig& config);

/// Per-site demand for the placement problem: total energy over the kept hours.
std::vector<double> daily_demand(const Bundle& bundle);

}  // namespace chargeplan::cli
