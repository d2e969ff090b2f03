#include "chargeplan/geo.hpp"

#include <cmath>

namespace chargeplan {

namespace {
constexpr double kEarthRadiusKm = 6371.0;
constexpr double kDegToRad = 0.017453292519943295;
}  // namespace

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
  const double phi1 = lat1 * kDegToRad;
  const double phi2 = lat2 * kDegToRad;
  const double dphi = (lat2 - lat1) * kDegToRad;
  const double dlmb = (lon2 - lon1) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlmb / 2.0);
  const double a = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::min(1.0, a)));
}

double planar_km(double x1, double y1, double x2, double y2) {
  return std::hypot(x2 - x1, y2 - y1);
}

double point_distance_km(Metric metric, double a1, double a2, double b1, double b2) {
  return metric == Metric::Geodetic ? haversine_km(a1, a2, b1, b2)
                                    : planar_km(a1, a2, b1, b2);
}

}  // namespace chargeplan
