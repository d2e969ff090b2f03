#pragma once

namespace chargeplan {

/// Distance convention for coordinate pairs. Geodetic coordinates are
/// (lat, lon) in degrees; planar coordinates are (x, y) in km.
enum class Metric { Planar, Geodetic };

/// Great-circle distance in km (mean earth radius 6371 km).
double haversine_km(double lat1, double lon1, double lat2, double lon2);

double planar_km(double x1, double y1, double x2, double y2);

double point_distance_km(Metric metric, double a1, double a2, double b1, double b2);

}  // namespace chargeplan
