#pragma once

#include <vector>

namespace portres {

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
};

/// Polygon as one or more rings of (lat, lon) vertices. Rings are closed
/// (first vertex repeated last). Interior treatment is even-odd, so holes
/// are just additional rings.
struct Polygon {
  std::vector<std::vector<LatLon>> rings;

  bool contains(LatLon p) const;
  LatLon centroid() const;
};

/// Great-circle distance in km on the mean-radius sphere (R = 6371.0088 km).
double haversine_km(LatLon a, LatLon b);

/// Even-odd ray casting on the (lon, lat) plane.
bool point_in_ring(LatLon p, const std::vector<LatLon>& ring);

}  // namespace portres
