#include "portres/geo.hpp"

#include <cmath>

namespace portres {
namespace {
constexpr double kEarthRadiusKm = 6371.0088;
constexpr double kDegToRad = M_PI / 180.0;
}  // namespace

double haversine_km(LatLon a, LatLon b) {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlam = (b.lon - a.lon) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

bool point_in_ring(LatLon p, const std::vector<LatLon>& ring) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double xi = ring[i].lon, yi = ring[i].lat;
    const double xj = ring[j].lon, yj = ring[j].lat;
    if ((yi > p.lat) != (yj > p.lat) &&
        p.lon < (xj - xi) * (p.lat - yi) / (yj - yi) + xi)
      inside = !inside;
  }
  return inside;
}

bool Polygon::contains(LatLon p) const {
  int crossings = 0;
  for (const auto& ring : rings)
    if (point_in_ring(p, ring)) ++crossings;
  return (crossings % 2) == 1;
}

LatLon Polygon::centroid() const {
  // Area-weighted centroid over rings on the (lon, lat) plane; port polygons
  // are small enough that planar math suffices here.
  double a_sum = 0.0, cx = 0.0, cy = 0.0;
  for (const auto& ring : rings) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const double cross = ring[j].lon * ring[i].lat - ring[i].lon * ring[j].lat;
      a_sum += cross;
      cx += (ring[j].lon + ring[i].lon) * cross;
      cy += (ring[j].lat + ring[i].lat) * cross;
    }
  }
  if (std::abs(a_sum) < 1e-12) {
    // Degenerate ring: fall back to the vertex mean.
    double lat = 0.0, lon = 0.0;
    std::size_t count = 0;
    for (const auto& ring : rings)
      for (const auto& v : ring) {
        lat += v.lat;
        lon += v.lon;
        ++count;
      }
    return count ? LatLon{lat / count, lon / count} : LatLon{};
  }
  return LatLon{cy / (3.0 * a_sum), cx / (3.0 * a_sum)};
}

}  // namespace portres
