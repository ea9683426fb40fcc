#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "portres/dates.hpp"
#include "portres/geo.hpp"

namespace portres {

struct AisPoint {
  std::string vessel_id;
  Instant timestamp;
  double lat = 0.0;
  double lon = 0.0;
  int vessel_type = 0;
};

enum class Coast { Gulf, East, Pacific, NonCoast };

std::string coast_name(Coast c);
std::optional<Coast> parse_coast(const std::string& name);

struct PortBoundary {
  int port_id = 0;
  std::string name;
  Coast coast = Coast::NonCoast;
  Polygon geometry;
};

struct PortCall {
  std::string vessel_id;
  int port_id = 0;
  Instant arrival;
  Instant departure;
};

struct OdRecord {
  std::string vessel_id;
  int origin_port = 0;
  int dest_port = 0;
  Instant depart;
  Instant arrive;
  bool self_loop = false;
};

/// Daily vessel counts at one port; day i is start_date + i, gaps stored as 0.
struct DailySeries {
  int port_id = 0;
  Date start_date;
  std::vector<int> counts;

  Date end_date() const { return start_date + static_cast<int>(counts.size()) - 1; }
  int at(Date d) const {
    const int i = d - start_date;
    return (i >= 0 && i < static_cast<int>(counts.size())) ? counts[i] : 0;
  }
};

/// Column names of the delimited AIS input.
struct AisSchema {
  std::string vessel_id = "MMSI";
  std::string timestamp = "BaseDateTime";
  std::string lat = "LAT";
  std::string lon = "LON";
  std::string vessel_type = "VesselType";
};

struct ParseStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// Streams AIS points out of delimited text. Rows that fail to parse or carry
/// out-of-range coordinates are counted in `stats.rejected` and skipped; a
/// missing schema column throws std::runtime_error.
ParseStats parse_ais(std::istream& in, const AisSchema& schema,
                     const std::function<void(AisPoint&&)>& sink);

/// Convenience wrapper collecting into a vector.
std::vector<AisPoint> parse_ais_all(std::istream& in, const AisSchema& schema,
                                    ParseStats* stats = nullptr);

/// AIS ship-type blocks for commercial traffic: 70-79 cargo, 80-89 tanker.
struct CommercialTypeFilter {
  int cargo_lo = 70, cargo_hi = 79;
  int tanker_lo = 80, tanker_hi = 89;
  bool matches(int type) const {
    return (type >= cargo_lo && type <= cargo_hi) || (type >= tanker_lo && type <= tanker_hi);
  }
};

std::vector<AisPoint> filter_commercial(std::vector<AisPoint> points,
                                        const CommercialTypeFilter& filter = {});

struct SegmentOptions {
  std::int64_t min_dwell_seconds = 4 * kSecondsPerHour;
  // A dropout longer than this inside a polygon closes the call.
  std::int64_t max_gap_seconds = 24 * kSecondsPerHour;
  std::function<void(const std::string&)> warn;
};

/// Segments one vessel's time-sorted track into port calls. A call opens at
/// the first point inside a port polygon and closes at the last consecutive
/// inside point; calls shorter than the dwell floor are dropped. A point in
/// several overlapping polygons goes to the smallest port_id.
std::vector<PortCall> segment_port_calls(const std::vector<AisPoint>& points,
                                         const std::vector<PortBoundary>& boundaries,
                                         const SegmentOptions& opts = {});

/// Count per day = number of distinct vessels whose [arrival, departure]
/// intersects the day. Throws std::invalid_argument on an empty range.
DailySeries build_daily_series(const std::vector<PortCall>& calls, int port_id,
                               Date range_start, Date range_end);

/// Adjacent call pairs of one vessel; consecutive same-port pairs are kept
/// but flagged as self-loops.
std::vector<OdRecord> extract_od(const std::vector<PortCall>& calls);

/// Parses a GeoJSON FeatureCollection with properties {port_id, name, coast}.
std::vector<PortBoundary> load_ports_geojson(std::istream& in);

}  // namespace portres
