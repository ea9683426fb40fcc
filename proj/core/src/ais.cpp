#include "portres/ais.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "portres/csv.hpp"

namespace portres {
namespace {

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.c_str();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

bool parse_int(const std::string& s, int& out) {
  // Vessel-type columns sometimes carry a decimal point ("70.0").
  double v;
  if (!parse_double(s, v)) return false;
  out = static_cast<int>(v);
  return true;
}

}  // namespace

std::string coast_name(Coast c) {
  switch (c) {
    case Coast::Gulf: return "Gulf";
    case Coast::East: return "East";
    case Coast::Pacific: return "Pacific";
    case Coast::NonCoast: return "NonCoast";
  }
  return "NonCoast";
}

std::optional<Coast> parse_coast(const std::string& name) {
  if (name == "Gulf") return Coast::Gulf;
  if (name == "East") return Coast::East;
  if (name == "Pacific") return Coast::Pacific;
  if (name == "NonCoast") return Coast::NonCoast;
  return std::nullopt;
}

ParseStats parse_ais(std::istream& in, const AisSchema& schema,
                     const std::function<void(AisPoint&&)>& sink) {
  CsvReader reader(in);
  const std::size_t c_id = reader.require_column(schema.vessel_id);
  const std::size_t c_ts = reader.require_column(schema.timestamp);
  const std::size_t c_lat = reader.require_column(schema.lat);
  const std::size_t c_lon = reader.require_column(schema.lon);
  const std::size_t c_type = reader.require_column(schema.vessel_type);
  const std::size_t need = std::max({c_id, c_ts, c_lat, c_lon, c_type}) + 1;

  ParseStats stats;
  std::vector<std::string> row;
  while (reader.next(row)) {
    if (row.size() < need) {
      ++stats.rejected;
      continue;
    }
    AisPoint p;
    p.vessel_id = row[c_id];
    const auto ts = Instant::parse(row[c_ts]);
    if (p.vessel_id.empty() || !ts || !parse_double(row[c_lat], p.lat) ||
        !parse_double(row[c_lon], p.lon) || !parse_int(row[c_type], p.vessel_type) ||
        p.lat < -90.0 || p.lat > 90.0 || p.lon < -180.0 || p.lon > 180.0) {
      ++stats.rejected;
      continue;
    }
    p.timestamp = *ts;
    ++stats.accepted;
    sink(std::move(p));
  }
  return stats;
}

std::vector<AisPoint> parse_ais_all(std::istream& in, const AisSchema& schema,
                                    ParseStats* stats) {
  std::vector<AisPoint> points;
  const ParseStats s = parse_ais(in, schema, [&](AisPoint&& p) { points.push_back(std::move(p)); });
  if (stats) *stats = s;
  return points;
}

std::vector<AisPoint> filter_commercial(std::vector<AisPoint> points,
                                        const CommercialTypeFilter& filter) {
  std::erase_if(points, [&](const AisPoint& p) { return !filter.matches(p.vessel_type); });
  return points;
}

std::vector<PortCall> segment_port_calls(const std::vector<AisPoint>& points,
                                         const std::vector<PortBoundary>& boundaries,
                                         const SegmentOptions& opts) {
  std::vector<PortCall> calls;
  int open_port = -1;
  Instant open_start{}, last_inside{};
  bool overlap_warned = false;

  auto close_call = [&](const std::string& vessel) {
    if (open_port >= 0 && last_inside - open_start >= opts.min_dwell_seconds)
      calls.push_back(PortCall{vessel, open_port, open_start, last_inside});
    open_port = -1;
  };

  for (const auto& p : points) {
    int hit = -1;
    int hits = 0;
    for (const auto& b : boundaries) {
      if (b.geometry.contains(LatLon{p.lat, p.lon})) {
        ++hits;
        if (hit < 0 || b.port_id < hit) hit = b.port_id;
      }
    }
    if (hits > 1 && !overlap_warned && opts.warn) {
      opts.warn("overlapping port polygons at " + p.timestamp.to_string() +
                "; assigning port " + std::to_string(hit));
      overlap_warned = true;
    }
    if (hit < 0) {
      close_call(p.vessel_id);
      continue;
    }
    if (open_port == hit && p.timestamp - last_inside <= opts.max_gap_seconds) {
      last_inside = p.timestamp;
    } else {
      close_call(p.vessel_id);
      open_port = hit;
      open_start = p.timestamp;
      last_inside = p.timestamp;
    }
  }
  if (!points.empty()) close_call(points.back().vessel_id);
  return calls;
}

DailySeries build_daily_series(const std::vector<PortCall>& calls, int port_id,
                               Date range_start, Date range_end) {
  if (range_end < range_start) throw std::invalid_argument("empty date range");
  DailySeries series;
  series.port_id = port_id;
  series.start_date = range_start;
  series.counts.assign(static_cast<std::size_t>(range_end - range_start) + 1, 0);

  // Distinct vessels per day: collect (day, vessel) pairs, then count unique.
  std::vector<std::pair<int, std::string_view>> day_vessel;
  for (const auto& c : calls) {
    if (c.port_id != port_id) continue;
    const Date first = std::max(c.arrival.date(), range_start);
    const Date last = std::min(c.departure.date(), range_end);
    for (Date d = first; d <= last; d = d + 1)
      day_vessel.emplace_back(d - range_start, std::string_view(c.vessel_id));
  }
  std::sort(day_vessel.begin(), day_vessel.end());
  day_vessel.erase(std::unique(day_vessel.begin(), day_vessel.end()), day_vessel.end());
  for (const auto& [day, vessel] : day_vessel) ++series.counts[static_cast<std::size_t>(day)];
  return series;
}

std::vector<OdRecord> extract_od(const std::vector<PortCall>& calls) {
  std::vector<OdRecord> records;
  if (calls.size() < 2) return records;
  records.reserve(calls.size() - 1);
  for (std::size_t i = 0; i + 1 < calls.size(); ++i) {
    OdRecord r;
    r.vessel_id = calls[i].vessel_id;
    r.origin_port = calls[i].port_id;
    r.dest_port = calls[i + 1].port_id;
    r.depart = calls[i].departure;
    r.arrive = calls[i + 1].arrival;
    r.self_loop = r.origin_port == r.dest_port;
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<PortBoundary> load_ports_geojson(std::istream& in) {
  nlohmann::json doc = nlohmann::json::parse(in);
  if (doc.value("type", "") != "FeatureCollection")
    throw std::runtime_error("port boundaries: expected GeoJSON FeatureCollection");

  auto read_ring = [](const nlohmann::json& coords) {
    std::vector<LatLon> ring;
    for (const auto& v : coords) ring.push_back(LatLon{v.at(1).get<double>(), v.at(0).get<double>()});
    if (ring.size() < 4) throw std::runtime_error("port boundaries: ring with fewer than 4 vertices");
    if (ring.front().lat != ring.back().lat || ring.front().lon != ring.back().lon)
      throw std::runtime_error("port boundaries: ring not closed");
    return ring;
  };

  std::vector<PortBoundary> ports;
  std::set<int> seen;
  for (const auto& feature : doc.at("features")) {
    PortBoundary b;
    const auto& props = feature.at("properties");
    b.port_id = props.at("port_id").get<int>();
    b.name = props.value("name", "");
    const auto coast = parse_coast(props.value("coast", "NonCoast"));
    if (!coast) throw std::runtime_error("port boundaries: unknown coast for port " + b.name);
    b.coast = *coast;
    if (!seen.insert(b.port_id).second)
      throw std::runtime_error("port boundaries: duplicate port_id " + std::to_string(b.port_id));

    const auto& geom = feature.at("geometry");
    const std::string type = geom.at("type").get<std::string>();
    if (type == "Polygon") {
      for (const auto& ring : geom.at("coordinates")) b.geometry.rings.push_back(read_ring(ring));
    } else if (type == "MultiPolygon") {
      for (const auto& poly : geom.at("coordinates"))
        for (const auto& ring : poly) b.geometry.rings.push_back(read_ring(ring));
    } else {
      throw std::runtime_error("port boundaries: unsupported geometry " + type);
    }
    ports.push_back(std::move(b));
  }
  return ports;
}

}  // namespace portres
