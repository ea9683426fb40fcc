#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "portres/ais.hpp"
#include "portres/dates.hpp"
#include "portres/geo.hpp"

namespace portres {

struct TrackPoint {
  std::string storm_id;
  Instant timestamp;
  double lat = 0.0;
  double lon = 0.0;
  double wind_kt = 0.0;
  double pressure_hpa = 0.0;
  int sshs = -1;  // -1 TD, 0 TS, 1..5 hurricane categories
};

struct StormTrack {
  std::string storm_id;
  std::vector<TrackPoint> points;  // strictly increasing timestamps
};

struct ExposureWindow {
  int port_id = 0;
  std::string storm_id;
  Date start_date;  // day of first in-range instant
  Date end_date;    // day of last in-range instant (inclusive)
  double min_distance_km = 0.0;
  int max_sshs = -1;
  bool landfall = false;
  bool landfall_close_to_port = false;
};

struct WeatherSummary {
  int port_id = 0;
  std::string storm_id;
  std::optional<double> wind_speed;    // max sustained at nearest gauge, knots
  std::optional<double> surge_height;  // peak level minus typical sea level, m
  std::optional<double> rainfall;      // accumulated at nearest station, mm
};

struct DetectOptions {
  double radius_km = 500.0;
  std::int64_t interp_step_seconds = 3600;
  const Polygon* land = nullptr;  // optional; enables the landfall indicators
  std::function<void(const std::string&)> warn;
};

/// One window per (port, storm) whose interpolated eye track passes within
/// `radius_km` of the port centroid. min_distance_km is the minimum over
/// hourly-interpolated eye positions.
std::vector<ExposureWindow> detect_interactions(const std::vector<StormTrack>& tracks,
                                                const std::vector<PortBoundary>& ports,
                                                const DetectOptions& opts = {});

/// Known variable tags in station files.
inline constexpr const char* kVarWaterLevel = "water_level";
inline constexpr const char* kVarWind = "wind";
inline constexpr const char* kVarRainfall = "rainfall";

struct StationSeries {
  std::string station_id;
  std::string variable;
  LatLon location;
  std::vector<std::pair<Instant, double>> samples;  // time-sorted
};

struct JoinWeatherOptions {
  double max_station_km = 300.0;
  int typical_level_lookback_days = 30;
};

/// Joins gauge and weather-station observations over an exposure window.
/// Wind is the max sustained reading at the nearest gauge, surge the peak
/// water level minus the typical level (median over the 30 days before the
/// window), rainfall the accumulated total at the nearest weather station.
/// Fields with no station in range stay unset.
WeatherSummary join_weather(const ExposureWindow& window, LatLon port_centroid,
                            const std::vector<StationSeries>& gauges,
                            const std::vector<StationSeries>& weather_stations,
                            const JoinWeatherOptions& opts = {});

/// Reads an IBTrACS-style delimited subset: SID, ISO_TIME, LAT, LON,
/// WMO_WIND, WMO_PRES, USA_SSHS. Rows group into per-storm tracks.
std::vector<StormTrack> load_tracks(std::istream& in);

/// Reads per-station samples (station_id, timestamp, value[, variable])
/// joined with a station-location table (station_id, lat, lon). Rows without
/// a variable column are tagged `default_variable`.
std::vector<StationSeries> load_station_series(std::istream& samples, std::istream& locations,
                                               const std::string& default_variable);

}  // namespace portres
