#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace portres {

/// Calendar date stored as days since 1970-01-01 (proleptic Gregorian).
struct Date {
  std::int32_t days = 0;

  static Date from_ymd(int year, int month, int day);
  void to_ymd(int& year, int& month, int& day) const;

  /// Parses "YYYY-MM-DD". Returns nullopt on malformed input.
  static std::optional<Date> parse(const std::string& text);
  std::string to_string() const;

  auto operator<=>(const Date&) const = default;
};

inline Date operator+(Date d, int n) { return Date{d.days + n}; }
inline Date operator-(Date d, int n) { return Date{d.days - n}; }
inline int operator-(Date a, Date b) { return a.days - b.days; }

/// UTC instant with second resolution, stored as seconds since the Unix epoch.
struct Instant {
  std::int64_t seconds = 0;

  /// Accepts "YYYY-MM-DDTHH:MM:SS", "YYYY-MM-DD HH:MM:SS" and an optional
  /// trailing "Z". Fractional seconds are truncated.
  static std::optional<Instant> parse(const std::string& text);

  /// RFC 3339 with trailing Z: "YYYY-MM-DDTHH:MM:SSZ".
  std::string to_string() const;

  Date date() const;

  auto operator<=>(const Instant&) const = default;
};

inline Instant operator+(Instant t, std::int64_t s) { return Instant{t.seconds + s}; }
inline std::int64_t operator-(Instant a, Instant b) { return a.seconds - b.seconds; }

constexpr std::int64_t kSecondsPerDay = 86400;
constexpr std::int64_t kSecondsPerHour = 3600;

inline Instant start_of_day(Date d) {
  return Instant{static_cast<std::int64_t>(d.days) * kSecondsPerDay};
}

/// Monday-based week index since the epoch week. Dates in the same ISO week
/// share an index, so week arithmetic is plain integer arithmetic.
int week_index(Date d);

/// First day (Monday) of a week index.
Date week_start(int week);

/// ISO 8601 week label for the week containing `d`, e.g. "2017-W34".
std::string iso_week_label(Date d);
std::string iso_week_label_of_index(int week);

}  // namespace portres
