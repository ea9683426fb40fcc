#include "portres/dates.hpp"

#include <cstdio>

namespace portres {
namespace {

// Howard Hinnant's civil-calendar algorithms.
std::int32_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                       static_cast<unsigned>(d) - 1u;
  const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
  return era * 146097 + static_cast<int>(doe) - 719468;
}

void civil_from_days(std::int32_t z, int& y, int& m, int& d) {
  z += 719468;
  const int era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int yy = static_cast<int>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  y = yy + (m <= 2);
}

bool parse_fixed_int(const char* s, int n, int& out) {
  out = 0;
  for (int i = 0; i < n; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    out = out * 10 + (s[i] - '0');
  }
  return true;
}

}  // namespace

Date Date::from_ymd(int year, int month, int day) {
  return Date{days_from_civil(year, month, day)};
}

void Date::to_ymd(int& year, int& month, int& day) const {
  civil_from_days(days, year, month, day);
}

std::optional<Date> Date::parse(const std::string& text) {
  if (text.size() < 10) return std::nullopt;
  const char* s = text.c_str();
  int y, m, d;
  if (!parse_fixed_int(s, 4, y) || s[4] != '-' || !parse_fixed_int(s + 5, 2, m) ||
      s[7] != '-' || !parse_fixed_int(s + 8, 2, d))
    return std::nullopt;
  if (m < 1 || m > 12 || d < 1 || d > 31) return std::nullopt;
  return Date::from_ymd(y, m, d);
}

std::string Date::to_string() const {
  int y, m, d;
  to_ymd(y, m, d);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
  return buf;
}

std::optional<Instant> Instant::parse(const std::string& text) {
  if (text.size() < 19) return std::nullopt;
  const char* s = text.c_str();
  if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
  auto date = Date::parse(text.substr(0, 10));
  if (!date) return std::nullopt;
  int hh, mm, ss;
  if (!parse_fixed_int(s + 11, 2, hh) || s[13] != ':' || !parse_fixed_int(s + 14, 2, mm) ||
      s[16] != ':' || !parse_fixed_int(s + 17, 2, ss))
    return std::nullopt;
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  return Instant{static_cast<std::int64_t>(date->days) * kSecondsPerDay + hh * 3600 + mm * 60 +
                 ss};
}

std::string Instant::to_string() const {
  const Date d = date();
  const std::int64_t rem = seconds - static_cast<std::int64_t>(d.days) * kSecondsPerDay;
  int y, m, dd;
  d.to_ymd(y, m, dd);
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02lld:%02lld:%02lldZ", y, m, dd,
                static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

Date Instant::date() const {
  std::int64_t d = seconds / kSecondsPerDay;
  if (seconds < 0 && seconds % kSecondsPerDay != 0) --d;
  return Date{static_cast<std::int32_t>(d)};
}

int week_index(Date d) {
  // 1970-01-01 is a Thursday; the Monday of that week is day -3.
  const int shifted = d.days + 3;
  return shifted >= 0 ? shifted / 7 : (shifted - 6) / 7;
}

Date week_start(int week) { return Date{week * 7 - 3}; }

std::string iso_week_label(Date d) {
  // The ISO year/week of a date is the calendar year of its week's Thursday.
  const Date thursday = week_start(week_index(d)) + 3;
  int y, m, dd;
  thursday.to_ymd(y, m, dd);
  const Date jan1 = Date::from_ymd(y, 1, 1);
  const int week_of_year = (thursday - jan1) / 7 + 1;
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-W%02d", y, week_of_year);
  return buf;
}

std::string iso_week_label_of_index(int week) { return iso_week_label(week_start(week)); }

}  // namespace portres
