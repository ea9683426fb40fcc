#include "portres/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace portres {

std::vector<std::string> split_delimited(std::string_view line, char delim) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == delim) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

namespace {
std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}
}  // namespace

CsvReader::CsvReader(std::istream& in, char delim) : in_(in), delim_(delim) {
  std::string line;
  if (std::getline(in_, line)) {
    ++line_;
    header_ = split_delimited(strip_cr(std::move(line)), delim_);
    for (std::size_t i = 0; i < header_.size(); ++i) index_[header_[i]] = i;
  }
}

int CsvReader::column(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : static_cast<int>(it->second);
}

std::size_t CsvReader::require_column(const std::string& name) const {
  const int idx = column(name);
  if (idx < 0) throw std::runtime_error("missing required column: " + name);
  return static_cast<std::size_t>(idx);
}

bool CsvReader::next(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    line = strip_cr(std::move(line));
    if (line.empty()) continue;
    fields = split_delimited(line, delim_);
    return true;
  }
  return false;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header, char delim)
    : out_(out), delim_(delim), width_(header.size()) {
  write_row(header);
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
  if (fields.size() != width_)
    throw std::runtime_error("row width mismatch: expected " + std::to_string(width_) +
                             ", got " + std::to_string(fields.size()));
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_.put(delim_);
    out_ << fields[i];
  }
  out_.put('\n');
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace portres
