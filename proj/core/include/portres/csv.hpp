#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace portres {

/// Splits one delimited line. Handles RFC 4180 quoting; does not handle
/// embedded newlines (none of the supported inputs contain them).
std::vector<std::string> split_delimited(std::string_view line, char delim = ',');

/// Header-mapped reader over delimited text.
class CsvReader {
 public:
  CsvReader(std::istream& in, char delim = ',');

  const std::vector<std::string>& header() const { return header_; }

  /// Index of `name` in the header, or -1.
  int column(const std::string& name) const;

  /// Index of `name`; throws std::runtime_error naming the column if absent.
  std::size_t require_column(const std::string& name) const;

  /// Reads the next row; false on end of stream. Blank lines are skipped.
  bool next(std::vector<std::string>& fields);

  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  char delim_;
  std::vector<std::string> header_;
  std::map<std::string, std::size_t> index_;
  std::size_t line_ = 0;
};

/// Fixed-column writer; numeric cells are formatted by the caller.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header, char delim = ',');
  void write_row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  char delim_;
  std::size_t width_;
};

/// Canonical float formatting for artifacts: shortest representation that
/// round-trips, so re-runs are byte-identical.
std::string format_double(double v);
std::string format_fixed(double v, int digits);

}  // namespace portres
