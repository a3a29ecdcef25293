#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhj::report {

/// %.6g, or %.17g with `full`. Non-finite values print as nan / inf / -inf.
std::string format_number(double value, bool full = false);
/// Empty string for a missing value.
std::string format_optional(const std::optional<double>& value, bool full = false);

/// Header plus string cells, one row per record.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<std::string> row);
};

/// Comma separated, header first, LF line endings. Cells containing a comma,
/// quote or line break are quoted with doubled inner quotes.
std::string to_csv(const Table& table);

/// Inverse of to_csv. Throws std::invalid_argument on malformed input or
/// ragged rows.
Table parse_csv(std::string_view text);

}  // namespace qhj::report
