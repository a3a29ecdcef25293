#include "qhj/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qhj::report {

std::string format_number(double value, bool full) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, full ? "%.17g" : "%.6g", value);
  return buf;
}

std::string format_optional(const std::optional<double>& value, bool full) {
  return value ? format_number(*value, full) : std::string();
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw std::invalid_argument("table row has " + std::to_string(row.size()) + " cells, header has " +
                                std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

namespace {

void write_cell(std::string& out, const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) {
    out += cell;
    return;
  }
  out += '"';
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void write_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    write_cell(out, cells[i]);
  }
  out += '\n';
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  write_line(out, table.header);
  for (const auto& row : table.rows) write_line(out, row);
  return out;
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> current;
  std::string cell;
  bool quoted = false;
  bool cell_started = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        cell += c;
      }
      ++i;
      continue;
    }
    if (c == '"') {
      if (!cell.empty()) throw std::invalid_argument("CSV: quote inside an unquoted cell");
      quoted = true;
      cell_started = true;
    } else if (c == ',') {
      current.push_back(std::move(cell));
      cell.clear();
      cell_started = true;
    } else if (c == '\n') {
      current.push_back(std::move(cell));
      cell.clear();
      lines.push_back(std::move(current));
      current.clear();
      cell_started = false;
    } else if (c == '\r') {
      throw std::invalid_argument("CSV: carriage return outside a quoted cell");
    } else {
      cell += c;
      cell_started = true;
    }
    ++i;
  }
  if (quoted) throw std::invalid_argument("CSV: unterminated quoted cell");
  if (cell_started || !cell.empty() || !current.empty()) {
    current.push_back(std::move(cell));
    lines.push_back(std::move(current));
  }
  if (lines.empty()) throw std::invalid_argument("CSV: missing header row");

  Table table;
  table.header = std::move(lines.front());
  for (std::size_t k = 1; k < lines.size(); ++k) table.add_row(std::move(lines[k]));
  return table;
}

}  // namespace qhj::report
