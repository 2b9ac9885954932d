#include "kout/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "kout/errors.hpp"

namespace kout {

std::string format_double(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", x);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw UnknownColumn("no column named '" + std::string(name) + "'");
}

double CsvTable::value(std::size_t row, std::size_t col) const {
  const std::string& cell = rows.at(row).at(col);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError("cell '" + cell + "' is not a number");
  }
  return out;
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header.size()) {
    throw BadParameters("row width " + std::to_string(cells.size()) +
                        " does not match header width " +
                        std::to_string(header.size()));
  }
  rows.push_back(std::move(cells));
}

std::string to_csv(const CsvTable& table) {
  std::string out(kCsvVersionLine);
  out += '\n';
  auto append_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_row(table.header);
  for (const auto& row : table.rows) append_row(row);
  return out;
}

namespace {

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells = split_line(line);
    if (table.header.empty()) {
      table.header = std::move(cells);
    } else if (cells.size() != table.header.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.header.size()) + " cells, found " +
                       std::to_string(cells.size()));
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace kout
