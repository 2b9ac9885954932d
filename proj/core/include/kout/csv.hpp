#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kout {

/** Every CSV this project emits starts with this schema-version comment. */
inline constexpr std::string_view kCsvVersionLine = "# kout-sketch v1";

/** Deterministic decimal rendering shared by every emitter so that a rerun
 *  with the same config is byte-identical: integers print exactly,
 *  everything else through a fixed "%.12g". */
std::string format_double(double x);

/**
 * In-memory CSV: a header row plus string cells.  Values are written
 * verbatim, so cells must not contain commas, newlines, or '#'-prefixed
 * text; nothing this project emits does.
 */
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /** Index of a header column; throws UnknownColumn. */
  std::size_t column(std::string_view name) const;

  /** Cell parsed as double; throws ParseError on malformed numbers. */
  double value(std::size_t row, std::size_t col) const;

  void add_row(std::vector<std::string> cells);  // width must match header
};

/** Serializes as version line, header row, data rows, LF line ends. */
std::string to_csv(const CsvTable& table);

/** Parses what to_csv produces; '#' comment lines and CR are tolerated
 *  anywhere, the first non-comment line is the header. */
CsvTable parse_csv(std::string_view text);

}  // namespace kout
