#pragma once

#include <string>
#include <vector>

#include "kout/csv.hpp"

namespace kout {

struct PlotSpec {
  std::string x_column;
  std::vector<std::string> y_columns;  // one line per column (and per group)
  std::string group_by;  // optional: split every y column by this column
  std::string title;
  bool log_x = true;
  bool log_y = true;
  bool annotate_slope = false;  // least-squares fit over the first y column
};

/**
 * Static line plot of CSV columns.  A pure function of its inputs:
 * identical (table, spec) bytes yield byte-identical SVG.  Under a log
 * axis, points with a nonpositive or non-finite coordinate are dropped;
 * the slope annotation is fitted in axis (possibly log) space.  A table
 * without data rows renders as empty axes.  Throws UnknownColumn when a
 * referenced column is missing.
 */
std::string render_svg(const CsvTable& table, const PlotSpec& spec);

}  // namespace kout
