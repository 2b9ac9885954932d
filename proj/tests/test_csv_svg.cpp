#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "kout/csv.hpp"
#include "kout/errors.hpp"
#include "kout/svg_plot.hpp"

using namespace kout;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

CsvTable demo_table() {
  CsvTable t;
  t.header = {"n", "mean", "kind"};
  t.add_row({"16", "4.5", "a"});
  t.add_row({"32", "2.25", "a"});
  t.add_row({"64", "1.125", "a"});
  t.add_row({"16", "9", "b"});
  t.add_row({"32", "4.5", "b"});
  t.add_row({"64", "2.25", "b"});
  return t;
}

}  // namespace

TEST_CASE("format_double") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-3.0) == "-3");
  CHECK(format_double(1048576.0) == "1048576");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(1e16) == "1e+16");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("csv serialization round trip") {
  CsvTable t = demo_table();
  std::string text = to_csv(t);
  CHECK(text.rfind(std::string(kCsvVersionLine) + "\n", 0) == 0);
  CHECK(text.back() == '\n');
  CsvTable back = parse_csv(text);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  // Serialization is pure.
  CHECK(to_csv(t) == text);
}

TEST_CASE("csv parser tolerates comments, blanks, and CRLF") {
  std::string text =
      "# kout-sketch v1\r\n"
      "\r\n"
      "a,b\r\n"
      "# midstream comment\n"
      "1,2\n"
      "\n"
      "3,4\r\n";
  CsvTable t = parse_csv(text);
  CHECK(t.header == std::vector<std::string>{"a", "b"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.value(1, t.column("b")) == 4.0);
  CHECK(parse_csv("").header.empty());
  CHECK(parse_csv("# only a comment\n").rows.empty());
}

TEST_CASE("csv errors carry context") {
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), ParseError);
  try {
    parse_csv("a,b\n1,2\n3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  CsvTable t = demo_table();
  CHECK(t.column("mean") == 1);
  CHECK_THROWS_AS(t.column("nope"), UnknownColumn);
  CHECK_THROWS_AS(t.value(0, 2), ParseError);  // "a" is not a number
  CHECK_THROWS_AS(t.add_row({"1", "2"}), BadParameters);
}

TEST_CASE("svg output is deterministic and well formed") {
  CsvTable t = demo_table();
  PlotSpec spec;
  spec.x_column = "n";
  spec.y_columns = {"mean"};
  spec.title = "decay";
  std::string svg = render_svg(t, spec);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("decay") != std::string::npos);
  CHECK(render_svg(t, spec) == svg);
}

TEST_CASE("grouping splits series and the legend follows") {
  CsvTable t = demo_table();
  PlotSpec spec;
  spec.x_column = "n";
  spec.y_columns = {"mean"};
  SUBCASE("ungrouped: one polyline") {
    std::string svg = render_svg(t, spec);
    CHECK(count_of(svg, "<polyline") == 1);
  }
  SUBCASE("grouped: one per group value, labeled") {
    spec.group_by = "kind";
    std::string svg = render_svg(t, spec);
    CHECK(count_of(svg, "<polyline") == 2);
    CHECK(svg.find("kind=a") != std::string::npos);
    CHECK(svg.find("kind=b") != std::string::npos);
  }
}

TEST_CASE("log axes drop nonpositive points") {
  CsvTable t;
  t.header = {"x", "y"};
  t.add_row({"1", "10"});
  t.add_row({"2", "0"});    // dropped under log y
  t.add_row({"4", "100"});
  PlotSpec spec;
  spec.x_column = "x";
  spec.y_columns = {"y"};
  std::string log_svg = render_svg(t, spec);
  CHECK(count_of(log_svg, "<circle") == 2);
  spec.log_y = false;
  std::string lin_svg = render_svg(t, spec);
  CHECK(count_of(lin_svg, "<circle") == 3);
}

TEST_CASE("slope annotation fits the first series") {
  // mean halves per doubling of n: slope -1 in log-log space.
  CsvTable t = demo_table();
  PlotSpec spec;
  spec.x_column = "n";
  spec.y_columns = {"mean"};
  spec.group_by = "kind";
  spec.annotate_slope = true;
  std::string svg = render_svg(t, spec);
  CHECK(svg.find("slope -1.000") != std::string::npos);
}

TEST_CASE("empty tables render empty axes") {
  CsvTable t;
  t.header = {"x", "y"};
  PlotSpec spec;
  spec.x_column = "x";
  spec.y_columns = {"y"};
  std::string svg = render_svg(t, spec);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<polyline") == 0);
  CHECK(count_of(svg, "<circle") == 0);

  // A table with rows but a bad column name still reports the mistake.
  CsvTable full = demo_table();
  spec.x_column = "missing";
  CHECK_THROWS_AS(render_svg(full, spec), UnknownColumn);
}

TEST_CASE("multiple y columns get separate series") {
  CsvTable t;
  t.header = {"x", "lo", "hi"};
  t.add_row({"1", "1", "2"});
  t.add_row({"2", "2", "4"});
  PlotSpec spec;
  spec.x_column = "x";
  spec.y_columns = {"lo", "hi"};
  std::string svg = render_svg(t, spec);
  CHECK(count_of(svg, "<polyline") == 2);
  CHECK(svg.find("lo") != std::string::npos);
  CHECK(svg.find("hi") != std::string::npos);
}
