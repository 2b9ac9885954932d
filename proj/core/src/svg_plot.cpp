#include "kout/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "kout/errors.hpp"

namespace kout {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 62.0;
constexpr double kRight = 624.0;
constexpr double kTop = 34.0;
constexpr double kBottom = 394.0;

constexpr const char* kPalette[] = {"#4477aa", "#ee6677", "#228833",
                                    "#ccbb44", "#66ccee", "#aa3377",
                                    "#bbbbbb"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Series {
  std::string label;
  std::size_t color = 0;
  std::vector<std::pair<double, double>> points;  // axis-space coordinates
};

std::string fmt(const char* format, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, a);
  return buf;
}

std::string fmt2(double a, double b) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.2f,%.2f", a, b);
  return buf;
}

std::string text_element(double x, double y, const std::string& anchor,
                         int size, const std::string& body,
                         const std::string& extra = "") {
  std::string out = "<text x=\"" + fmt("%.2f", x) + "\" y=\"" +
                    fmt("%.2f", y) + "\" text-anchor=\"" + anchor +
                    "\" font-family=\"sans-serif\" font-size=\"" +
                    std::to_string(size) + "\"" + extra + ">" + body +
                    "</text>\n";
  return out;
}

}  // namespace

std::string render_svg(const CsvTable& table, const PlotSpec& spec) {
  std::vector<Series> series;
  if (!table.rows.empty()) {
    std::size_t x_col = table.column(spec.x_column);
    std::size_t group_col = 0;
    bool grouped = !spec.group_by.empty();
    if (grouped) group_col = table.column(spec.group_by);

    for (const std::string& y_name : spec.y_columns) {
      std::size_t y_col = table.column(y_name);
      // Group values in first-appearance order keep reruns byte-stable.
      std::vector<std::string> groups;
      if (grouped) {
        for (const auto& row : table.rows) {
          if (std::find(groups.begin(), groups.end(), row[group_col]) ==
              groups.end()) {
            groups.push_back(row[group_col]);
          }
        }
      } else {
        groups.push_back("");
      }
      for (const std::string& g : groups) {
        Series s;
        s.label = grouped ? y_name + " " + spec.group_by + "=" + g : y_name;
        s.color = series.size() % kPaletteSize;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
          if (grouped && table.rows[i][group_col] != g) continue;
          double x = table.value(i, x_col);
          double y = table.value(i, y_col);
          if (!std::isfinite(x) || !std::isfinite(y)) continue;
          if (spec.log_x) {
            if (x <= 0.0) continue;
            x = std::log10(x);
          }
          if (spec.log_y) {
            if (y <= 0.0) continue;
            y = std::log10(y);
          }
          s.points.emplace_back(x, y);
        }
        series.push_back(std::move(s));
      }
    }
  }

  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  bool any = false;
  for (const Series& s : series) {
    for (auto [x, y] : s.points) {
      if (!any) {
        x_min = x_max = x;
        y_min = y_max = y;
        any = true;
      } else {
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
      }
    }
  }
  if (x_min == x_max) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (y_min == y_max) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  double x_pad = (x_max - x_min) * 0.04;
  double y_pad = (y_max - y_min) * 0.04;
  x_min -= x_pad;
  x_max += x_pad;
  y_min -= y_pad;
  y_max += y_pad;

  auto px = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
  };
  auto py = [&](double y) {
    return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"440\" viewBox=\"0 0 640 440\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"440\" "
         "fill=\"#ffffff\"/>\n";

  // Gridlines and tick labels at five even positions per axis.
  for (int i = 0; i <= 4; ++i) {
    double tx = x_min + (x_max - x_min) * i / 4.0;
    double ty = y_min + (y_max - y_min) * i / 4.0;
    double gx = px(tx);
    double gy = py(ty);
    svg += "<line x1=\"" + fmt("%.2f", gx) + "\" y1=\"" + fmt("%.2f", kTop) +
           "\" x2=\"" + fmt("%.2f", gx) + "\" y2=\"" + fmt("%.2f", kBottom) +
           "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", gy) +
           "\" x2=\"" + fmt("%.2f", kRight) + "\" y2=\"" + fmt("%.2f", gy) +
           "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    double x_value = spec.log_x ? std::pow(10.0, tx) : tx;
    double y_value = spec.log_y ? std::pow(10.0, ty) : ty;
    svg += text_element(gx, kBottom + 16.0, "middle", 10,
                        fmt("%.6g", x_value));
    svg += text_element(kLeft - 6.0, gy + 3.5, "end", 10,
                        fmt("%.6g", y_value));
  }

  svg += "<rect x=\"" + fmt("%.2f", kLeft) + "\" y=\"" + fmt("%.2f", kTop) +
         "\" width=\"" + fmt("%.2f", kRight - kLeft) + "\" height=\"" +
         fmt("%.2f", kBottom - kTop) +
         "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (const Series& s : series) {
    if (s.points.empty()) continue;
    const char* color = kPalette[s.color];
    if (s.points.size() > 1) {
      std::string pts;
      for (auto [x, y] : s.points) {
        if (!pts.empty()) pts += ' ';
        pts += fmt2(px(x), py(y));
      }
      svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
             color + "\" stroke-width=\"1.5\"/>\n";
    }
    for (auto [x, y] : s.points) {
      svg += "<circle cx=\"" + fmt("%.2f", px(x)) + "\" cy=\"" +
             fmt("%.2f", py(y)) + "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
    }
  }

  if (!spec.title.empty()) {
    svg += text_element((kLeft + kRight) / 2.0, 20.0, "middle", 13,
                        spec.title, " font-weight=\"bold\"");
  }
  svg += text_element((kLeft + kRight) / 2.0, kHeight - 12.0, "middle", 11,
                      spec.x_column);

  // Legend, top-right, one entry per series in declaration order.
  double legend_y = kTop + 14.0;
  for (const Series& s : series) {
    double lx = kRight - 150.0;
    svg += "<line x1=\"" + fmt("%.2f", lx) + "\" y1=\"" +
           fmt("%.2f", legend_y - 3.5) + "\" x2=\"" + fmt("%.2f", lx + 18.0) +
           "\" y2=\"" + fmt("%.2f", legend_y - 3.5) + "\" stroke=\"" +
           kPalette[s.color] + "\" stroke-width=\"2\"/>\n";
    svg += text_element(lx + 23.0, legend_y, "start", 11, s.label);
    legend_y += 15.0;
  }

  if (spec.annotate_slope && !series.empty() && series[0].points.size() > 1) {
    const auto& pts = series[0].points;
    double mx = 0.0, my = 0.0;
    for (auto [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0;
    for (auto [x, y] : pts) {
      sxx += (x - mx) * (x - mx);
      sxy += (x - mx) * (y - my);
    }
    if (sxx > 0.0) {
      svg += text_element(kLeft + 8.0, kBottom - 8.0, "start", 11,
                          "slope " + fmt("%.3f", sxy / sxx));
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace kout
