// Copyright 2026 The thercom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thercom/cli/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace thercom::cli {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 200;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string f(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

bool parse(const std::string& s, double& out) {
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Chart chart_from_table(const Table& t, const PlotSpec& spec) {
  Chart c;
  c.title = spec.title;
  c.x_label = spec.x_column;
  c.y_label = spec.y_label;
  c.log_y = spec.log_y;

  const std::size_t xi = t.column(spec.x_column);
  std::vector<std::string> groups{""};
  std::size_t gi = 0;
  if (!spec.group_column.empty()) {
    gi = t.column(spec.group_column);
    groups.clear();
    for (const auto& row : t.rows) {
      if (std::find(groups.begin(), groups.end(), row[gi]) == groups.end()) {
        groups.push_back(row[gi]);
      }
    }
  }
  auto add = [&](const std::string& col, bool markers) {
    const std::size_t yi = t.column(col);
    for (const auto& g : groups) {
      Series s;
      s.label = g.empty() ? col : g + " " + col;
      s.markers = markers;
      for (const auto& row : t.rows) {
        if (!spec.group_column.empty() && row[gi] != g) continue;
        double x = 0, y = 0;
        if (parse(row[xi], x) && parse(row[yi], y)) {
          s.x.push_back(x);
          s.y.push_back(y);
        }
      }
      c.series.push_back(std::move(s));
    }
  };
  for (const auto& col : spec.line_columns) add(col, false);
  for (const auto& col : spec.marker_columns) add(col, true);
  return c;
}

std::string render_svg(const Chart& chart) {
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!chart.log_y || y > 0);
  };
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : chart.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!usable(s.x[i], s.y[i])) continue;
      const double y = chart.log_y ? std::log10(s.y[i]) : s.y[i];
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!std::isfinite(x0)) {
    x0 = 0;
    x1 = 1;
    y0 = 0;
    y1 = 1;
  }
  if (chart.log_y) {
    y0 = std::floor(y0);
    y1 = std::ceil(y1);
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) {
    const double v = chart.log_y ? std::log10(y) : y;
    return kTop + (1.0 - (v - y0) / (y1 - y0)) * ph;
  };

  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + f(kWidth) + "\" height=\"" +
       f(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o += "<text x=\"" + f(kLeft + pw / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
       esc(chart.title) + "</text>\n";
  o += "<rect x=\"" + f(kLeft) + "\" y=\"" + f(kTop) + "\" width=\"" + f(pw) + "\" height=\"" +
       f(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double xv = x0 + (x1 - x0) * i / 5.0;
    const double X = px(xv);
    o += "<line x1=\"" + f(X) + "\" y1=\"" + f(kTop + ph) + "\" x2=\"" + f(X) + "\" y2=\"" +
         f(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + f(X) + "\" y=\"" + f(kTop + ph + 18) + "\" text-anchor=\"middle\">" +
         tick_label(xv) + "</text>\n";
  }
  const int ny = chart.log_y ? static_cast<int>(y1 - y0) : 5;
  const int step = std::max(1, ny / 10);
  for (int i = 0; i <= ny; i += step) {
    const double v = y0 + (y1 - y0) * i / ny;
    const double Y = kTop + (1.0 - (v - y0) / (y1 - y0)) * ph;
    const std::string label = chart.log_y ? "1e" + tick_label(v) : tick_label(v);
    o += "<line x1=\"" + f(kLeft - 5) + "\" y1=\"" + f(Y) + "\" x2=\"" + f(kLeft + pw) +
         "\" y2=\"" + f(Y) + "\" stroke=\"#ddd\"/>\n";
    o += "<text x=\"" + f(kLeft - 8) + "\" y=\"" + f(Y + 4) + "\" text-anchor=\"end\">" + label +
         "</text>\n";
  }
  o += "<text x=\"" + f(kLeft + pw / 2) + "\" y=\"" + f(kHeight - 15) +
       "\" text-anchor=\"middle\">" + esc(chart.x_label) + "</text>\n";
  o += "<text transform=\"translate(18," + f(kTop + ph / 2) +
       ") rotate(-90)\" text-anchor=\"middle\">" + esc(chart.y_label) + "</text>\n";

  for (std::size_t si = 0; si < chart.series.size(); ++si) {
    const auto& s = chart.series[si];
    const std::string color = kPalette[si % std::size(kPalette)];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!usable(s.x[i], s.y[i])) continue;
      if (s.markers) {
        o += "<circle cx=\"" + f(px(s.x[i])) + "\" cy=\"" + f(py(s.y[i])) +
             "\" r=\"3\" fill=\"none\" stroke=\"" + color + "\"/>\n";
      } else {
        pts += f(px(s.x[i])) + "," + f(py(s.y[i])) + " ";
      }
    }
    if (!s.markers && !pts.empty()) {
      o += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"" +
           pts + "\"/>\n";
    }
    const double ly = kTop + 10 + 16.0 * static_cast<double>(si);
    const double lx = kLeft + pw + 12;
    if (s.markers) {
      o += "<circle cx=\"" + f(lx + 10) + "\" cy=\"" + f(ly - 4) + "\" r=\"3\" fill=\"none\" stroke=\"" +
           color + "\"/>\n";
    } else {
      o += "<line x1=\"" + f(lx) + "\" y1=\"" + f(ly - 4) + "\" x2=\"" + f(lx + 20) + "\" y2=\"" +
           f(ly - 4) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    }
    o += "<text x=\"" + f(lx + 26) + "\" y=\"" + f(ly) + "\">" + esc(s.label) + "</text>\n";
  }
  o += "</svg>\n";
  return o;
}

}  // namespace thercom::cli
