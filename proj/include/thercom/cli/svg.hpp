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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thercom/cli/table.hpp"

namespace thercom::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;  // points instead of a polyline
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = true;
  std::vector<Series> series;
};

/// Which table columns to draw. With a group column, every distinct value
/// of that column becomes its own set of series.
struct PlotSpec {
  std::string title;
  std::string x_column;
  std::vector<std::string> line_columns;
  std::vector<std::string> marker_columns;
  std::string group_column;
  std::string y_label = "bit error probability";
  bool log_y = true;
};

inline PlotSpec make_plot(std::string title, std::string x_column,
                          std::vector<std::string> lines, std::vector<std::string> markers = {},
                          std::string group_column = {}) {
  PlotSpec p;
  p.title = std::move(title);
  p.x_column = std::move(x_column);
  p.line_columns = std::move(lines);
  p.marker_columns = std::move(markers);
  p.group_column = std::move(group_column);
  return p;
}

Chart chart_from_table(const Table& t, const PlotSpec& spec);

/// Standalone SVG line chart with axes, ticks and a legend. Points with
/// non-finite coordinates, or y <= 0 on a log axis, are skipped.
std::string render_svg(const Chart& chart);

}  // namespace thercom::cli
