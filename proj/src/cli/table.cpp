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

#include "thercom/cli/table.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "thercom/error.hpp"

namespace thercom::cli {

namespace {

void check_cell(const std::string& cell) {
  if (cell.find_first_of(",\n\r") != std::string::npos) {
    throw IoError("CSV cell '" + cell + "' contains a separator");
  }
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw IoError("row has " + std::to_string(row.size()) + " cells, header has " +
                  std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw IoError("no column named '" + name + "'");
}

std::string Table::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return {};
}

double Table::number(std::size_t row, const std::string& col) const {
  const std::string& cell = rows.at(row).at(column(col));
  double v = 0.0;
  const auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || p != cell.data() + cell.size()) {
    throw IoError("cell '" + cell + "' in column '" + col + "' is not a number");
  }
  return v;
}

std::string fmt_bep(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", p);
  return buf;
}

std::string fmt_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_count(std::uint64_t v) { return std::to_string(v); }

void write_csv(std::ostream& os, const Table& t) {
  for (const auto& [k, v] : t.metadata) {
    if (k.find('\n') != std::string::npos || v.find('\n') != std::string::npos) {
      throw IoError("metadata entry '" + k + "' spans lines");
    }
    os << "# " << k << " = " << v << '\n';
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    check_cell(t.columns[i]);
    os << (i ? "," : "") << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      check_cell(row[i]);
      os << (i ? "," : "") << row[i];
    }
    os << '\n';
  }
}

Table read_csv(std::istream& is) {
  Table t;
  bool have_header = false;
  int line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (!line.empty() && line[0] == '#') {
        std::string body = line.substr(1);
        if (!body.empty() && body[0] == ' ') body.erase(0, 1);
        const auto eq = body.find(" = ");
        if (eq == std::string::npos) {
          t.metadata.emplace_back(body, "");
        } else {
          t.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 3));
        }
        continue;
      }
      if (line.empty()) throw IoError("CSV line " + std::to_string(line_no) + ": missing header");
      t.columns = split_row(line);
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    auto cells = split_row(line);
    if (cells.size() != t.columns.size()) {
      throw IoError("CSV line " + std::to_string(line_no) + ": expected " +
                    std::to_string(t.columns.size()) + " cells, found " +
                    std::to_string(cells.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  if (!have_header) throw IoError("CSV has no header row");
  return t;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace thercom::cli
