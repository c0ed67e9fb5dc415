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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace thercom::cli {

/// A CSV document: '#'-prefixed `key = value` metadata lines, a mandatory
/// header row, then data rows of preformatted cells.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Throws IoError if the row width differs from the header.
  void add_row(std::vector<std::string> row);
  /// Index of a named column; throws IoError when absent.
  std::size_t column(const std::string& name) const;
  /// First metadata value for key, or empty.
  std::string meta(const std::string& key) const;
  double number(std::size_t row, const std::string& col) const;
};

/// Probabilities: 6 significant digits, scientific notation.
std::string fmt_bep(double p);
/// Parameters (thresholds, χ, α): up to 10 significant digits.
std::string fmt_real(double v);
std::string fmt_count(std::uint64_t v);

void write_csv(std::ostream& os, const Table& t);
/// Inverse of write_csv. Throws IoError on a missing header or ragged rows.
Table read_csv(std::istream& is);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace thercom::cli
