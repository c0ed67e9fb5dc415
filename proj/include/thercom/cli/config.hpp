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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thercom/kljn.hpp"
#include "thercom/optimize.hpp"
#include "thercom/simulate.hpp"

namespace thercom::cli {

enum class Scheme { kljn, thermod };
enum class OutputFormat { csv, svg };
enum class SweepKind { chi, alpha };

/// Everything an experiment subcommand needs. Parsed from flat
/// `key = value` text; see known_config_keys() for the accepted keys.
struct ExperimentConfig {
  Scheme scheme = Scheme::kljn;
  DetectorKind detector = DetectorKind::classical_voltage;
  double alpha = 10.0;
  double delta = 0.1;
  std::vector<int> n_samples{100};

  // KLJN thresholds; ignored when optimize_thresholds is set.
  VoltageThresholds vth;
  CurrentThresholds cth;
  bool optimize_thresholds = false;
  double optimize_step = 0.001;
  SearchMethod search = SearchMethod::automatic;
  bool reduce_ndii = false;
  bool ndi_discard = true;

  // TherMod threshold; nullopt means the uniform (equal-error) threshold.
  std::optional<double> chi;
  SweepKind sweep = SweepKind::chi;
  GridAxis sweep_axis{1.101, 1.999, 0.001};

  SampleMode mode = SampleMode::gaussian_fit;
  StopRule stop;
  std::uint64_t seed = 1;
  std::uint64_t chunk_size = 1u << 16;

  std::string out;  // empty: standard output
  OutputFormat format = OutputFormat::csv;

  /// Re-checks every module invariant the config touches. Throws
  /// DomainError or ConfigError naming the offending key.
  void validate() const;
};

const std::vector<std::string>& known_config_keys();

/// Parses `key = value` lines; blank lines and lines starting with '#' are
/// skipped. Unknown keys and malformed values raise ConfigError naming the
/// key (and the line number).
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = {});

/// Same, for an ordered list of already-split pairs.
ExperimentConfig apply_config(const std::vector<std::pair<std::string, std::string>>& kv,
                              ExperimentConfig base = {});

ExperimentConfig load_config_file(const std::string& path);

/// The fully resolved config as re-loadable key/value pairs.
std::vector<std::pair<std::string, std::string>> resolved_config(const ExperimentConfig& cfg);

std::string to_string(Scheme s);
std::string to_string(OutputFormat f);
std::string to_string(SweepKind k);
std::string to_string(SearchMethod m);

/// "100", "50,100,200" or "50:400:50" (inclusive range).
std::vector<int> parse_n_list(const std::string& text);
std::string format_n_list(const std::vector<int>& ns);

}  // namespace thercom::cli
