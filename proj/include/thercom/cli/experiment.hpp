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

#include "thercom/cli/config.hpp"
#include "thercom/cli/svg.hpp"
#include "thercom/cli/table.hpp"

namespace thercom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

std::string tool_version();

enum class Command { kljn_theory, kljn_sim, kljn_optimize, thermod_theory, thermod_sim, thermod_sweep };

std::string to_string(Command c);
Command parse_command(const std::string& s);
/// The scheme a command operates on.
Scheme scheme_of(Command c);

struct Result {
  Table table;
  PlotSpec plot;
  std::optional<Chart> chart;  // overrides plot when the table is not a plain curve

  Chart make_chart() const { return chart ? *chart : chart_from_table(table, plot); }
};

/// Seed for the i-th simulated point of a run with the given master seed.
std::uint64_t point_seed(std::uint64_t master, std::uint64_t index);

/// Runs one experiment subcommand. The table's metadata carries the tool
/// version, the command and the resolved config, so the CSV alone is enough
/// to repeat the run.
Result run_experiment(Command cmd, const ExperimentConfig& cfg, int workers = 0);

enum class FigureId { fig5, fig6, fig7, fig8, fig9, fig10 };
enum class Scale { desk, full };

std::string to_string(FigureId id);
FigureId parse_figure(const std::string& s);
std::string to_string(Scale s);
Scale parse_scale(const std::string& s);

struct FigureOptions {
  std::uint64_t seed = 1;
  Scale scale = Scale::desk;
  int workers = 0;
};

/// Simulated-bit cap per point: 10⁶ at desk scale, 10⁸ at full scale.
std::uint64_t max_bits_for(Scale s);

Result reproduce_figure(FigureId id, const FigureOptions& opts);

}  // namespace thercom::cli
