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

// Serial reference implementations of the parallel kernels. They share no
// scheduling code with the OpenMP paths and exist so tests and benchmarks
// can compare against them.

#include <cstdint>
#include <functional>
#include <vector>

#include "thercom/optimize.hpp"
#include "thercom/simulate.hpp"

namespace thercom::reference {

/// Single-threaded Monte Carlo; same chunk streams and stop rule as
/// simulate_kljn, so outcomes must match it exactly.
SimOutcome simulate_kljn(const KljnSimSpec& spec, const StopRule& stop, std::uint64_t seed,
                         std::uint64_t chunk_size = 1u << 16);

SimOutcome simulate_thermod(const ThermodSimSpec& spec, const StopRule& stop, std::uint64_t seed,
                            std::uint64_t chunk_size = 1u << 16);

struct BruteForceMin {
  std::vector<double> argmin;
  double minimum = 0.0;
};

/// Nested-loop exhaustive minimization of an arbitrary objective over the
/// product of `axes`; first strict improvement wins, in lexicographic order.
BruteForceMin brute_force_min(const std::vector<std::vector<double>>& axes,
                              const std::function<double(const std::vector<double>&)>& objective);

/// Direct 4-D search of the flagging detector's BEP, without the own-bit
/// decomposition used by optimize_kljn_thresholds.
BruteForceMin brute_force_ndi(const KljnConfig& cfg, const GridSpec& grid);

}  // namespace thercom::reference
