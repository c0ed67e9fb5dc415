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

// Per-chunk Monte Carlo kernels and the chunk-ordered stop logic shared by
// the OpenMP driver and the serial reference.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "thercom/simulate.hpp"

namespace thercom::detail {

struct SimCounts {
  std::uint64_t bits = 0;
  std::uint64_t primary_errors = 0;  // drives StopRule::min_errors
  std::uint64_t errors_alice = 0;
  std::uint64_t errors_bob = 0;
  std::uint64_t discarded_alice = 0;
  std::uint64_t discarded_bob = 0;
  std::uint64_t flagged_errors_alice = 0;
  std::uint64_t flagged_errors_bob = 0;
  std::uint64_t kept_errors_alice = 0;
  std::uint64_t kept_errors_bob = 0;
  std::uint64_t eve_secure_views = 0;
  std::uint64_t eve_scored = 0;
  std::uint64_t eve_correct = 0;
  std::uint64_t clamps = 0;

  SimCounts& operator+=(const SimCounts& o) {
    bits += o.bits;
    primary_errors += o.primary_errors;
    errors_alice += o.errors_alice;
    errors_bob += o.errors_bob;
    discarded_alice += o.discarded_alice;
    discarded_bob += o.discarded_bob;
    flagged_errors_alice += o.flagged_errors_alice;
    flagged_errors_bob += o.flagged_errors_bob;
    kept_errors_alice += o.kept_errors_alice;
    kept_errors_bob += o.kept_errors_bob;
    eve_secure_views += o.eve_secure_views;
    eve_scored += o.eve_scored;
    eve_correct += o.eve_correct;
    clamps += o.clamps;
    return *this;
  }
};

/// Everything a KLJN chunk needs, resolved once per run.
struct KljnPlan {
  KljnSimSpec spec;
  std::array<double, 3> voltage_var{};  // indexed by alice + bob
  std::array<double, 3> current_var{};
  bool need_current = false;
  bool eve_enabled = false;
  VoltageThresholds vth;
  CurrentThresholds cth;
  VoltageThresholds eve_th;
};

KljnPlan make_kljn_plan(const KljnSimSpec& spec);

SimCounts kljn_chunk(const KljnPlan& plan, std::uint64_t seed, std::uint64_t chunk,
                     std::uint64_t nbits);

SimCounts thermod_chunk(const ThermodSimSpec& spec, std::uint64_t seed, std::uint64_t chunk,
                        std::uint64_t nbits);

inline std::uint64_t chunk_count(const StopRule& stop, std::uint64_t chunk_size) {
  return (stop.max_bits + chunk_size - 1) / chunk_size;
}

inline std::uint64_t chunk_bits(const StopRule& stop, std::uint64_t chunk_size,
                                std::uint64_t chunk) {
  const std::uint64_t begin = chunk * chunk_size;
  return std::min(chunk_size, stop.max_bits - begin);
}

inline bool stop_reached(const StopRule& stop, const SimCounts& c) {
  return c.bits >= stop.max_bits || (stop.min_errors > 0 && c.primary_errors >= stop.min_errors);
}

/// Chunk-ordered reduction: chunks are merged in index order and the run
/// ends at the first chunk after which stop_reached holds.
template <class Kernel>
SimCounts run_chunks_serial(const StopRule& stop, std::uint64_t chunk_size, Kernel&& kernel) {
  SimCounts total;
  const std::uint64_t chunks = chunk_count(stop, chunk_size);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    total += kernel(c, chunk_bits(stop, chunk_size, c));
    if (stop_reached(stop, total)) break;
  }
  return total;
}

SimOutcome finalize(const SimCounts& c, const KljnPlan* plan, std::uint64_t seed,
                    std::uint64_t chunk_size);

void validate_chunking(const StopRule& stop, const ParallelOptions& opts);

}  // namespace thercom::detail
