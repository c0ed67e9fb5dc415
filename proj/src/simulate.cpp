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

// OpenMP driver for the Monte Carlo engine. Chunks are computed in waves on
// the worker pool and merged strictly in chunk order, so the outcome equals
// the serial reference for the same (seed, chunk_size).

#include <omp.h>

#include <vector>

#include "sim_kernels.hpp"

namespace thercom {

namespace {

template <class Kernel>
detail::SimCounts run_chunks_parallel(const StopRule& stop, const ParallelOptions& opts,
                                      Kernel&& kernel) {
  const int workers = opts.workers > 0 ? opts.workers : omp_get_max_threads();
  const std::uint64_t chunks = detail::chunk_count(stop, opts.chunk_size);
  const std::uint64_t wave = static_cast<std::uint64_t>(workers) * 2;

  detail::SimCounts total;
  std::vector<detail::SimCounts> partial;
  for (std::uint64_t first = 0; first < chunks; first += wave) {
    const std::uint64_t count = std::min(wave, chunks - first);
    partial.assign(count, {});
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
      const std::uint64_t c = first + static_cast<std::uint64_t>(k);
      partial[static_cast<std::size_t>(k)] =
          kernel(c, detail::chunk_bits(stop, opts.chunk_size, c));
    }
    for (const auto& p : partial) {
      total += p;
      if (detail::stop_reached(stop, total)) return total;
    }
  }
  return total;
}

}  // namespace

SimOutcome simulate_kljn(const KljnSimSpec& spec, const StopRule& stop, std::uint64_t seed,
                         const ParallelOptions& opts) {
  detail::validate_chunking(stop, opts);
  const detail::KljnPlan plan = detail::make_kljn_plan(spec);
  const auto counts = run_chunks_parallel(stop, opts, [&](std::uint64_t c, std::uint64_t bits) {
    return detail::kljn_chunk(plan, seed, c, bits);
  });
  return detail::finalize(counts, &plan, seed, opts.chunk_size);
}

SimOutcome simulate_thermod(const ThermodSimSpec& spec, const StopRule& stop, std::uint64_t seed,
                            const ParallelOptions& opts) {
  detail::validate_chunking(stop, opts);
  spec.validate();
  const auto counts = run_chunks_parallel(stop, opts, [&](std::uint64_t c, std::uint64_t bits) {
    return detail::thermod_chunk(spec, seed, c, bits);
  });
  return detail::finalize(counts, nullptr, seed, opts.chunk_size);
}

}  // namespace thercom
