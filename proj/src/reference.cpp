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

#include "thercom/reference.hpp"

#include <limits>

#include "sim_kernels.hpp"

namespace thercom::reference {

SimOutcome simulate_kljn(const KljnSimSpec& spec, const StopRule& stop, std::uint64_t seed,
                         std::uint64_t chunk_size) {
  detail::validate_chunking(stop, {chunk_size, 1});
  const detail::KljnPlan plan = detail::make_kljn_plan(spec);
  const auto counts =
      detail::run_chunks_serial(stop, chunk_size, [&](std::uint64_t c, std::uint64_t bits) {
        return detail::kljn_chunk(plan, seed, c, bits);
      });
  return detail::finalize(counts, &plan, seed, chunk_size);
}

SimOutcome simulate_thermod(const ThermodSimSpec& spec, const StopRule& stop, std::uint64_t seed,
                            std::uint64_t chunk_size) {
  detail::validate_chunking(stop, {chunk_size, 1});
  spec.validate();
  const auto counts =
      detail::run_chunks_serial(stop, chunk_size, [&](std::uint64_t c, std::uint64_t bits) {
        return detail::thermod_chunk(spec, seed, c, bits);
      });
  return detail::finalize(counts, nullptr, seed, chunk_size);
}

namespace {

void recurse(const std::vector<std::vector<double>>& axes, std::size_t depth,
             std::vector<double>& point,
             const std::function<double(const std::vector<double>&)>& objective,
             BruteForceMin& best) {
  if (depth == axes.size()) {
    const double v = objective(point);
    if (v < best.minimum) {
      best.minimum = v;
      best.argmin = point;
    }
    return;
  }
  for (double x : axes[depth]) {
    point[depth] = x;
    recurse(axes, depth + 1, point, objective, best);
  }
}

}  // namespace

BruteForceMin brute_force_min(const std::vector<std::vector<double>>& axes,
                              const std::function<double(const std::vector<double>&)>& objective) {
  BruteForceMin best;
  best.minimum = std::numeric_limits<double>::infinity();
  std::vector<double> point(axes.size());
  recurse(axes, 0, point, objective, best);
  return best;
}

BruteForceMin brute_force_ndi(const KljnConfig& cfg, const GridSpec& grid) {
  std::vector<std::vector<double>> axes;
  for (const auto& a : grid.axes) axes.push_back(a.points());
  return brute_force_min(axes, [&](const std::vector<double>& p) {
    return bep_ndi(cfg, {p[0], p[1]}, {p[2], p[3]});
  });
}

}  // namespace thercom::reference
