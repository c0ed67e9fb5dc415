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

// OpenMP product-grid evaluation with a deterministic min-reduction.

#include <omp.h>

#include <array>
#include <cstddef>
#include <exception>
#include <limits>
#include <vector>

namespace thercom::detail {

inline constexpr std::size_t kMaxGridDims = 4;
using GridPoint = std::array<double, kMaxGridDims>;

struct GridMin {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();

  // Smaller value wins; equal values go to the smaller flat index, which is
  // the lexicographically smaller parameter tuple.
  void offer(double v, std::size_t i) {
    if (v < value || (v == value && i < index)) {
      value = v;
      index = i;
    }
  }
};

inline std::size_t grid_size(const std::vector<std::vector<double>>& axes) {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size();
  return n;
}

/// Row-major decode, last axis fastest.
inline GridPoint grid_point(const std::vector<std::vector<double>>& axes, std::size_t flat,
                            std::array<std::size_t, kMaxGridDims>* index = nullptr) {
  GridPoint p{};
  for (std::size_t d = axes.size(); d-- > 0;) {
    const std::size_t n = axes[d].size();
    const std::size_t i = flat % n;
    flat /= n;
    p[d] = axes[d][i];
    if (index != nullptr) (*index)[d] = i;
  }
  return p;
}

/// Minimizes f over the product of `axes`. If `values` is non-null it is
/// resized and filled with every objective value.
template <class F>
GridMin grid_min_parallel(const std::vector<std::vector<double>>& axes, F&& f,
                          std::vector<double>* values, int workers) {
  const std::size_t total = grid_size(axes);
  if (values != nullptr) values->assign(total, 0.0);
  const int threads = workers > 0 ? workers : omp_get_max_threads();

  GridMin best;
  std::exception_ptr failure;
#pragma omp parallel num_threads(threads)
  {
    GridMin local;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(total); ++k) {
      const auto i = static_cast<std::size_t>(k);
      try {
        const double v = f(grid_point(axes, i));
        if (values != nullptr) (*values)[i] = v;
        local.offer(v, i);
      } catch (...) {
#pragma omp critical(thercom_grid_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(thercom_grid_merge)
    best.offer(local.value, local.index);
  }
  if (failure) std::rethrow_exception(failure);
  return best;
}

}  // namespace thercom::detail
