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

#include <cstddef>
#include <string>
#include <vector>

#include "thercom/kljn.hpp"
#include "thercom/thermod.hpp"

namespace thercom {

/// One search dimension: lower, lower + step, ... up to upper (inclusive
/// within rounding).
struct GridAxis {
  double lower = 0.0;
  double upper = 0.0;
  double step = 0.001;

  /// Throws DomainError unless lower < upper and 0 < step.
  void validate(const char* name) const;
  std::size_t size() const;
  std::vector<double> points() const;
};

/// Search resolutions accepted for threshold grids.
inline constexpr double kMinGridStep = 0.001;
inline constexpr double kMaxGridStep = 0.05;

/// Per-parameter axes of a threshold search, in the detector's parameter
/// order: voltage (β, κ); current (η, ξ); flagging (β, κ, η, ξ); adaptive
/// (κ, ξ), or (κ) alone when ξ is tied to κ/α.
struct GridSpec {
  std::vector<GridAxis> axes;
};

/// Feasibility intervals shrunk by one step at each end.
GridSpec default_kljn_grid(const KljnConfig& cfg, DetectorKind detector, double step,
                           bool reduce_ndii = false);

/// Objective values over a product grid. `values` is row-major with the last
/// axis fastest; it is left empty when the grid is too large to materialize
/// (the 4-D flagging-detector search). Ties for the minimum go to the
/// lexicographically smallest parameter tuple.
struct SweepResult {
  std::vector<std::string> axis_names;
  std::vector<std::vector<double>> axes;
  std::vector<double> values;
  std::vector<std::size_t> argmin_index;
  std::vector<double> argmin;
  double minimum = 0.0;

  double value_at(const std::vector<std::size_t>& index) const;
};

enum class SearchMethod {
  automatic,       ///< exhaustive everywhere (the 4-D case is separable)
  exhaustive,      ///< every grid point, exactly
  coarse_to_fine,  ///< coarse pass then requested step around the incumbent
};

struct KljnOptimum {
  VoltageThresholds vth;
  CurrentThresholds cth;
  double bep = 0.0;
  SweepResult sweep;
};

/// Grid search of the detector's closed-form BEP. Thresholds the detector
/// does not use are left at their defaults.
KljnOptimum optimize_kljn_thresholds(const KljnConfig& cfg, DetectorKind detector,
                                     const GridSpec& grid, bool reduce_ndii = false,
                                     SearchMethod method = SearchMethod::automatic,
                                     int workers = 0);

/// Classical voltage BEP on the β × κ product grid.
SweepResult sweep_beta_kappa_surface(const KljnConfig& cfg, const GridAxis& beta_axis,
                                     const GridAxis& kappa_axis, int workers = 0);

/// TherMod BEP along χ for fixed (α, δ, N).
SweepResult sweep_chi(const ThermodConfig& cfg, const GridAxis& chi_axis);

/// Uniform-threshold TherMod BEP along α for fixed (δ, N). Every α must be > 1.
SweepResult sweep_alpha(double delta, int n_samples, const GridAxis& alpha_axis);

}  // namespace thercom
