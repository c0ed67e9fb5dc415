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

#include "thercom/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "check.hpp"
#include "grid_kernels.hpp"

namespace thercom {

using detail::GridPoint;

void GridAxis::validate(const char* name) const {
  detail::require_finite(lower, name);
  detail::require_finite(upper, name);
  detail::require_finite(step, name);
  if (!(lower < upper)) {
    throw DomainError(std::string(name) + " grid: lower (" + detail::num(lower) +
                      ") must be < upper (" + detail::num(upper) + ")");
  }
  if (!(step > 0.0)) {
    throw DomainError(std::string(name) + " grid: step must be > 0");
  }
}

std::size_t GridAxis::size() const {
  return static_cast<std::size_t>(std::floor((upper - lower) / step + 1e-9)) + 1;
}

std::vector<double> GridAxis::points() const {
  const std::size_t n = size();
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = lower + static_cast<double>(i) * step;
  return p;
}

double SweepResult::value_at(const std::vector<std::size_t>& index) const {
  if (index.size() != axes.size()) throw DomainError("value_at: wrong number of indices");
  if (values.empty()) throw DomainError("value_at: sweep values were not materialized");
  std::size_t flat = 0;
  for (std::size_t d = 0; d < axes.size(); ++d) {
    if (index[d] >= axes[d].size()) throw DomainError("value_at: index out of range");
    flat = flat * axes[d].size() + index[d];
  }
  return values[flat];
}

namespace {

struct Interval {
  double lo;
  double hi;
  const char* name;
};

std::vector<Interval> feasible_intervals(const KljnConfig& cfg, DetectorKind detector,
                                         bool reduce_ndii) {
  const double a = cfg.alpha;
  const Interval beta{1.0, 2.0 * a / (1.0 + a), "beta"};
  const Interval kappa{2.0 * a / (1.0 + a), a, "kappa"};
  const Interval eta{1.0 / a, 2.0 / (1.0 + a), "eta"};
  const Interval xi{2.0 / (1.0 + a), 1.0, "xi"};
  switch (detector) {
    case DetectorKind::classical_voltage: return {beta, kappa};
    case DetectorKind::classical_current: return {eta, xi};
    case DetectorKind::new_detector_1: return {beta, kappa, eta, xi};
    case DetectorKind::new_detector_2:
      if (reduce_ndii) return {kappa};
      return {kappa, xi};
  }
  return {};
}

void check_step(double step) {
  if (!(step >= kMinGridStep * (1 - 1e-9) && step <= kMaxGridStep * (1 + 1e-9))) {
    throw DomainError("grid step " + detail::num(step) + " outside [" +
                      detail::num(kMinGridStep) + ", " + detail::num(kMaxGridStep) + "]");
  }
}

void check_axis_inside(const GridAxis& axis, const Interval& iv) {
  axis.validate(iv.name);
  check_step(axis.step);
  const double last = axis.lower + static_cast<double>(axis.size() - 1) * axis.step;
  if (!(axis.lower > iv.lo && last < iv.hi)) {
    throw DomainError(std::string(iv.name) + " grid [" + detail::num(axis.lower) + ", " +
                      detail::num(last) + "] leaves the feasible interval (" +
                      detail::num(iv.lo) + ", " + detail::num(iv.hi) + ")");
  }
}

std::vector<std::string> names_of(const std::vector<Interval>& ivs) {
  std::vector<std::string> n;
  for (const auto& iv : ivs) n.emplace_back(iv.name);
  return n;
}

void fill_argmin(SweepResult& r, std::size_t flat, double value) {
  std::array<std::size_t, detail::kMaxGridDims> idx{};
  const GridPoint p = detail::grid_point(r.axes, flat, &idx);
  r.argmin_index.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(r.axes.size()));
  r.argmin.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(r.axes.size()));
  r.minimum = value;
}

template <class F>
SweepResult exhaustive_sweep(std::vector<std::string> names, std::vector<std::vector<double>> axes,
                             F&& f, bool keep_values, int workers) {
  SweepResult r;
  r.axis_names = std::move(names);
  r.axes = std::move(axes);
  const auto best =
      detail::grid_min_parallel(r.axes, f, keep_values ? &r.values : nullptr, workers);
  fill_argmin(r, best.index, best.value);
  return r;
}

// Coarse pass at up to kMaxGridStep, then every requested grid point within
// one coarse step of the coarse incumbent.
template <class F>
SweepResult coarse_to_fine_sweep(std::vector<std::string> names, const GridSpec& grid, F&& f,
                                 int workers) {
  std::vector<std::vector<double>> full;
  std::vector<std::vector<double>> coarse;
  std::vector<double> coarse_step;
  for (const auto& axis : grid.axes) {
    full.push_back(axis.points());
    const double span = axis.upper - axis.lower;
    const double cs = std::max(axis.step, std::min(kMaxGridStep, span / 4.0));
    coarse.push_back(GridAxis{axis.lower, axis.upper, cs}.points());
    coarse_step.push_back(cs);
  }
  const auto c = detail::grid_min_parallel(coarse, f, nullptr, workers);
  const GridPoint incumbent = detail::grid_point(coarse, c.index);

  std::vector<std::vector<double>> window(full.size());
  std::vector<std::size_t> offset(full.size());
  for (std::size_t d = 0; d < full.size(); ++d) {
    const double lo = incumbent[d] - coarse_step[d] * (1 + 1e-9);
    const double hi = incumbent[d] + coarse_step[d] * (1 + 1e-9);
    const auto first = std::lower_bound(full[d].begin(), full[d].end(), lo);
    const auto last = std::upper_bound(full[d].begin(), full[d].end(), hi);
    offset[d] = static_cast<std::size_t>(first - full[d].begin());
    window[d].assign(first, last);
  }
  const auto best = detail::grid_min_parallel(window, f, nullptr, workers);
  std::array<std::size_t, detail::kMaxGridDims> idx{};
  const GridPoint p = detail::grid_point(window, best.index, &idx);

  SweepResult r;
  r.axis_names = std::move(names);
  r.axes = std::move(full);
  for (std::size_t d = 0; d < r.axes.size(); ++d) {
    r.argmin_index.push_back(idx[d] + offset[d]);
    r.argmin.push_back(p[d]);
  }
  r.minimum = best.value;
  return r;
}

double midpoint(double lo, double hi) { return 0.5 * (lo + hi); }

}  // namespace

GridSpec default_kljn_grid(const KljnConfig& cfg, DetectorKind detector, double step,
                           bool reduce_ndii) {
  cfg.validate();
  check_step(step);
  GridSpec g;
  for (const auto& iv : feasible_intervals(cfg, detector, reduce_ndii)) {
    g.axes.push_back({iv.lo + step, iv.hi - step, step});
  }
  return g;
}

KljnOptimum optimize_kljn_thresholds(const KljnConfig& cfg, DetectorKind detector,
                                     const GridSpec& grid, bool reduce_ndii, SearchMethod method,
                                     int workers) {
  cfg.validate();
  const auto ivs = feasible_intervals(cfg, detector, reduce_ndii);
  if (grid.axes.size() != ivs.size()) {
    throw DomainError("grid has " + std::to_string(grid.axes.size()) + " axes; detector " +
                      std::string(to_string(detector)) + " needs " + std::to_string(ivs.size()));
  }
  for (std::size_t d = 0; d < ivs.size(); ++d) check_axis_inside(grid.axes[d], ivs[d]);

  std::vector<std::vector<double>> axes;
  for (const auto& a : grid.axes) axes.push_back(a.points());

  const double a = cfg.alpha;
  KljnOptimum out;
  out.vth = {midpoint(1.0, 2.0 * a / (1.0 + a)), midpoint(2.0 * a / (1.0 + a), a)};
  out.cth = {midpoint(1.0 / a, 2.0 / (1.0 + a)), midpoint(2.0 / (1.0 + a), 1.0)};

  const bool fine = method == SearchMethod::coarse_to_fine;
  auto run = [&](auto&& f, bool keep_values) {
    if (fine) return coarse_to_fine_sweep(names_of(ivs), grid, f, workers);
    return exhaustive_sweep(names_of(ivs), axes, f, keep_values, workers);
  };

  switch (detector) {
    case DetectorKind::classical_voltage: {
      out.sweep = run([&](const GridPoint& p) { return bep_voltage(cfg, {p[0], p[1]}); }, true);
      out.vth = {out.sweep.argmin[0], out.sweep.argmin[1]};
      break;
    }
    case DetectorKind::classical_current: {
      out.sweep = run([&](const GridPoint& p) { return bep_current(cfg, {p[0], p[1]}); }, true);
      out.cth = {out.sweep.argmin[0], out.sweep.argmin[1]};
      break;
    }
    case DetectorKind::new_detector_1: {
      if (fine) {
        out.sweep = run(
            [&](const GridPoint& p) { return bep_ndi(cfg, {p[0], p[1]}, {p[2], p[3]}); }, false);
      } else {
        // P_c splits into an own-bit-0 part in (β, ξ) and an own-bit-1 part
        // in (κ, η), so the 4-D optimum is the pair of 2-D optima.
        const auto zero = detail::grid_min_parallel(
            {axes[0], axes[3]},
            [&](const GridPoint& p) { return -ndi_correct_own_zero(cfg, p[0], p[1]); }, nullptr,
            workers);
        const auto one = detail::grid_min_parallel(
            {axes[1], axes[2]},
            [&](const GridPoint& p) { return -ndi_correct_own_one(cfg, p[0], p[1]); }, nullptr,
            workers);
        std::array<std::size_t, detail::kMaxGridDims> iz{};
        std::array<std::size_t, detail::kMaxGridDims> io{};
        detail::grid_point({axes[0], axes[3]}, zero.index, &iz);
        detail::grid_point({axes[1], axes[2]}, one.index, &io);
        SweepResult& r = out.sweep;
        r.axis_names = names_of(ivs);
        r.axes = axes;
        r.argmin_index = {iz[0], io[0], io[1], iz[1]};
        r.argmin = {axes[0][iz[0]], axes[1][io[0]], axes[2][io[1]], axes[3][iz[1]]};
        r.minimum = bep_ndi(cfg, {r.argmin[0], r.argmin[1]}, {r.argmin[2], r.argmin[3]});
      }
      out.vth = {out.sweep.argmin[0], out.sweep.argmin[1]};
      out.cth = {out.sweep.argmin[2], out.sweep.argmin[3]};
      break;
    }
    case DetectorKind::new_detector_2: {
      if (reduce_ndii) {
        out.sweep = run([&](const GridPoint& p) { return bep_ndii(cfg, p[0], p[0] / a); }, true);
        out.vth.kappa = out.sweep.argmin[0];
        out.cth.xi = out.sweep.argmin[0] / a;
      } else {
        out.sweep = run([&](const GridPoint& p) { return bep_ndii(cfg, p[0], p[1]); }, true);
        out.vth.kappa = out.sweep.argmin[0];
        out.cth.xi = out.sweep.argmin[1];
      }
      break;
    }
  }
  out.bep = out.sweep.minimum;
  return out;
}

SweepResult sweep_beta_kappa_surface(const KljnConfig& cfg, const GridAxis& beta_axis,
                                     const GridAxis& kappa_axis, int workers) {
  cfg.validate();
  const auto ivs = feasible_intervals(cfg, DetectorKind::classical_voltage, false);
  check_axis_inside(beta_axis, ivs[0]);
  check_axis_inside(kappa_axis, ivs[1]);
  return exhaustive_sweep(
      names_of(ivs), {beta_axis.points(), kappa_axis.points()},
      [&](const GridPoint& p) { return bep_voltage(cfg, {p[0], p[1]}); }, true, workers);
}

SweepResult sweep_chi(const ThermodConfig& cfg, const GridAxis& chi_axis) {
  cfg.validate();
  check_axis_inside(chi_axis, {1.0 + cfg.delta, 1.0 + cfg.alpha * cfg.delta, "chi"});
  return exhaustive_sweep(
      {"chi"}, {chi_axis.points()},
      [&](const GridPoint& p) { return thermod_bep(cfg, {p[0]}); }, true, 1);
}

SweepResult sweep_alpha(double delta, int n_samples, const GridAxis& alpha_axis) {
  alpha_axis.validate("alpha");
  if (!(alpha_axis.lower > 1.0)) {
    throw DomainError("alpha grid must start above 1 (got " + detail::num(alpha_axis.lower) + ")");
  }
  const ThermodConfig probe{alpha_axis.lower, delta, n_samples};
  probe.validate();
  return exhaustive_sweep(
      {"alpha"}, {alpha_axis.points()},
      [&](const GridPoint& p) { return thermod_bep_uniform({p[0], delta, n_samples}); }, true, 1);
}

}  // namespace thercom
