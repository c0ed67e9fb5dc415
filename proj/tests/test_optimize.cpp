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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "thercom/error.hpp"
#include "thercom/optimize.hpp"
#include "thercom/reference.hpp"

namespace thercom {
namespace {

using testing::rel_err;

const KljnConfig kRef{10.0, 100};

TEST(GridAxis, PointsAndValidation) {
  const GridAxis a{1.0, 1.1, 0.01};
  EXPECT_EQ(a.size(), 11u);
  const auto p = a.points();
  EXPECT_DOUBLE_EQ(p.front(), 1.0);
  EXPECT_NEAR(p.back(), 1.1, 1e-12);
  EXPECT_EQ((GridAxis{0.0, 1.0, 0.3}.size()), 4u);
  EXPECT_THROW((GridAxis{1.0, 1.0, 0.1}.validate("x")), DomainError);
  EXPECT_THROW((GridAxis{1.0, 2.0, 0.0}.validate("x")), DomainError);
}

TEST(DefaultGrid, ShapesPerDetector) {
  EXPECT_EQ(default_kljn_grid(kRef, DetectorKind::classical_voltage, 0.01).axes.size(), 2u);
  EXPECT_EQ(default_kljn_grid(kRef, DetectorKind::classical_current, 0.01).axes.size(), 2u);
  EXPECT_EQ(default_kljn_grid(kRef, DetectorKind::new_detector_1, 0.01).axes.size(), 4u);
  EXPECT_EQ(default_kljn_grid(kRef, DetectorKind::new_detector_2, 0.01).axes.size(), 2u);
  EXPECT_EQ(default_kljn_grid(kRef, DetectorKind::new_detector_2, 0.01, true).axes.size(), 1u);
  EXPECT_THROW(default_kljn_grid(kRef, DetectorKind::classical_voltage, 0.0005), DomainError);
  EXPECT_THROW(default_kljn_grid(kRef, DetectorKind::classical_voltage, 0.1), DomainError);
}

TEST(Optimize, RejectsInfeasibleGrid) {
  GridSpec g{{{0.9, 1.5, 0.01}, {2.0, 5.0, 0.01}}};
  EXPECT_THROW(optimize_kljn_thresholds(kRef, DetectorKind::classical_voltage, g), DomainError);
  g = {{{1.1, 1.5, 0.01}, {2.0, 10.0, 0.01}}};
  EXPECT_THROW(optimize_kljn_thresholds(kRef, DetectorKind::classical_voltage, g), DomainError);
  g = {{{1.1, 1.5, 0.01}}};
  EXPECT_THROW(optimize_kljn_thresholds(kRef, DetectorKind::classical_voltage, g), DomainError);
}

TEST(Optimize, VoltageReproducesPublishedThresholds) {
  const auto grid = default_kljn_grid(kRef, DetectorKind::classical_voltage, 0.001);
  const auto opt = optimize_kljn_thresholds(kRef, DetectorKind::classical_voltage, grid);
  EXPECT_NEAR(opt.vth.beta, 1.3160, 0.01);
  EXPECT_LE(rel_err(opt.bep, bep_voltage(kRef, {1.3160, 3.1512})), 1e-3);
  EXPECT_LE(opt.bep, bep_voltage(kRef, {4.0 / 3.0, 5.0}));
  EXPECT_DOUBLE_EQ(opt.bep, bep_voltage(kRef, opt.vth));
  EXPECT_DOUBLE_EQ(opt.sweep.value_at(opt.sweep.argmin_index), opt.bep);
}

TEST(Optimize, ArgminAttainsMinimumOfMaterializedValues) {
  const auto grid = default_kljn_grid(kRef, DetectorKind::classical_current, 0.005);
  const auto opt = optimize_kljn_thresholds(kRef, DetectorKind::classical_current, grid);
  double lo = 1.0;
  for (double v : opt.sweep.values) lo = std::min(lo, v);
  EXPECT_EQ(lo, opt.sweep.minimum);
  EXPECT_EQ(opt.sweep.values.size(), opt.sweep.axes[0].size() * opt.sweep.axes[1].size());
}

TEST(Optimize, SeparableNdiMatchesBruteForce) {
  for (int n : {50, 100}) {
    const KljnConfig cfg{10.0, n};
    const auto grid = default_kljn_grid(cfg, DetectorKind::new_detector_1, 0.02);
    const auto opt = optimize_kljn_thresholds(cfg, DetectorKind::new_detector_1, grid);
    const auto brute = reference::brute_force_ndi(cfg, grid);
    EXPECT_EQ(opt.sweep.argmin, brute.argmin) << n;
    EXPECT_LE(rel_err(opt.bep, brute.minimum), 1e-13);
  }
}

TEST(Optimize, NdiBeatsPublishedThresholds) {
  const auto grid = default_kljn_grid(kRef, DetectorKind::new_detector_1, 0.001);
  const auto opt = optimize_kljn_thresholds(kRef, DetectorKind::new_detector_1, grid);
  EXPECT_LE(opt.bep, bep_ndi(kRef, {1.3150, 3.1532}, {0.1300, 0.3168}));
  EXPECT_TRUE(opt.sweep.values.empty());
}

TEST(Optimize, CoarseToFineAgreesWithExhaustive) {
  for (auto det : {DetectorKind::classical_voltage, DetectorKind::classical_current,
                   DetectorKind::new_detector_2}) {
    const auto grid = default_kljn_grid(kRef, det, 0.001);
    const auto ex = optimize_kljn_thresholds(kRef, det, grid, false, SearchMethod::exhaustive);
    const auto cf = optimize_kljn_thresholds(kRef, det, grid, false, SearchMethod::coarse_to_fine);
    EXPECT_LE(rel_err(cf.bep, ex.bep), 1e-3) << to_string(det);
  }
  const auto g4 = default_kljn_grid(kRef, DetectorKind::new_detector_1, 0.01);
  const auto ex = optimize_kljn_thresholds(kRef, DetectorKind::new_detector_1, g4, false,
                                           SearchMethod::exhaustive);
  const auto cf = optimize_kljn_thresholds(kRef, DetectorKind::new_detector_1, g4, false,
                                           SearchMethod::coarse_to_fine);
  EXPECT_LE(rel_err(cf.bep, ex.bep), 1e-3);
}

TEST(Optimize, RefiningTheGridNeverHurts) {
  double prev = 1.0;
  for (double step : {0.05, 0.01, 0.005, 0.001}) {
    // Nested grids anchored at the same lower corner.
    GridSpec g{{{1.01, 1.81, step}, {1.82, 9.82, step}}};
    const auto opt = optimize_kljn_thresholds(kRef, DetectorKind::classical_voltage, g);
    EXPECT_LE(opt.bep, prev * (1 + 1e-15)) << step;
    prev = opt.bep;
  }
}

TEST(Optimize, NdiiReducedSearch) {
  const auto grid = default_kljn_grid(kRef, DetectorKind::new_detector_2, 0.001, true);
  const auto opt = optimize_kljn_thresholds(kRef, DetectorKind::new_detector_2, grid, true);
  EXPECT_DOUBLE_EQ(opt.cth.xi, opt.vth.kappa / kRef.alpha);
  EXPECT_DOUBLE_EQ(opt.bep, bep_ndii(kRef, opt.vth.kappa, opt.cth.xi));
  const auto full = optimize_kljn_thresholds(
      kRef, DetectorKind::new_detector_2, default_kljn_grid(kRef, DetectorKind::new_detector_2, 0.001));
  EXPECT_LE(full.bep, opt.bep * (1 + 1e-3));
}

TEST(Optimize, TiesGoToSmallestParameters) {
  // A flat objective: every point ties, so the lower corner must win.
  const auto r = reference::brute_force_min({{1.0, 2.0}, {3.0, 4.0}},
                                            [](const std::vector<double>&) { return 0.0; });
  EXPECT_EQ(r.argmin, (std::vector<double>{1.0, 3.0}));
  // At huge N the objective underflows to zero over a whole region; the
  // search must report the first zero along the axis.
  const KljnConfig big{10.0, 1'000'000};
  const auto grid = default_kljn_grid(big, DetectorKind::new_detector_2, 0.01, true);
  const auto opt = optimize_kljn_thresholds(big, DetectorKind::new_detector_2, grid, true);
  EXPECT_EQ(opt.bep, 0.0);
  const auto& v = opt.sweep.values;
  const auto first_zero = std::find(v.begin(), v.end(), 0.0) - v.begin();
  EXPECT_EQ(opt.sweep.argmin_index[0], static_cast<std::size_t>(first_zero));
}

TEST(Surface, BetaArgminAroundOnePointThree) {
  double prev = 1.0;
  for (int n : {50, 100, 200, 400}) {
    const KljnConfig cfg{10.0, n};
    const auto s = sweep_beta_kappa_surface(cfg, {1.001, 1.817, 0.001}, {1.83, 9.99, 0.01});
    EXPECT_GE(s.argmin[0], 1.25) << n;
    EXPECT_LE(s.argmin[0], 1.35) << n;
    EXPECT_LT(s.minimum, prev);
    prev = s.minimum;
  }
}

TEST(Surface, ConsistentWithEvaluator) {
  const auto s = sweep_beta_kappa_surface(kRef, {1.3, 1.4, 0.05}, {4.0, 6.0, 0.05});
  EXPECT_EQ(s.values.size(), 3u * 41u);
  EXPECT_DOUBLE_EQ(s.value_at({0, 20}), bep_voltage(kRef, {1.3, 5.0}));
  EXPECT_THROW(sweep_beta_kappa_surface(kRef, {1.3, 1.9, 0.01}, {4.0, 6.0, 0.01}), DomainError);
}

TEST(SweepChi, CurveProperties) {
  const ThermodConfig cfg{10.0, 0.1, 100};
  const auto s = sweep_chi(cfg, {1.101, 1.999, 0.001});
  EXPECT_EQ(s.values.size(), 899u);
  for (double v : s.values) {
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 0.0);
  }
  const double at_uniform = thermod_bep(cfg, {1.4194});
  EXPECT_LE(at_uniform, 1.10 * s.minimum);
  const auto s50 = sweep_chi({10.0, 0.1, 50}, {1.101, 1.999, 0.001});
  const auto s400 = sweep_chi({10.0, 0.1, 400}, {1.101, 1.999, 0.001});
  EXPECT_NE(s50.argmin[0], s400.argmin[0]);
  EXPECT_THROW(sweep_chi(cfg, {1.05, 1.5, 0.001}), DomainError);
}

TEST(SweepAlpha, LimitsAndMonotonicity) {
  const auto s = sweep_alpha(0.1, 100, {1.0 + 1e-6, 40.0, 0.01});
  EXPECT_NEAR(s.values.front(), 0.5, 1e-4);
  for (std::size_t i = 1; i < s.values.size(); ++i) EXPECT_LT(s.values[i], s.values[i - 1]);
  EXPECT_THROW(sweep_alpha(0.1, 100, {1.0, 40.0, 0.1}), DomainError);
  EXPECT_THROW(sweep_alpha(0.1, 100, {0.5, 40.0, 0.1}), DomainError);
}

}  // namespace
}  // namespace thercom
