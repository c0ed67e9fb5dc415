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

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "thercom/core_math.hpp"
#include "thercom/error.hpp"

namespace thercom {
namespace {

using testing::q_by_quadrature;
using testing::rel_err;

// Reference values from a 40-digit erfc evaluation.
struct QCase {
  double x;
  double q;
};
constexpr QCase kQTable[] = {
    {0.0, 0.5},
    {0.5, 0.30853753872598689636},
    {1.0, 0.15865525393145705141},
    {2.3570, 0.009211623429573723556},
    {3.0, 0.0013498980316300945267},
    {5.0, 2.8665157187919391167e-7},
    {8.0, 6.2209605742717841235e-16},
    {-1.0, 0.84134474606854294859},
    {-3.0, 0.99865010196836990547},
    {-8.0, 0.9999999999999993779},
    {12.0, 1.7764821120776789977e-33},
};

TEST(QFunction, MatchesHighPrecisionTable) {
  for (const auto& c : kQTable) {
    EXPECT_LE(rel_err(q_function(c.x), c.q), 1e-12) << "x = " << c.x;
  }
}

TEST(QFunction, MatchesQuadratureOracle) {
  for (double x = -8.0; x <= 8.0; x += 0.37) {
    const double want = q_by_quadrature(x);
    EXPECT_LE(rel_err(q_function(x), want), 1e-10) << "x = " << x;
  }
}

TEST(QFunction, SpecExamples) {
  EXPECT_DOUBLE_EQ(q_function(0.0), 0.5);
  EXPECT_NEAR(q_function(2.3570), 9.21e-3, 1e-5);
  EXPECT_NEAR(q_function(-30.0), 1.0, 1e-12);
}

TEST(QFunction, SymmetryAndMonotonicity) {
  double prev = q_function(-10.0);
  for (double x = -10.0; x <= 10.0; x += 0.01) {
    EXPECT_NEAR(q_function(x) + q_function(-x), 1.0, 1e-12);
    const double q = q_function(x);
    if (x > -5.0) {
      EXPECT_LT(q, prev) << x;
    } else {
      EXPECT_LE(q, prev) << x;
    }
    prev = q;
  }
}

TEST(QFunction, RejectsNonFinite) {
  EXPECT_THROW(q_function(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(q_function(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(JohnsonNoise, VoltageVariance) {
  EXPECT_NEAR(johnson_voltage_variance({300.0, 1000.0, 1.0}), 1.656e-17, 1e-30);
  const double r1 = johnson_voltage_variance({300.0, 1000.0, 1.0});
  EXPECT_DOUBLE_EQ(johnson_voltage_variance({300.0, 2000.0, 1.0}), 2.0 * r1);
  EXPECT_THROW(johnson_voltage_variance({0.0, 1000.0, 1.0}), DomainError);
  EXPECT_THROW(johnson_voltage_variance({300.0, -1.0, 1.0}), DomainError);
  EXPECT_THROW(johnson_voltage_variance({300.0, 1.0, 0.0}), DomainError);
}

TEST(JohnsonNoise, LinearInEachArgument) {
  const PhysicalParams base{290.0, 470.0, 1e3};
  const double v = johnson_voltage_variance(base);
  EXPECT_NEAR(johnson_voltage_variance({3 * 290.0, 470.0, 1e3}) / v, 3.0, 1e-14);
  EXPECT_NEAR(johnson_voltage_variance({290.0, 7 * 470.0, 1e3}) / v, 7.0, 1e-14);
  EXPECT_NEAR(johnson_voltage_variance({290.0, 470.0, 0.5e3}) / v, 0.5, 1e-14);
}

TEST(JohnsonNoise, ParallelVoltagePsd) {
  const double r = 1000.0;
  EXPECT_DOUBLE_EQ(parallel_voltage_psd(300.0, r, r), 4 * kBoltzmann * 300.0 * r / 2);
  EXPECT_LE(rel_err(parallel_voltage_psd(300.0, 1e3, 1e4), 1.5054545454545454545e-17), 1e-14);
  EXPECT_DOUBLE_EQ(parallel_voltage_psd(300.0, 1e3, 1e4), parallel_voltage_psd(300.0, 1e4, 1e3));
  EXPECT_THROW(parallel_voltage_psd(300.0, 0.0, 1.0), DomainError);
}

TEST(JohnsonNoise, LoopCurrentPsd) {
  const double r = 1000.0;
  EXPECT_DOUBLE_EQ(loop_current_psd(300.0, r, r), 4 * kBoltzmann * 300.0 / (2 * r));
  EXPECT_LE(rel_err(loop_current_psd(300.0, 1e3, 1e4), 1.5054545454545454545e-24), 1e-14);
  EXPECT_DOUBLE_EQ(loop_current_psd(300.0, 2e3, 2e4), 0.5 * loop_current_psd(300.0, 1e3, 1e4));
  EXPECT_THROW(loop_current_psd(-1.0, 1.0, 1.0), DomainError);
}

TEST(NormalizedVariances, AlphaTen) {
  const auto s = normalized_variances(10.0);
  EXPECT_DOUBLE_EQ(s.v00, 1.0);
  EXPECT_NEAR(s.v01, 1.8182, 1e-4);
  EXPECT_DOUBLE_EQ(s.v11, 10.0);
  EXPECT_DOUBLE_EQ(s.c00, 1.0);
  EXPECT_NEAR(s.c01, 0.18182, 1e-5);
  EXPECT_DOUBLE_EQ(s.c11, 0.1);
}

TEST(NormalizedVariances, MatchPhysicalRatios) {
  // The normalized chain must agree with the physical PSDs for any R_L.
  for (double alpha : {1.5, 5.0, 10.0, 50.0}) {
    const double rl = 330.0;
    const double rh = alpha * rl;
    const auto s = normalized_variances(alpha);
    const double v00 = parallel_voltage_psd(300.0, rl, rl);
    const double c00 = loop_current_psd(300.0, rl, rl);
    EXPECT_NEAR(parallel_voltage_psd(300.0, rl, rh) / v00, s.v01, 1e-12);
    EXPECT_NEAR(parallel_voltage_psd(300.0, rh, rh) / v00, s.v11, 1e-12);
    EXPECT_NEAR(loop_current_psd(300.0, rl, rh) / c00, s.c01, 1e-12);
    EXPECT_NEAR(loop_current_psd(300.0, rh, rh) / c00, s.c11, 1e-12);
    EXPECT_NEAR((s.v01 / s.v00) * (s.c01 / s.c00),
                (2 * alpha / (1 + alpha)) * (2 / (1 + alpha)), 1e-14);
    EXPECT_LT(s.v00, s.v01);
    EXPECT_LT(s.v01, s.v11);
    EXPECT_LT(s.c11, s.c01);
    EXPECT_LT(s.c01, s.c00);
  }
}

TEST(NormalizedVariances, DegenerateAndInvalid) {
  const auto s = normalized_variances(1.0 + 1e-9);
  EXPECT_NEAR(s.v01, 1.0, 1e-8);
  EXPECT_NEAR(s.v11, 1.0, 1e-8);
  EXPECT_THROW(normalized_variances(1.0), DomainError);
  EXPECT_THROW(normalized_variances(0.5), DomainError);
}

TEST(Friis, PathGain) {
  const double lambda = 0.3;
  EXPECT_NEAR(friis_path_gain({lambda, lambda / (4 * std::numbers::pi), 1.0, 1.0}), 1.0, 1e-14);
  const double g1 = friis_path_gain({lambda, 10.0, 2.0, 3.0});
  EXPECT_NEAR(friis_path_gain({lambda, 20.0, 2.0, 3.0}) / g1, 0.25, 1e-14);
  EXPECT_LE(rel_err(friis_path_gain({0.125, 1.0, 100.0, 100.0}), 0.98946468400720479926), 1e-14);
  EXPECT_THROW(friis_path_gain({0.125, 0.0, 1.0, 1.0}), DomainError);
  EXPECT_THROW(friis_path_gain({0.125, 1.0, -1.0, 1.0}), DomainError);
}

}  // namespace
}  // namespace thercom
