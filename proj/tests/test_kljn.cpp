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
#include <random>

#include "oracles.hpp"
#include "thercom/error.hpp"
#include "thercom/kljn.hpp"
#include "thercom/simulate.hpp"

namespace thercom {
namespace {

using testing::rel_err;

const KljnConfig kRef{10.0, 100};

TEST(KljnConfig, Validation) {
  EXPECT_NO_THROW((KljnConfig{10.0, 2}.validate()));
  EXPECT_THROW((KljnConfig{1.0, 100}.validate()), DomainError);
  EXPECT_THROW((KljnConfig{10.0, 1}.validate()), DomainError);
  EXPECT_TRUE((KljnConfig{10.0, 49}.gaussian_fit_questionable()));
  EXPECT_FALSE((KljnConfig{10.0, 50}.gaussian_fit_questionable()));
}

TEST(Thresholds, FeasibilityIsStrict) {
  EXPECT_NO_THROW((VoltageThresholds{4.0 / 3.0, 5.0}.validate(10.0)));
  EXPECT_THROW((VoltageThresholds{0.5, 5.0}.validate(10.0)), DomainError);
  EXPECT_THROW((VoltageThresholds{1.0, 5.0}.validate(10.0)), DomainError);
  EXPECT_THROW((VoltageThresholds{1.9, 5.0}.validate(10.0)), DomainError);
  EXPECT_THROW((VoltageThresholds{1.3, 10.0}.validate(10.0)), DomainError);
  EXPECT_NO_THROW((CurrentThresholds{0.13, 0.3168}.validate(10.0)));
  EXPECT_THROW((CurrentThresholds{0.1, 0.3168}.validate(10.0)), DomainError);
  EXPECT_THROW((CurrentThresholds{0.13, 0.15}.validate(10.0)), DomainError);
  EXPECT_THROW((CurrentThresholds{0.13, 1.0}.validate(10.0)), DomainError);
}

TEST(Decisions, Voltage) {
  const VoltageThresholds th{4.0 / 3.0, 5.0};
  EXPECT_EQ(decide_voltage(1.0, Bit::zero, th), Bit::zero);
  EXPECT_EQ(decide_voltage(1.5, Bit::zero, th), Bit::one);
  EXPECT_EQ(decide_voltage(4.0, Bit::one, th), Bit::zero);
  EXPECT_EQ(decide_voltage(6.0, Bit::one, th), Bit::one);
  // Ties land in the middle region.
  EXPECT_EQ(decide_voltage(th.beta, Bit::zero, th), Bit::one);
  EXPECT_EQ(decide_voltage(th.kappa, Bit::one, th), Bit::zero);
  // Own bit 0 ignores kappa entirely.
  EXPECT_EQ(decide_voltage(100.0, Bit::zero, th), Bit::one);
  EXPECT_THROW(decide_voltage(1.0, Bit::zero, VoltageThresholds{5.0, 2.0}), DomainError);
}

TEST(Decisions, Current) {
  const CurrentThresholds th{0.13, 0.3168};
  EXPECT_EQ(decide_current(0.9, Bit::zero, th), Bit::zero);
  EXPECT_EQ(decide_current(0.05, Bit::one, th), Bit::one);
  EXPECT_EQ(decide_current(0.18, Bit::zero, th), Bit::one);
  EXPECT_EQ(decide_current(0.18, Bit::one, th), Bit::zero);
  EXPECT_EQ(decide_current(th.xi, Bit::zero, th), Bit::one);
  EXPECT_EQ(decide_current(th.eta, Bit::one, th), Bit::zero);
  EXPECT_THROW(decide_current(0.2, Bit::one, CurrentThresholds{0.5, 0.2}), DomainError);
}

TEST(Decisions, Eve) {
  const VoltageThresholds th{4.0 / 3.0, 5.0};
  EXPECT_EQ(eve_classify(1.0, th), EveView::case00);
  EXPECT_EQ(eve_classify(1.8, th), EveView::secure);
  EXPECT_EQ(eve_classify(10.0, th), EveView::case11);
  EXPECT_EQ(eve_classify(th.beta, th), EveView::secure);
  EXPECT_EQ(eve_classify(th.kappa, th), EveView::secure);
}

TEST(DetectorNames, RoundTrip) {
  for (auto d : {DetectorKind::classical_voltage, DetectorKind::classical_current,
                 DetectorKind::new_detector_1, DetectorKind::new_detector_2}) {
    EXPECT_EQ(parse_detector(to_string(d)), d);
  }
  EXPECT_THROW(parse_detector("nd-iii"), ConfigError);
}

// P(estimate < t) under the Gaussian law of the sample variance.
double below(double t, double var, int n) {
  return 0.5 * std::erfc(-(t - var) / (var * std::sqrt(2.0 / n)) / std::sqrt(2.0));
}

// Enumerates Table I for one party directly from the decision rule and the
// Gaussian law of the estimate, without going through the closed form.
double party_bep_by_enumeration(const KljnConfig& cfg, const VoltageThresholds& th, bool bob) {
  const auto v = normalized_variances(cfg.alpha);
  const double var[3] = {v.v00, v.v01, v.v11};
  double total = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const int own = bob ? b : a;
      const int partner = bob ? a : b;
      const double s2 = var[a + b];
      const double t = own == 0 ? th.beta : th.kappa;
      const double p_decide_one = 1.0 - below(t, s2, cfg.n_samples);
      total += 0.25 * (partner == 1 ? 1.0 - p_decide_one : p_decide_one);
    }
  }
  return total;
}

TEST(BepVoltage, MatchesHighPrecisionOracle) {
  EXPECT_LE(rel_err(bep_voltage(kRef, {4.0 / 3.0, 5.0}), 0.0097719395329329807874), 1e-12);
  EXPECT_LE(rel_err(bep_voltage(kRef, {1.316, 3.1512}), 0.0095338318615345537144), 1e-12);
}

TEST(BepVoltage, AgreesWithTableEnumerationForBothParties) {
  for (int n : {50, 100, 400}) {
    for (auto th : {VoltageThresholds{4.0 / 3.0, 5.0}, VoltageThresholds{1.3, 4.0}}) {
      const KljnConfig cfg{10.0, n};
      const double closed = bep_voltage(cfg, th);
      EXPECT_LE(rel_err(party_bep_by_enumeration(cfg, th, false), closed), 1e-9);
      EXPECT_LE(rel_err(party_bep_by_enumeration(cfg, th, true), closed), 1e-9);
    }
  }
}

TEST(BepVoltage, PublishedOptimumBeatsSeed) {
  EXPECT_LE(bep_voltage(kRef, {1.3160, 3.1512}), bep_voltage(kRef, {4.0 / 3.0, 5.0}));
}

TEST(BepVoltage, StrictlyDecreasingInN) {
  double prev = 1.0;
  for (int n = 10; n <= 2000; n += 10) {
    const double p = bep_voltage({10.0, n}, {4.0 / 3.0, 5.0});
    EXPECT_LT(p, prev) << n;
    prev = p;
  }
  EXPECT_LT(bep_voltage({10.0, 100000}, {4.0 / 3.0, 5.0}), 1e-300);
}

TEST(BepVoltageApprox, DominantTermsWithinFivePercent) {
  const double full = bep_voltage(kRef, {4.0 / 3.0, 5.0});
  EXPECT_LE(rel_err(bep_voltage_approx(kRef, 4.0 / 3.0), full), 0.05);
}

TEST(BepVoltageApprox, EqualErrorForm) {
  for (int n : {50, 100, 200, 400}) {
    const KljnConfig cfg{10.0, n};
    const double eq12 = 0.5 * q_function(1.0 / (3.0 * std::sqrt(2.0 / n)));
    EXPECT_LE(rel_err(bep_voltage_approx(cfg, 4.0 / 3.0, VoltageApprox::large_alpha), eq12),
              1e-14);
    EXPECT_DOUBLE_EQ(bep_equal_error(n), eq12);
  }
  EXPECT_NEAR(bep_equal_error(100), 4.61e-3, 2e-5);
  EXPECT_THROW(bep_voltage_approx(kRef, 1.9), DomainError);
}

TEST(BepCurrent, MatchesHighPrecisionOracle) {
  EXPECT_LE(rel_err(bep_current(kRef, {0.13, 0.3168}), 0.0097217965855774118317), 1e-12);
}

TEST(BepCurrent, ApproxAtUniformEtaEqualsVoltageForm) {
  for (int n = 50; n <= 400; ++n) {
    const KljnConfig cfg{10.0, n};
    EXPECT_LE(rel_err(bep_current_approx(cfg, 4.0 / (3.0 * cfg.alpha)), bep_equal_error(n)),
              1e-12)
        << n;
  }
  for (double alpha : {5.0, 20.0, 50.0}) {
    const KljnConfig cfg{alpha, 100};
    EXPECT_LE(rel_err(bep_current_approx(cfg, 4.0 / (3.0 * alpha)), bep_equal_error(100)), 1e-12);
  }
}

TEST(BepCurrent, StrictlyDecreasingInN) {
  const CurrentThresholds th{0.13, 0.3168};
  for (int n = 25; n <= 800; n *= 2) {
    EXPECT_GT(bep_current({10.0, n}, th), bep_current({10.0, 2 * n}, th));
  }
}

TEST(BepCurrent, VoltageCurrentMirror) {
  // With eta = beta / alpha the two dominant-term forms coincide as alpha grows.
  for (double beta : {1.2, 4.0 / 3.0, 1.4}) {
    const KljnConfig cfg{1e6, 100};
    EXPECT_NEAR(bep_current_approx(cfg, beta / cfg.alpha),
                bep_voltage_approx(cfg, beta, VoltageApprox::large_alpha), 1e-12);
  }
}

TEST(NdI, MatchesHighPrecisionOracle) {
  const VoltageThresholds vth{1.3150, 3.1532};
  const CurrentThresholds cth{0.1300, 0.3168};
  EXPECT_LE(rel_err(prob_correct_ndi(kRef, vth, cth), 0.98074320085758724195), 1e-12);
  EXPECT_LE(rel_err(bep_ndi(kRef, vth, cth), 0.009628399571206379024), 1e-10);
}

TEST(NdI, LimitsAndBounds) {
  const VoltageThresholds vth{1.3150, 3.1532};
  const CurrentThresholds cth{0.1300, 0.3168};
  EXPECT_NEAR(prob_correct_ndi({10.0, 10'000'000}, vth, cth), 1.0, 1e-15);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = std::uniform_real_distribution<>(1.5, 60.0)(rng);
    const int n = std::uniform_int_distribution<>(2, 1000)(rng);
    const double v1 = 2 * alpha / (1 + alpha);
    const double c1 = 2 / (1 + alpha);
    auto u = [&](double lo, double hi) {
      return std::uniform_real_distribution<>(lo, hi)(rng) * (1 - 1e-12) + lo * 1e-12;
    };
    const VoltageThresholds v{u(1.0, v1), u(v1, alpha)};
    const CurrentThresholds c{u(1.0 / alpha, c1), u(c1, 1.0)};
    const double pc = prob_correct_ndi({alpha, n}, v, c);
    EXPECT_LE(pc, 1.0);
    EXPECT_GE(pc, 0.0);
  }
}

TEST(NdI, OwnBitSplitSumsToPc) {
  const VoltageThresholds vth{1.3, 3.0};
  const CurrentThresholds cth{0.12, 0.35};
  const double split =
      0.25 * (ndi_correct_own_zero(kRef, vth.beta, cth.xi) + ndi_correct_own_one(kRef, vth.kappa, cth.eta));
  EXPECT_DOUBLE_EQ(split, prob_correct_ndi(kRef, vth, cth));
}

TEST(NdII, MatchesHighPrecisionOracle) {
  EXPECT_LE(rel_err(bep_ndii(kRef, 3.1512, 0.3148), 3.7428847174434911997e-7), 1e-12);
}

TEST(NdII, TiedThresholdsEqualizeErrorEvents) {
  for (double alpha : {5.0, 10.0, 30.0}) {
    for (int n : {50, 100, 400}) {
      const double v1 = 2 * alpha / (1 + alpha);
      for (double kappa : {v1 + 0.3, 0.5 * (v1 + alpha), alpha - 0.5}) {
        const auto p = ndii_error_events({alpha, n}, kappa, kappa / alpha);
        EXPECT_TRUE(testing::close_rel(p.p00_to_01, p.p11_to_10, 1e-12));
        EXPECT_TRUE(testing::close_rel(p.p01_to_00, p.p10_to_11, 1e-12));
      }
    }
  }
}

TEST(NdII, IndependentOfFragileThresholdsAndVanishes) {
  EXPECT_LT(bep_ndii({10.0, 100000}, 3.1512, 0.3148), 1e-300);
  EXPECT_THROW(bep_ndii(kRef, 1.5, 0.3148), DomainError);
  EXPECT_THROW(bep_ndii(kRef, 3.0, 0.15), DomainError);
  double prev = 1.0;
  for (int n = 10; n <= 500; n += 10) {
    const double p = bep_ndii({10.0, n}, 3.1512, 0.3148);
    EXPECT_LT(p, prev);
    prev = p;
  }
}

TEST(NdI, StrictlyDecreasingInN) {
  const VoltageThresholds vth{1.3150, 3.1532};
  const CurrentThresholds cth{0.1300, 0.3168};
  double prev = 1.0;
  for (int n = 10; n <= 1000; n += 10) {
    const double p = bep_ndi({10.0, n}, vth, cth);
    EXPECT_LT(p, prev) << n;
    prev = p;
  }
}

TEST(SampleLimit, WienerKhinchinBound) {
  EXPECT_EQ(max_samples_per_bit(1e-3, 50e3), 100);
  EXPECT_EQ(max_samples_per_bit(1.0, 0.5), 1);
  EXPECT_EQ(max_samples_per_bit(0.5e-3, 50e3), 50);
  EXPECT_EQ(max_samples_per_bit(0.3, 10.0), 6);
  EXPECT_THROW(max_samples_per_bit(0.0, 1.0), DomainError);
  EXPECT_THROW(max_samples_per_bit(1.0, -1.0), DomainError);
}

// The own-bit-0 rule applied to case 01 errs exactly when the estimate falls
// below beta; check that probability by Monte Carlo.
TEST(Decisions, RuleReproducesErrorEventProbability) {
  const VoltageThresholds th{4.0 / 3.0, 5.0};
  const double v01 = normalized_variances(kRef.alpha).v01;
  const double expected = voltage_error_events(kRef, th).p01_to_00;
  Engine eng(2024);
  VarianceSampler sampler(kRef.n_samples, SampleMode::gaussian_fit, 1);
  const std::uint64_t trials = 1'000'000;
  std::uint64_t wrong = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    wrong += decide_voltage(sampler(v01, eng), Bit::zero, th) == Bit::zero;
  }
  EXPECT_TRUE(testing::within_nsigma(static_cast<double>(wrong) / trials, expected, trials, 4.0))
      << wrong << " / " << trials << " vs " << expected;
}

}  // namespace
}  // namespace thercom
