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

#include <cstdint>
#include <string_view>

#include "thercom/core_math.hpp"

namespace thercom {

/// KLJN link parameters: resistance ratio α = R_H / R_L and the number of
/// independent noise samples N taken per bit interval.
struct KljnConfig {
  double alpha = 10.0;
  int n_samples = 100;

  /// Throws DomainError unless alpha > 1 and n_samples >= 2.
  void validate() const;

  /// Below ~50 samples the Gaussian fit of the chi-square sample variance is
  /// poor and the closed-form BEPs become optimistic.
  bool gaussian_fit_questionable() const { return n_samples < 50; }
};

/// Voltage-variance thresholds normalized to σ²₀₀: γ₁ = β·σ², γ₂ = κ·σ².
/// Valid iff 1 < β < 2α/(1+α) < κ < α.
struct VoltageThresholds {
  double beta = 4.0 / 3.0;
  double kappa = 5.0;

  void validate(double alpha) const;
};

/// Current-variance thresholds normalized to s²₀₀: γ₃ = η·s², γ₄ = ξ·s².
/// Valid iff 1/α < η < 2/(1+α) < ξ < 1.
struct CurrentThresholds {
  double eta = 0.13;
  double xi = 0.3168;

  void validate(double alpha) const;
};

enum class Bit : std::uint8_t { zero = 0, one = 1 };

constexpr Bit to_bit(unsigned v) { return (v & 1u) ? Bit::one : Bit::zero; }
constexpr int to_int(Bit b) { return static_cast<int>(b); }

struct BitPair {
  Bit alice = Bit::zero;
  Bit bob = Bit::zero;

  bool secure() const { return alice != bob; }
};

enum class DetectorKind { classical_voltage, classical_current, new_detector_1, new_detector_2 };

std::string_view to_string(DetectorKind d);
/// Accepts "classical-voltage", "classical-current", "nd-i", "nd-ii".
DetectorKind parse_detector(std::string_view s);

/// What a passive observer of the line voltage can conclude: both parties
/// picked R_L, both picked R_H, or the bits differ in an unknown order.
enum class EveView { case00, secure, case11 };

/// Partner-bit decision from a normalized voltage-variance estimate. With
/// own bit 0 only β matters; with own bit 1 only κ. Exact threshold hits go
/// to the middle (01/10) region.
Bit decide_voltage(double sigma_hat, Bit own, const VoltageThresholds& th);

/// Partner-bit decision from a normalized current-variance estimate. The
/// ordering is reversed: case 00 has the largest current fluctuations.
Bit decide_current(double s_hat, Bit own, const CurrentThresholds& th);

/// Ternary classification of the line voltage variance; [β, κ] is Secure.
EveView eve_classify(double sigma_hat, const VoltageThresholds& th);

/// The four error-event probabilities of one party, each conditioned on its
/// own bit pair. Alice's and Bob's are identical by symmetry.
struct ErrorEventProbabilities {
  double p00_to_01 = 0.0;
  double p11_to_10 = 0.0;
  double p01_to_00 = 0.0;
  double p10_to_11 = 0.0;

  /// Uniform-bit average, i.e. the BEP.
  double average() const { return 0.25 * (p00_to_01 + p11_to_10 + p01_to_00 + p10_to_11); }
};

ErrorEventProbabilities voltage_error_events(const KljnConfig& cfg, const VoltageThresholds& th);
ErrorEventProbabilities current_error_events(const KljnConfig& cfg, const CurrentThresholds& th);

/// Error events of the adaptive detector: current measurement when the
/// party's own bit is 0, voltage when it is 1.
ErrorEventProbabilities ndii_error_events(const KljnConfig& cfg, double kappa, double xi);

/// BEP of the classical voltage detector.
double bep_voltage(const KljnConfig& cfg, const VoltageThresholds& th);

enum class VoltageApprox {
  dominant_00,  ///< keep only the two terms involving the 00 case
  large_alpha,  ///< additionally replace 2α/(1+α) by 2
};

/// Approximate voltage BEP that ignores κ. Requires 1 < β < 2α/(1+α).
double bep_voltage_approx(const KljnConfig& cfg, double beta,
                          VoltageApprox form = VoltageApprox::dominant_00);

/// ½·Q(1 / (3·√(2/N))): the large-α BEP at the equal-error lower threshold
/// β = 4/3 (voltage) or η = 4/(3α) (current).
double bep_equal_error(int n_samples);

double bep_current(const KljnConfig& cfg, const CurrentThresholds& th);

/// Approximate current BEP keeping only the two terms involving case 11 and
/// replacing 2/(1+α) by 2/α. Requires 1/α < η < 2/α.
double bep_current_approx(const KljnConfig& cfg, double eta);

/// Summed probability that the voltage and current decisions of a party with
/// own bit 0 agree and are right, over cases 00 and 01. Depends on (β, ξ).
double ndi_correct_own_zero(const KljnConfig& cfg, double beta, double xi);

/// Same for own bit 1, cases 11 and 10. Depends on (κ, η).
double ndi_correct_own_one(const KljnConfig& cfg, double kappa, double eta);

/// Probability that both measurements agree on the correct partner bit.
double prob_correct_ndi(const KljnConfig& cfg, const VoltageThresholds& vth,
                        const CurrentThresholds& cth);

/// ½·(1 − P_c): bit errors per symbol error of the flagging detector.
double bep_ndi(const KljnConfig& cfg, const VoltageThresholds& vth, const CurrentThresholds& cth);

/// BEP of the adaptive detector; independent of β and η.
double bep_ndii(const KljnConfig& cfg, double kappa, double xi);

/// floor(2·T_b·Δf): independent samples available per bit.
std::int64_t max_samples_per_bit(double bit_duration, double bandwidth);

}  // namespace thercom
