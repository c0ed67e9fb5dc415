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

#include "thercom/kljn.hpp"

namespace thercom {

/// Wireless thermal-noise modulation link. Everything is normalized to the
/// receiver noise variance σ_w²; delta = σ₀²/σ_w² plays the role of an SNR
/// for the low-resistance (bit 0) state, and bit 1 carries α·σ₀².
struct ThermodConfig {
  double alpha = 10.0;
  double delta = 0.1;
  int n_samples = 100;

  void validate() const;
};

/// Decision threshold γ/σ_w². Valid iff 1 + δ < χ < 1 + αδ.
struct ThermodThreshold {
  double chi = 0.0;

  void validate(const ThermodConfig& cfg) const;
};

/// Total received variance per bit, normalized to σ_w².
struct ThermodVariances {
  double tilde0 = 1.0;  // 1 + δ
  double tilde1 = 1.0;  // 1 + αδ
};

ThermodVariances thermod_variances(const ThermodConfig& cfg);

/// 1 iff the estimate is strictly above χ.
Bit decide_thermod(double sigma_hat_s, const ThermodThreshold& th);

/// The threshold that equalizes the two conditional error probabilities:
/// χ = 2(1+δ)(1+αδ) / (2 + δ(1+α)).
ThermodThreshold uniform_chi(const ThermodConfig& cfg);

struct ThermodErrorProbabilities {
  double p0_to_1 = 0.0;
  double p1_to_0 = 0.0;

  double average() const { return 0.5 * (p0_to_1 + p1_to_0); }
};

ThermodErrorProbabilities thermod_error_probabilities(const ThermodConfig& cfg,
                                                      const ThermodThreshold& th);

double thermod_bep(const ThermodConfig& cfg, const ThermodThreshold& th);

/// Q(√N·δ(α−1) / (2 + δ(1+α))), the BEP at uniform_chi.
double thermod_bep_uniform(const ThermodConfig& cfg);

/// Q(√N·αδ / (2 + αδ)), the α ≫ 1 form of thermod_bep_uniform.
double thermod_bep_largealpha(const ThermodConfig& cfg);

/// Link-budget helpers. The receiver's proportionality constants are not
/// pinned down, so these only serve to turn a physical scenario into a δ.
double receiver_noise_power(double temperature, double bandwidth);  // kTB
double useful_noise_power(double temperature, double resistance, double bandwidth,
                          double path_gain);  // 4kTR·B·P_G
double delta_from_powers(double useful_power, double receiver_power);

}  // namespace thercom
