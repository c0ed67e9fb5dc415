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

// Shared numeric primitives: Gaussian tail, Johnson-Nyquist noise formulas,
// the normalized KLJN variance ratios and the Friis path gain.
//
// The Boltzmann constant is fixed at 1.38e-23 J/K rather than the CODATA
// value so that worked numbers match the published ones digit for digit.

namespace thercom {

inline constexpr double kBoltzmann = 1.38e-23;  // J/K

struct PhysicalParams {
  double temperature = 0.0;  // kelvin
  double resistance = 0.0;   // ohms
  double bandwidth = 0.0;    // hertz

  void validate() const;
};

struct LinkBudget {
  double wavelength = 0.0;  // meters
  double distance = 0.0;    // meters
  double gain_tx = 1.0;
  double gain_rx = 1.0;

  void validate() const;
};

/// Line-noise variances for the bit cases 00, 01/10 and 11, normalized so
/// that the 00 case has unit variance. Voltage variances grow with the
/// selected resistances; loop-current variances shrink.
struct NoiseVarianceSet {
  double v00 = 1.0;
  double v01 = 1.0;
  double v11 = 1.0;
  double c00 = 1.0;
  double c01 = 1.0;
  double c11 = 1.0;
};

/// P(Z > x) for a standard normal Z.
double q_function(double x);

/// Mean-square thermal noise voltage 4kTR·Δf, in volts².
double johnson_voltage_variance(const PhysicalParams& p);

/// Voltage noise PSD on a line terminated by two parallel resistors.
double parallel_voltage_psd(double temperature, double ra, double rb);

/// Noise current PSD of the loop formed by two series resistors.
double loop_current_psd(double temperature, double ra, double rb);

/// Variance ratios 1 : 2α/(1+α) : α (voltage) and 1 : 2/(1+α) : 1/α
/// (current) for resistance ratio alpha = R_H / R_L > 1.
NoiseVarianceSet normalized_variances(double alpha);

/// G_t·G_r·(λ / 4πd)².
double friis_path_gain(const LinkBudget& lb);

}  // namespace thercom
