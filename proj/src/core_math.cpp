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

#include "thercom/core_math.hpp"

#include <cmath>
#include <numbers>

#include "check.hpp"

namespace thercom {

void PhysicalParams::validate() const {
  detail::require_positive(temperature, "temperature");
  detail::require_positive(resistance, "resistance");
  detail::require_positive(bandwidth, "bandwidth");
}

void LinkBudget::validate() const {
  detail::require_positive(wavelength, "wavelength");
  detail::require_positive(distance, "distance");
  detail::require_positive(gain_tx, "gain_tx");
  detail::require_positive(gain_rx, "gain_rx");
}

double q_function(double x) {
  detail::require_finite(x, "q_function argument");
  // erfc keeps full relative precision in the right tail, where 1 - Φ(x)
  // would cancel.
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double johnson_voltage_variance(const PhysicalParams& p) {
  p.validate();
  return 4.0 * kBoltzmann * p.temperature * p.resistance * p.bandwidth;
}

double parallel_voltage_psd(double temperature, double ra, double rb) {
  detail::require_positive(temperature, "temperature");
  detail::require_positive(ra, "ra");
  detail::require_positive(rb, "rb");
  return 4.0 * kBoltzmann * temperature * (ra * rb) / (ra + rb);
}

double loop_current_psd(double temperature, double ra, double rb) {
  detail::require_positive(temperature, "temperature");
  detail::require_positive(ra, "ra");
  detail::require_positive(rb, "rb");
  return 4.0 * kBoltzmann * temperature / (ra + rb);
}

NoiseVarianceSet normalized_variances(double alpha) {
  detail::require_finite(alpha, "alpha");
  if (!(alpha > 1.0)) {
    throw DomainError("alpha must be > 1 (got " + detail::num(alpha) + ")");
  }
  NoiseVarianceSet s;
  s.v00 = 1.0;
  s.v01 = 2.0 * alpha / (1.0 + alpha);
  s.v11 = alpha;
  s.c00 = 1.0;
  s.c01 = 2.0 / (1.0 + alpha);
  s.c11 = 1.0 / alpha;
  return s;
}

double friis_path_gain(const LinkBudget& lb) {
  lb.validate();
  const double ratio = lb.wavelength / (4.0 * std::numbers::pi * lb.distance);
  return lb.gain_tx * lb.gain_rx * ratio * ratio;
}

}  // namespace thercom
