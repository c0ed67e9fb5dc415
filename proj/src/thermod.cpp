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

#include "thercom/thermod.hpp"

#include <cmath>
#include <string>

#include "check.hpp"

namespace thercom {

void ThermodConfig::validate() const {
  detail::require_finite(alpha, "alpha");
  if (!(alpha > 1.0)) {
    throw DomainError("alpha must be > 1 (got " + detail::num(alpha) + ")");
  }
  detail::require_positive(delta, "delta");
  if (n_samples < 2) {
    throw DomainError("n_samples must be >= 2 (got " + std::to_string(n_samples) + ")");
  }
}

void ThermodThreshold::validate(const ThermodConfig& cfg) const {
  cfg.validate();
  detail::require_open_interval(chi, 1.0 + cfg.delta, 1.0 + cfg.alpha * cfg.delta, "chi");
}

ThermodVariances thermod_variances(const ThermodConfig& cfg) {
  cfg.validate();
  return {1.0 + cfg.delta, 1.0 + cfg.alpha * cfg.delta};
}

Bit decide_thermod(double sigma_hat_s, const ThermodThreshold& th) {
  return sigma_hat_s > th.chi ? Bit::one : Bit::zero;
}

ThermodThreshold uniform_chi(const ThermodConfig& cfg) {
  const auto [t0, t1] = thermod_variances(cfg);
  return {2.0 * t0 * t1 / (t0 + t1)};
}

ThermodErrorProbabilities thermod_error_probabilities(const ThermodConfig& cfg,
                                                      const ThermodThreshold& th) {
  th.validate(cfg);
  const auto [t0, t1] = thermod_variances(cfg);
  const double root_n = std::sqrt(static_cast<double>(cfg.n_samples));
  return {q_function(root_n * (th.chi - t0) / t0), q_function(root_n * (t1 - th.chi) / t1)};
}

double thermod_bep(const ThermodConfig& cfg, const ThermodThreshold& th) {
  return thermod_error_probabilities(cfg, th).average();
}

double thermod_bep_uniform(const ThermodConfig& cfg) {
  cfg.validate();
  const double a = cfg.alpha;
  const double d = cfg.delta;
  const double arg =
      std::sqrt(static_cast<double>(cfg.n_samples)) * d * (a - 1.0) / (2.0 + d * (1.0 + a));
  return q_function(arg);
}

double thermod_bep_largealpha(const ThermodConfig& cfg) {
  cfg.validate();
  const double ad = cfg.alpha * cfg.delta;
  return q_function(std::sqrt(static_cast<double>(cfg.n_samples)) * ad / (2.0 + ad));
}

double receiver_noise_power(double temperature, double bandwidth) {
  detail::require_positive(temperature, "temperature");
  detail::require_positive(bandwidth, "bandwidth");
  return kBoltzmann * temperature * bandwidth;
}

double useful_noise_power(double temperature, double resistance, double bandwidth,
                          double path_gain) {
  detail::require_positive(path_gain, "path_gain");
  return johnson_voltage_variance({temperature, resistance, bandwidth}) * path_gain;
}

double delta_from_powers(double useful_power, double receiver_power) {
  detail::require_positive(useful_power, "useful_power");
  detail::require_positive(receiver_power, "receiver_power");
  return useful_power / receiver_power;
}

}  // namespace thercom
