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

#include "thercom/kljn.hpp"

#include <cmath>
#include <string>

#include "check.hpp"

namespace thercom {

namespace {

// Standard deviation of a normalized unit-variance sample-variance estimate.
double unit_spread(int n) { return std::sqrt(2.0 / static_cast<double>(n)); }

double v01_of(double alpha) { return 2.0 * alpha / (1.0 + alpha); }
double c01_of(double alpha) { return 2.0 / (1.0 + alpha); }

void check_voltage_low(double alpha, double beta) {
  detail::require_open_interval(beta, 1.0, v01_of(alpha), "beta");
}
void check_voltage_high(double alpha, double kappa) {
  detail::require_open_interval(kappa, v01_of(alpha), alpha, "kappa");
}
void check_current_low(double alpha, double eta) {
  detail::require_open_interval(eta, 1.0 / alpha, c01_of(alpha), "eta");
}
void check_current_high(double alpha, double xi) {
  detail::require_open_interval(xi, c01_of(alpha), 1.0, "xi");
}

}  // namespace

void KljnConfig::validate() const {
  detail::require_finite(alpha, "alpha");
  if (!(alpha > 1.0)) {
    throw DomainError("alpha must be > 1 (got " + detail::num(alpha) + ")");
  }
  if (n_samples < 2) {
    throw DomainError("n_samples must be >= 2 (got " + std::to_string(n_samples) + ")");
  }
}

void VoltageThresholds::validate(double alpha) const {
  check_voltage_low(alpha, beta);
  check_voltage_high(alpha, kappa);
}

void CurrentThresholds::validate(double alpha) const {
  check_current_low(alpha, eta);
  check_current_high(alpha, xi);
}

std::string_view to_string(DetectorKind d) {
  switch (d) {
    case DetectorKind::classical_voltage: return "classical-voltage";
    case DetectorKind::classical_current: return "classical-current";
    case DetectorKind::new_detector_1: return "nd-i";
    case DetectorKind::new_detector_2: return "nd-ii";
  }
  return "unknown";
}

DetectorKind parse_detector(std::string_view s) {
  if (s == "classical-voltage" || s == "voltage") return DetectorKind::classical_voltage;
  if (s == "classical-current" || s == "current") return DetectorKind::classical_current;
  if (s == "nd-i" || s == "ndi") return DetectorKind::new_detector_1;
  if (s == "nd-ii" || s == "ndii") return DetectorKind::new_detector_2;
  throw ConfigError("unknown detector '" + std::string(s) + "'");
}

Bit decide_voltage(double sigma_hat, Bit own, const VoltageThresholds& th) {
  detail::require_finite(th.beta, "beta");
  detail::require_finite(th.kappa, "kappa");
  if (!(th.beta > 0.0 && th.beta < th.kappa)) {
    throw DomainError("voltage thresholds must satisfy 0 < beta < kappa");
  }
  if (own == Bit::zero) return sigma_hat < th.beta ? Bit::zero : Bit::one;
  return sigma_hat > th.kappa ? Bit::one : Bit::zero;
}

Bit decide_current(double s_hat, Bit own, const CurrentThresholds& th) {
  detail::require_finite(th.eta, "eta");
  detail::require_finite(th.xi, "xi");
  if (!(th.eta > 0.0 && th.eta < th.xi)) {
    throw DomainError("current thresholds must satisfy 0 < eta < xi");
  }
  if (own == Bit::zero) return s_hat > th.xi ? Bit::zero : Bit::one;
  return s_hat < th.eta ? Bit::one : Bit::zero;
}

EveView eve_classify(double sigma_hat, const VoltageThresholds& th) {
  if (!(th.beta > 0.0 && th.beta < th.kappa)) {
    throw DomainError("voltage thresholds must satisfy 0 < beta < kappa");
  }
  if (sigma_hat < th.beta) return EveView::case00;
  if (sigma_hat > th.kappa) return EveView::case11;
  return EveView::secure;
}

ErrorEventProbabilities voltage_error_events(const KljnConfig& cfg, const VoltageThresholds& th) {
  cfg.validate();
  th.validate(cfg.alpha);
  const double s = unit_spread(cfg.n_samples);
  const double a = cfg.alpha;
  const double v1 = v01_of(a);
  ErrorEventProbabilities p;
  p.p00_to_01 = q_function((th.beta - 1.0) / s);
  p.p11_to_10 = q_function((a - th.kappa) / (a * s));
  p.p01_to_00 = q_function((v1 - th.beta) / (v1 * s));
  p.p10_to_11 = q_function((th.kappa - v1) / (v1 * s));
  return p;
}

ErrorEventProbabilities current_error_events(const KljnConfig& cfg, const CurrentThresholds& th) {
  cfg.validate();
  th.validate(cfg.alpha);
  const double s = unit_spread(cfg.n_samples);
  const double c11 = 1.0 / cfg.alpha;
  const double c1 = c01_of(cfg.alpha);
  ErrorEventProbabilities p;
  p.p00_to_01 = q_function((1.0 - th.xi) / s);
  p.p11_to_10 = q_function((th.eta - c11) / (c11 * s));
  p.p01_to_00 = q_function((th.xi - c1) / (c1 * s));
  p.p10_to_11 = q_function((c1 - th.eta) / (c1 * s));
  return p;
}

ErrorEventProbabilities ndii_error_events(const KljnConfig& cfg, double kappa, double xi) {
  cfg.validate();
  check_voltage_high(cfg.alpha, kappa);
  check_current_high(cfg.alpha, xi);
  const double s = unit_spread(cfg.n_samples);
  const double a = cfg.alpha;
  const double v1 = v01_of(a);
  const double c1 = c01_of(a);
  ErrorEventProbabilities p;
  p.p00_to_01 = q_function((1.0 - xi) / s);
  p.p11_to_10 = q_function((a - kappa) / (a * s));
  p.p01_to_00 = q_function((xi - c1) / (c1 * s));
  p.p10_to_11 = q_function((kappa - v1) / (v1 * s));
  return p;
}

double bep_voltage(const KljnConfig& cfg, const VoltageThresholds& th) {
  return voltage_error_events(cfg, th).average();
}

double bep_voltage_approx(const KljnConfig& cfg, double beta, VoltageApprox form) {
  cfg.validate();
  check_voltage_low(cfg.alpha, beta);
  const double s = unit_spread(cfg.n_samples);
  const double v1 = form == VoltageApprox::large_alpha ? 2.0 : v01_of(cfg.alpha);
  return 0.25 * (q_function((beta - 1.0) / s) + q_function((v1 - beta) / (v1 * s)));
}

double bep_equal_error(int n_samples) {
  if (n_samples < 2) {
    throw DomainError("n_samples must be >= 2 (got " + std::to_string(n_samples) + ")");
  }
  return 0.5 * q_function(1.0 / (3.0 * unit_spread(n_samples)));
}

double bep_current(const KljnConfig& cfg, const CurrentThresholds& th) {
  return current_error_events(cfg, th).average();
}

double bep_current_approx(const KljnConfig& cfg, double eta) {
  cfg.validate();
  const double c11 = 1.0 / cfg.alpha;
  const double c1 = 2.0 / cfg.alpha;
  detail::require_open_interval(eta, c11, c1, "eta");
  const double s = unit_spread(cfg.n_samples);
  return 0.25 * (q_function((eta - c11) / (c11 * s)) + q_function((c1 - eta) / (c1 * s)));
}

double ndi_correct_own_zero(const KljnConfig& cfg, double beta, double xi) {
  cfg.validate();
  check_voltage_low(cfg.alpha, beta);
  check_current_high(cfg.alpha, xi);
  const double s = unit_spread(cfg.n_samples);
  const double v1 = v01_of(cfg.alpha);
  const double c1 = c01_of(cfg.alpha);
  const double case00 = q_function((1.0 - beta) / s) * q_function((xi - 1.0) / s);
  const double case01 = q_function((beta - v1) / (v1 * s)) * q_function((c1 - xi) / (c1 * s));
  return case00 + case01;
}

double ndi_correct_own_one(const KljnConfig& cfg, double kappa, double eta) {
  cfg.validate();
  check_voltage_high(cfg.alpha, kappa);
  check_current_low(cfg.alpha, eta);
  const double s = unit_spread(cfg.n_samples);
  const double a = cfg.alpha;
  const double v1 = v01_of(a);
  const double c1 = c01_of(a);
  const double c11 = 1.0 / a;
  const double case11 = q_function((kappa - a) / (a * s)) * q_function((c11 - eta) / (c11 * s));
  const double case10 = q_function((v1 - kappa) / (v1 * s)) * q_function((eta - c1) / (c1 * s));
  return case11 + case10;
}

double prob_correct_ndi(const KljnConfig& cfg, const VoltageThresholds& vth,
                        const CurrentThresholds& cth) {
  return 0.25 * (ndi_correct_own_zero(cfg, vth.beta, cth.xi) +
                 ndi_correct_own_one(cfg, vth.kappa, cth.eta));
}

double bep_ndi(const KljnConfig& cfg, const VoltageThresholds& vth, const CurrentThresholds& cth) {
  return 0.5 * (1.0 - prob_correct_ndi(cfg, vth, cth));
}

double bep_ndii(const KljnConfig& cfg, double kappa, double xi) {
  return ndii_error_events(cfg, kappa, xi).average();
}

std::int64_t max_samples_per_bit(double bit_duration, double bandwidth) {
  detail::require_positive(bit_duration, "bit_duration");
  detail::require_positive(bandwidth, "bandwidth");
  // Guard against 2·T_b·Δf landing a few ulps under an integer.
  const double n = 2.0 * bit_duration * bandwidth;
  return static_cast<std::int64_t>(std::floor(n * (1.0 + 1e-12)));
}

}  // namespace thercom
