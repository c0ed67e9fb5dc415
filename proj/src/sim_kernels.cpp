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

#include "sim_kernels.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "check.hpp"

namespace thercom {

std::string_view to_string(SampleMode m) {
  return m == SampleMode::gaussian_fit ? "gaussian-fit" : "raw-samples";
}

SampleMode parse_sample_mode(std::string_view s) {
  if (s == "gaussian-fit") return SampleMode::gaussian_fit;
  if (s == "raw-samples") return SampleMode::raw_samples;
  throw ConfigError("unknown sample mode '" + std::string(s) +
                    "' (expected gaussian-fit or raw-samples)");
}

void StopRule::validate() const {
  if (max_bits < 1) throw ConfigError("max_bits must be >= 1");
}

double binomial_halfwidth_3sigma(double p, std::uint64_t n) {
  if (n == 0) return 0.0;
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double estimate_variance(std::span<const double> samples) {
  if (samples.empty()) throw DomainError("estimate_variance: empty sample block");
  const double ss = std::transform_reduce(samples.begin(), samples.end(), 0.0, std::plus<>{},
                                          [](double x) { return x * x; });
  return ss / static_cast<double>(samples.size());
}

double estimate_complex_variance(std::span<const std::complex<double>> samples) {
  if (samples.empty()) throw DomainError("estimate_complex_variance: empty sample block");
  const double ss = std::transform_reduce(samples.begin(), samples.end(), 0.0, std::plus<>{},
                                          [](const std::complex<double>& s) { return std::norm(s); });
  return ss / static_cast<double>(samples.size());
}

VarianceSampler::VarianceSampler(int n, SampleMode mode, int dof_multiplier)
    : n_(n), mode_(mode), dof_(dof_multiplier) {
  if (n < 2) throw DomainError("sample count must be >= 2 (got " + std::to_string(n) + ")");
  if (dof_multiplier != 1 && dof_multiplier != 2) {
    throw DomainError("dof_multiplier must be 1 (real) or 2 (complex)");
  }
  rel_spread_ = std::sqrt(2.0 / (static_cast<double>(dof_) * n_));
  if (mode_ == SampleMode::raw_samples) {
    if (dof_ == 1) {
      real_buf_.resize(static_cast<std::size_t>(n_));
    } else {
      complex_buf_.resize(static_cast<std::size_t>(n_));
    }
  }
}

double VarianceSampler::operator()(double true_variance, Engine& eng) {
  if (mode_ == SampleMode::gaussian_fit) {
    const double v = true_variance * (1.0 + rel_spread_ * normal_(eng));
    if (v < 0.0) {
      ++clamps_;
      return 0.0;
    }
    return v;
  }
  if (dof_ == 1) {
    const double sd = std::sqrt(true_variance);
    for (double& x : real_buf_) x = sd * normal_(eng);
    return estimate_variance(real_buf_);
  }
  const double sd = std::sqrt(0.5 * true_variance);
  for (auto& s : complex_buf_) {
    const double re = sd * normal_(eng);
    const double im = sd * normal_(eng);
    s = {re, im};
  }
  return estimate_complex_variance(complex_buf_);
}

double draw_sample_variance(double true_variance, int n, SampleMode mode, int dof_multiplier,
                            Engine& eng) {
  detail::require_positive(true_variance, "true_variance");
  VarianceSampler sampler(n, mode, dof_multiplier);
  return sampler(true_variance, eng);
}

void KljnSimSpec::validate() const {
  cfg.validate();
  switch (detector) {
    case DetectorKind::classical_voltage:
      if (!vth) throw ConfigError("classical-voltage detector needs voltage thresholds");
      vth->validate(cfg.alpha);
      break;
    case DetectorKind::classical_current:
      if (!cth) throw ConfigError("classical-current detector needs current thresholds");
      cth->validate(cfg.alpha);
      break;
    case DetectorKind::new_detector_1:
      if (!vth || !cth) throw ConfigError("nd-i detector needs voltage and current thresholds");
      vth->validate(cfg.alpha);
      cth->validate(cfg.alpha);
      break;
    case DetectorKind::new_detector_2: {
      if (!vth || !cth) throw ConfigError("nd-ii detector needs kappa and xi");
      // Only the upper thresholds are used.
      const double v1 = 2.0 * cfg.alpha / (1.0 + cfg.alpha);
      const double c1 = 2.0 / (1.0 + cfg.alpha);
      detail::require_open_interval(vth->kappa, v1, cfg.alpha, "kappa");
      detail::require_open_interval(cth->xi, c1, 1.0, "xi");
      break;
    }
  }
  if (eve_thresholds) eve_thresholds->validate(cfg.alpha);
}

void ThermodSimSpec::validate() const { th.validate(cfg); }

namespace detail {

void validate_chunking(const StopRule& stop, const ParallelOptions& opts) {
  stop.validate();
  if (opts.chunk_size < 1) throw ConfigError("chunk_size must be >= 1");
  if (opts.workers < 0) throw ConfigError("workers must be >= 0");
}

KljnPlan make_kljn_plan(const KljnSimSpec& spec) {
  spec.validate();
  KljnPlan plan;
  plan.spec = spec;
  const NoiseVarianceSet v = normalized_variances(spec.cfg.alpha);
  plan.voltage_var = {v.v00, v.v01, v.v11};
  plan.current_var = {v.c00, v.c01, v.c11};
  plan.need_current = spec.detector != DetectorKind::classical_voltage;
  if (spec.vth) plan.vth = *spec.vth;
  if (spec.cth) plan.cth = *spec.cth;
  if (spec.detector == DetectorKind::new_detector_2) {
    // beta and eta are never consulted; keep them structurally ordered.
    plan.vth.beta = 0.5 * plan.vth.kappa;
    plan.cth.eta = 0.5 * plan.cth.xi;
  }
  if (spec.eve_thresholds) {
    plan.eve_th = *spec.eve_thresholds;
    plan.eve_enabled = true;
  } else if (spec.vth) {
    // The adaptive detector never uses beta, so it may be left infeasible;
    // Eve then has no lower threshold and is not simulated.
    const double v1 = 2.0 * spec.cfg.alpha / (1.0 + spec.cfg.alpha);
    if (spec.vth->beta > 1.0 && spec.vth->beta < v1) {
      plan.eve_th = *spec.vth;
      plan.eve_enabled = true;
    }
  }
  return plan;
}

namespace {

struct PartyDecision {
  Bit bit = Bit::zero;       // reported decision
  bool flagged = false;      // voltage and current disagreed
  Bit unflagged = Bit::zero;  // the agreed decision, meaningful when !flagged
};

PartyDecision decide_party(const KljnPlan& plan, Bit own, double sv, double sc, Bit coin) {
  switch (plan.spec.detector) {
    case DetectorKind::classical_voltage: {
      const Bit b = decide_voltage(sv, own, plan.vth);
      return {b, false, b};
    }
    case DetectorKind::classical_current: {
      const Bit b = decide_current(sc, own, plan.cth);
      return {b, false, b};
    }
    case DetectorKind::new_detector_1: {
      const Bit dv = decide_voltage(sv, own, plan.vth);
      const Bit dc = decide_current(sc, own, plan.cth);
      if (dv == dc) return {dv, false, dv};
      return {coin, true, dv};
    }
    case DetectorKind::new_detector_2: {
      const Bit b = own == Bit::zero ? decide_current(sc, own, plan.cth)
                                     : decide_voltage(sv, own, plan.vth);
      return {b, false, b};
    }
  }
  return {};
}

}  // namespace

SimCounts kljn_chunk(const KljnPlan& plan, std::uint64_t seed, std::uint64_t chunk,
                     std::uint64_t nbits) {
  Engine eng = make_stream(seed, chunk);
  const int n = plan.spec.cfg.n_samples;
  VarianceSampler voltage(n, plan.spec.mode, 1);
  VarianceSampler current(n, plan.spec.mode, 1);
  const bool ndi = plan.spec.detector == DetectorKind::new_detector_1;

  SimCounts c;
  c.bits = nbits;
  for (std::uint64_t i = 0; i < nbits; ++i) {
    // One word per interval: bit pair, Eve's ordering guess and the two
    // coin flips used when a flagging detector sees a disagreement.
    const std::uint64_t word = eng();
    const Bit alice = to_bit(static_cast<unsigned>(word));
    const Bit bob = to_bit(static_cast<unsigned>(word >> 1));
    const Bit eve_guess = to_bit(static_cast<unsigned>(word >> 2));
    const Bit coin_a = to_bit(static_cast<unsigned>(word >> 3));
    const Bit coin_b = to_bit(static_cast<unsigned>(word >> 4));
    const auto idx = static_cast<std::size_t>(to_int(alice) + to_int(bob));

    // Both parties and Eve observe the same line, hence the same realization.
    const double sv = voltage(plan.voltage_var[idx], eng);
    const double sc = plan.need_current ? current(plan.current_var[idx], eng) : 0.0;

    const PartyDecision da = decide_party(plan, alice, sv, sc, coin_a);
    const PartyDecision db = decide_party(plan, bob, sv, sc, coin_b);

    const bool err_a = da.bit != bob;
    const bool err_b = db.bit != alice;
    c.flagged_errors_alice += err_a;
    c.flagged_errors_bob += err_b;
    if (da.flagged) {
      ++c.discarded_alice;
    } else {
      c.kept_errors_alice += da.unflagged != bob;
    }
    if (db.flagged) {
      ++c.discarded_bob;
    } else {
      c.kept_errors_bob += db.unflagged != alice;
    }

    if (plan.eve_enabled && eve_classify(sv, plan.eve_th) == EveView::secure) {
      ++c.eve_secure_views;
      if (alice != bob) {
        ++c.eve_scored;
        c.eve_correct += eve_guess == alice;
      }
    }
  }
  if (ndi && plan.spec.ndi_discard) {
    c.errors_alice = c.kept_errors_alice;
    c.errors_bob = c.kept_errors_bob;
  } else {
    c.errors_alice = c.flagged_errors_alice;
    c.errors_bob = c.flagged_errors_bob;
  }
  c.primary_errors = c.errors_alice;
  c.clamps = voltage.clamp_events() + current.clamp_events();
  return c;
}

SimCounts thermod_chunk(const ThermodSimSpec& spec, std::uint64_t seed, std::uint64_t chunk,
                        std::uint64_t nbits) {
  Engine eng = make_stream(seed, chunk);
  VarianceSampler sampler(spec.cfg.n_samples, spec.mode, 2);
  const ThermodVariances var = thermod_variances(spec.cfg);

  SimCounts c;
  c.bits = nbits;
  for (std::uint64_t i = 0; i < nbits; ++i) {
    const Bit sent = to_bit(static_cast<unsigned>(eng()));
    const double est = sampler(sent == Bit::one ? var.tilde1 : var.tilde0, eng);
    c.errors_alice += decide_thermod(est, spec.th) != sent;
  }
  c.flagged_errors_alice = c.errors_alice;
  c.kept_errors_alice = c.errors_alice;
  c.primary_errors = c.errors_alice;
  c.clamps = sampler.clamp_events();
  return c;
}

namespace {
double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}
}  // namespace

SimOutcome finalize(const SimCounts& c, const KljnPlan* plan, std::uint64_t seed,
                    std::uint64_t chunk_size) {
  SimOutcome o;
  o.bits_simulated = c.bits;
  o.errors_alice = c.errors_alice;
  o.errors_bob = c.errors_bob;
  o.discarded = c.discarded_alice;
  o.discarded_bob = c.discarded_bob;
  o.flagged_errors_alice = c.flagged_errors_alice;
  o.kept_errors_alice = c.kept_errors_alice;
  o.eve_secure_views = c.eve_secure_views;
  o.eve_scored = c.eve_scored;
  o.eve_correct = c.eve_correct;
  o.clamp_events = c.clamps;

  const bool discard = plan != nullptr && plan->spec.detector == DetectorKind::new_detector_1 &&
                       plan->spec.ndi_discard;
  const std::uint64_t den_a = discard ? c.bits - c.discarded_alice : c.bits;
  const std::uint64_t den_b = discard ? c.bits - c.discarded_bob : c.bits;
  o.ber_alice = ratio(c.errors_alice, den_a);
  o.ber_bob = ratio(c.errors_bob, den_b);
  o.ber_ci_halfwidth = binomial_halfwidth_3sigma(o.ber_alice, den_a);
  o.flagged_ber = ratio(c.flagged_errors_alice, c.bits);
  o.kept_ber = ratio(c.kept_errors_alice, c.bits - c.discarded_alice);
  o.eve_secure_fraction = ratio(c.eve_secure_views, c.bits);
  o.eve_accuracy_on_secure = ratio(c.eve_correct, c.eve_scored);
  o.seed = seed;
  o.chunk_size = chunk_size;
  return o;
}

}  // namespace detail
}  // namespace thercom
