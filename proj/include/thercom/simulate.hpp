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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thercom/kljn.hpp"
#include "thercom/rng.hpp"
#include "thercom/thermod.hpp"

namespace thercom {

/// How a per-bit sample-variance estimate is realized.
enum class SampleMode {
  gaussian_fit,  ///< one draw from the large-N normal law of the estimator
  raw_samples,   ///< N raw Gaussian samples, then the sum-of-squares estimator
};

std::string_view to_string(SampleMode m);
/// Accepts "gaussian-fit" and "raw-samples".
SampleMode parse_sample_mode(std::string_view s);

/// A run stops at max_bits, or at the end of the first chunk after which at
/// least min_errors errors have been counted. min_errors = 0 disables the
/// error criterion.
struct StopRule {
  std::uint64_t max_bits = 1'000'000;
  std::uint64_t min_errors = 100;

  void validate() const;
};

/// Chunking of a run. Each chunk owns an RNG stream derived from
/// (seed, chunk index), so results depend on chunk_size but never on the
/// number of workers.
struct ParallelOptions {
  std::uint64_t chunk_size = 1u << 16;
  int workers = 0;  // 0: OpenMP default
};

struct SimOutcome {
  std::uint64_t bits_simulated = 0;
  // For TherMod the receiver is reported in the "alice" slots and the "bob"
  // slots stay zero.
  std::uint64_t errors_alice = 0;
  std::uint64_t errors_bob = 0;
  // Flagging detector only: intervals where a party's voltage and current
  // decisions disagree. `discarded` is Alice's count.
  std::uint64_t discarded = 0;
  std::uint64_t discarded_bob = 0;
  std::uint64_t flagged_errors_alice = 0;  // disagreements resolved by a coin flip
  std::uint64_t kept_errors_alice = 0;     // errors among Alice's agreeing intervals
  std::uint64_t eve_secure_views = 0;      // intervals Eve classified as 01/10
  std::uint64_t eve_scored = 0;            // ...that really were 01/10
  std::uint64_t eve_correct = 0;           // ...where her ordering guess was right
  std::uint64_t clamp_events = 0;          // gaussian-fit draws clamped to 0

  double ber_alice = 0.0;
  double ber_bob = 0.0;
  double ber_ci_halfwidth = 0.0;  // 3-sigma binomial, for ber_alice
  double flagged_ber = 0.0;
  double kept_ber = 0.0;
  double eve_secure_fraction = 0.0;
  double eve_accuracy_on_secure = 0.0;

  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 0;

  bool operator==(const SimOutcome&) const = default;
};

/// 3·√(p(1−p)/n); zero when n == 0.
double binomial_halfwidth_3sigma(double p, std::uint64_t n);

/// (1/N)·Σ x_k² for zero-mean samples.
double estimate_variance(std::span<const double> samples);

/// (1/N)·Σ |s_n|².
double estimate_complex_variance(std::span<const std::complex<double>> samples);

/// Realizes sample-variance estimates for a fixed N and mode. dof_multiplier
/// is 1 for real samples (estimator variance 2σ⁴/N) and 2 for complex ones
/// (σ⁴/N, independent in-phase and quadrature parts of variance σ²/2 each).
/// Not thread-safe; give each stream its own sampler.
class VarianceSampler {
 public:
  VarianceSampler(int n, SampleMode mode, int dof_multiplier);

  double operator()(double true_variance, Engine& eng);

  std::uint64_t clamp_events() const { return clamps_; }
  int n() const { return n_; }

 private:
  int n_;
  SampleMode mode_;
  int dof_;
  double rel_spread_;
  std::normal_distribution<double> normal_;
  std::vector<double> real_buf_;
  std::vector<std::complex<double>> complex_buf_;
  std::uint64_t clamps_ = 0;
};

double draw_sample_variance(double true_variance, int n, SampleMode mode, int dof_multiplier,
                            Engine& eng);

struct KljnSimSpec {
  KljnConfig cfg;
  DetectorKind detector = DetectorKind::classical_voltage;
  std::optional<VoltageThresholds> vth;
  std::optional<CurrentThresholds> cth;
  SampleMode mode = SampleMode::gaussian_fit;
  // Flagging detector: report the kept-bit BER (true) or the BER with
  // disagreements replaced by random guesses (false) as ber_alice/ber_bob.
  bool ndi_discard = true;
  // Eve's ternary thresholds; defaults to vth.
  std::optional<VoltageThresholds> eve_thresholds;

  /// Throws ConfigError if the detector lacks thresholds and DomainError if
  /// they are infeasible for cfg.
  void validate() const;
};

struct ThermodSimSpec {
  ThermodConfig cfg;
  ThermodThreshold th;
  SampleMode mode = SampleMode::gaussian_fit;

  void validate() const;
};

/// Monte Carlo over uniformly drawn bit pairs; chunks run on OpenMP workers.
SimOutcome simulate_kljn(const KljnSimSpec& spec, const StopRule& stop, std::uint64_t seed,
                         const ParallelOptions& opts = {});

SimOutcome simulate_thermod(const ThermodSimSpec& spec, const StopRule& stop, std::uint64_t seed,
                            const ParallelOptions& opts = {});

}  // namespace thercom
