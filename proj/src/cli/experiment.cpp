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

#include "thercom/cli/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "thercom/error.hpp"
#include "thercom/kljn.hpp"
#include "thercom/optimize.hpp"
#include "thercom/rng.hpp"
#include "thercom/simulate.hpp"
#include "thercom/thermod.hpp"

#ifndef THERCOM_VERSION
#define THERCOM_VERSION "0.0.0"
#endif

namespace thercom::cli {

namespace {

struct CommandName {
  Command cmd;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::kljn_theory, "kljn-theory"},       {Command::kljn_sim, "kljn-sim"},
    {Command::kljn_optimize, "kljn-optimize"},   {Command::thermod_theory, "thermod-theory"},
    {Command::thermod_sim, "thermod-sim"},       {Command::thermod_sweep, "thermod-sweep"},
};

void stamp(Table& t, Command cmd, const ExperimentConfig& cfg) {
  t.metadata.emplace_back("tool", tool_version());
  t.metadata.emplace_back("command", to_string(cmd));
  for (auto& kv : resolved_config(cfg)) t.metadata.push_back(std::move(kv));
}

double kljn_theory(const KljnConfig& k, DetectorKind d, const VoltageThresholds& v,
                   const CurrentThresholds& c) {
  switch (d) {
    case DetectorKind::classical_voltage:
      return bep_voltage(k, v);
    case DetectorKind::classical_current:
      return bep_current(k, c);
    case DetectorKind::new_detector_1:
      return bep_ndi(k, v, c);
    case DetectorKind::new_detector_2:
      return bep_ndii(k, v.kappa, c.xi);
  }
  return 0.0;
}

struct Thresholds {
  VoltageThresholds vth;
  CurrentThresholds cth;
};

Thresholds thresholds_for(const ExperimentConfig& cfg, int n, int workers) {
  if (!cfg.optimize_thresholds) return {cfg.vth, cfg.cth};
  const KljnConfig k{cfg.alpha, n};
  const auto grid = default_kljn_grid(k, cfg.detector, cfg.optimize_step, cfg.reduce_ndii);
  const auto opt =
      optimize_kljn_thresholds(k, cfg.detector, grid, cfg.reduce_ndii, cfg.search, workers);
  return {opt.vth, opt.cth};
}

double thermod_chi(const ExperimentConfig& cfg, const ThermodConfig& tc) {
  return cfg.chi ? *cfg.chi : uniform_chi(tc).chi;
}

Result kljn_theory_table(const ExperimentConfig& cfg, int workers) {
  Result r;
  r.table.columns = {"N", "bep_theory"};
  for (int n : cfg.n_samples) {
    const auto th = thresholds_for(cfg, n, workers);
    r.table.add_row({std::to_string(n),
                     fmt_bep(kljn_theory({cfg.alpha, n}, cfg.detector, th.vth, th.cth))});
  }
  r.plot = make_plot("KLJN " + std::string(to_string(cfg.detector)) + " theory", "N", {"bep_theory"}, {});
  return r;
}

Result kljn_sim_table(const ExperimentConfig& cfg, int workers) {
  Result r;
  r.table.columns = {"N",           "bep_theory",   "ber_alice",      "ber_bob",
                     "ci_halfwidth", "bits",        "errors_alice",   "errors_bob",
                     "discarded",   "flagged_ber",  "kept_ber",       "eve_secure_fraction",
                     "eve_accuracy", "clamp_events"};
  for (std::size_t i = 0; i < cfg.n_samples.size(); ++i) {
    const int n = cfg.n_samples[i];
    const auto th = thresholds_for(cfg, n, workers);
    KljnSimSpec spec;
    spec.cfg = {cfg.alpha, n};
    spec.detector = cfg.detector;
    spec.vth = th.vth;
    spec.cth = th.cth;
    spec.mode = cfg.mode;
    spec.ndi_discard = cfg.ndi_discard;
    const auto o = simulate_kljn(spec, cfg.stop, point_seed(cfg.seed, i), {cfg.chunk_size, workers});
    r.table.add_row({std::to_string(n), fmt_bep(kljn_theory(spec.cfg, cfg.detector, th.vth, th.cth)),
                     fmt_bep(o.ber_alice), fmt_bep(o.ber_bob), fmt_bep(o.ber_ci_halfwidth),
                     fmt_count(o.bits_simulated), fmt_count(o.errors_alice),
                     fmt_count(o.errors_bob), fmt_count(o.discarded), fmt_bep(o.flagged_ber),
                     fmt_bep(o.kept_ber), fmt_bep(o.eve_secure_fraction),
                     fmt_bep(o.eve_accuracy_on_secure), fmt_count(o.clamp_events)});
  }
  r.plot = make_plot("KLJN " + std::string(to_string(cfg.detector)) + " simulation", "N", {"bep_theory"},
            {"ber_alice"});
  return r;
}

Result kljn_optimize_table(const ExperimentConfig& cfg, int workers) {
  Result r;
  r.table.columns = {"N", "beta", "kappa", "eta", "xi", "bep"};
  for (int n : cfg.n_samples) {
    const KljnConfig k{cfg.alpha, n};
    const auto grid = default_kljn_grid(k, cfg.detector, cfg.optimize_step, cfg.reduce_ndii);
    const auto opt =
        optimize_kljn_thresholds(k, cfg.detector, grid, cfg.reduce_ndii, cfg.search, workers);
    const bool v = cfg.detector != DetectorKind::classical_current;
    const bool c = cfg.detector != DetectorKind::classical_voltage;
    const bool lower = cfg.detector != DetectorKind::new_detector_2;
    r.table.add_row({std::to_string(n), v && lower ? fmt_real(opt.vth.beta) : "",
                     v ? fmt_real(opt.vth.kappa) : "", c && lower ? fmt_real(opt.cth.eta) : "",
                     c ? fmt_real(opt.cth.xi) : "", fmt_bep(opt.bep)});
  }
  r.plot = make_plot("KLJN " + std::string(to_string(cfg.detector)) + " optimized BEP", "N", {"bep"}, {});
  return r;
}

Result thermod_theory_table(const ExperimentConfig& cfg) {
  Result r;
  r.table.columns = {"N",          "chi",         "p0_to_1",       "p1_to_0",
                     "bep_theory", "bep_uniform", "bep_largealpha"};
  for (int n : cfg.n_samples) {
    const ThermodConfig tc{cfg.alpha, cfg.delta, n};
    const double chi = thermod_chi(cfg, tc);
    const auto p = thermod_error_probabilities(tc, {chi});
    r.table.add_row({std::to_string(n), fmt_real(chi), fmt_bep(p.p0_to_1), fmt_bep(p.p1_to_0),
                     fmt_bep(p.average()), fmt_bep(thermod_bep_uniform(tc)),
                     fmt_bep(thermod_bep_largealpha(tc))});
  }
  r.plot = make_plot("TherMod theory", "N", {"bep_theory", "bep_largealpha"}, {});
  return r;
}

Result thermod_sim_table(const ExperimentConfig& cfg, int workers) {
  Result r;
  r.table.columns = {"N", "chi", "bep_theory", "ber", "ci_halfwidth", "bits", "errors",
                     "clamp_events"};
  for (std::size_t i = 0; i < cfg.n_samples.size(); ++i) {
    const int n = cfg.n_samples[i];
    const ThermodConfig tc{cfg.alpha, cfg.delta, n};
    const ThermodSimSpec spec{tc, {thermod_chi(cfg, tc)}, cfg.mode};
    const auto o =
        simulate_thermod(spec, cfg.stop, point_seed(cfg.seed, i), {cfg.chunk_size, workers});
    r.table.add_row({std::to_string(n), fmt_real(spec.th.chi), fmt_bep(thermod_bep(tc, spec.th)),
                     fmt_bep(o.ber_alice), fmt_bep(o.ber_ci_halfwidth),
                     fmt_count(o.bits_simulated), fmt_count(o.errors_alice),
                     fmt_count(o.clamp_events)});
  }
  r.plot = make_plot("TherMod simulation", "N", {"bep_theory"}, {"ber"});
  return r;
}

Result thermod_sweep_table(const ExperimentConfig& cfg) {
  Result r;
  std::vector<std::string> curves;
  for (int n : cfg.n_samples) curves.push_back("bep_N" + std::to_string(n));

  if (cfg.sweep == SweepKind::alpha) {
    r.table.columns = {"alpha"};
    r.table.columns.insert(r.table.columns.end(), curves.begin(), curves.end());
    std::vector<SweepResult> sweeps;
    for (int n : cfg.n_samples) sweeps.push_back(sweep_alpha(cfg.delta, n, cfg.sweep_axis));
    for (std::size_t i = 0; i < sweeps.front().values.size(); ++i) {
      std::vector<std::string> row{fmt_real(sweeps.front().axes[0][i])};
      for (const auto& s : sweeps) row.push_back(fmt_bep(s.values[i]));
      r.table.add_row(std::move(row));
    }
    r.plot = make_plot("TherMod BEP versus alpha", "alpha", curves, {});
    return r;
  }

  r.table.columns = {"chi"};
  r.table.columns.insert(r.table.columns.end(), curves.begin(), curves.end());
  r.table.columns.push_back("marker");
  const ThermodConfig probe{cfg.alpha, cfg.delta, cfg.n_samples.front()};
  const double uniform = uniform_chi(probe).chi;
  std::vector<SweepResult> sweeps;
  for (int n : cfg.n_samples) sweeps.push_back(sweep_chi({cfg.alpha, cfg.delta, n}, cfg.sweep_axis));
  const auto& chis = sweeps.front().axes[0];
  bool marked = false;
  auto mark_row = [&] {
    std::vector<std::string> row{fmt_real(uniform)};
    for (int n : cfg.n_samples) {
      row.push_back(fmt_bep(thermod_bep({cfg.alpha, cfg.delta, n}, {uniform})));
    }
    row.push_back("uniform");
    r.table.add_row(std::move(row));
    marked = true;
  };
  for (std::size_t i = 0; i < chis.size(); ++i) {
    if (!marked && chis[i] > uniform && uniform > cfg.sweep_axis.lower) mark_row();
    std::vector<std::string> row{fmt_real(chis[i])};
    for (const auto& s : sweeps) row.push_back(fmt_bep(s.values[i]));
    std::string tag;
    for (std::size_t k = 0; k < sweeps.size(); ++k) {
      if (sweeps[k].argmin_index[0] == i) tag += (tag.empty() ? "min_N" : ";min_N") + std::to_string(cfg.n_samples[k]);
    }
    row.push_back(tag);
    r.table.add_row(std::move(row));
  }
  r.plot = make_plot("TherMod BEP versus chi", "chi", curves, {});
  return r;
}

}  // namespace

std::string tool_version() { return std::string("thercom ") + THERCOM_VERSION; }

std::string to_string(Command c) {
  for (const auto& e : kCommands) {
    if (e.cmd == c) return e.name;
  }
  return "?";
}

Command parse_command(const std::string& s) {
  for (const auto& e : kCommands) {
    if (s == e.name) return e.cmd;
  }
  throw ConfigError("unknown command '" + s + "'");
}

Scheme scheme_of(Command c) {
  switch (c) {
    case Command::kljn_theory:
    case Command::kljn_sim:
    case Command::kljn_optimize:
      return Scheme::kljn;
    default:
      return Scheme::thermod;
  }
}

std::uint64_t point_seed(std::uint64_t master, std::uint64_t index) {
  return stream_seed(master, ~index);
}

Result run_experiment(Command cmd, const ExperimentConfig& cfg_in, int workers) {
  ExperimentConfig cfg = cfg_in;
  cfg.scheme = scheme_of(cmd);
  cfg.validate();
  Result r;
  switch (cmd) {
    case Command::kljn_theory:
      r = kljn_theory_table(cfg, workers);
      break;
    case Command::kljn_sim:
      r = kljn_sim_table(cfg, workers);
      break;
    case Command::kljn_optimize:
      r = kljn_optimize_table(cfg, workers);
      break;
    case Command::thermod_theory:
      r = thermod_theory_table(cfg);
      break;
    case Command::thermod_sim:
      r = thermod_sim_table(cfg, workers);
      break;
    case Command::thermod_sweep:
      r = thermod_sweep_table(cfg);
      break;
  }
  Table body = std::move(r.table);
  r.table = {};
  stamp(r.table, cmd, cfg);
  r.table.columns = std::move(body.columns);
  r.table.rows = std::move(body.rows);
  return r;
}

}  // namespace thercom::cli
