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

#include <algorithm>
#include <cmath>

#include "thercom/cli/experiment.hpp"
#include "thercom/error.hpp"
#include "thercom/kljn.hpp"
#include "thercom/optimize.hpp"
#include "thercom/simulate.hpp"
#include "thercom/thermod.hpp"

namespace thercom::cli {

namespace {

constexpr const char* kFigureNames[] = {"fig5", "fig6", "fig7", "fig8", "fig9", "fig10"};

struct SimCells {
  std::string ber, ci, bits, errors;
};

SimCells cells(const SimOutcome& o) {
  return {fmt_bep(o.ber_alice), fmt_bep(o.ber_ci_halfwidth), fmt_count(o.bits_simulated),
          fmt_count(o.errors_alice)};
}

void stamp(Table& t, FigureId id, const FigureOptions& opts, std::uint64_t chunk_size) {
  t.metadata.emplace_back("tool", tool_version());
  t.metadata.emplace_back("figure", to_string(id));
  t.metadata.emplace_back("seed", std::to_string(opts.seed));
  t.metadata.emplace_back("scale", to_string(opts.scale));
  t.metadata.emplace_back("chunk_size", std::to_string(chunk_size));
  t.metadata.emplace_back("max_bits", std::to_string(max_bits_for(opts.scale)));
}

const std::vector<std::string> kSimColumns = {
    "ber_gaussian_fit", "ci_gaussian_fit", "bits_gaussian_fit", "errors_gaussian_fit",
    "ber_raw_samples",  "ci_raw_samples",  "bits_raw_samples",  "errors_raw_samples"};

void append(std::vector<std::string>& row, const SimCells& c) {
  row.insert(row.end(), {c.ber, c.ci, c.bits, c.errors});
}

Result fig5(const FigureOptions& opts) {
  const StopRule stop{max_bits_for(opts.scale), 100};
  const ParallelOptions par{1u << 16, opts.workers};
  struct Case {
    const char* label;
    VoltageThresholds th;
  };
  const Case cases[] = {{"beta=4/3;kappa=5", {4.0 / 3.0, 5.0}}, {"beta=1.3;kappa=4", {1.3, 4.0}}};
  Result r;
  stamp(r.table, FigureId::fig5, opts, par.chunk_size);
  r.table.metadata.emplace_back("alpha", "10");
  r.table.columns = {"thresholds", "beta", "kappa", "N", "bep_theory"};
  r.table.columns.insert(r.table.columns.end(), kSimColumns.begin(), kSimColumns.end());
  std::uint64_t point = 0;
  for (const auto& c : cases) {
    for (int n = 50; n <= 400; n += 50) {
      KljnSimSpec spec;
      spec.cfg = {10.0, n};
      spec.vth = c.th;
      std::vector<std::string> row{c.label, fmt_real(c.th.beta), fmt_real(c.th.kappa),
                                   std::to_string(n), fmt_bep(bep_voltage(spec.cfg, c.th))};
      for (auto mode : {SampleMode::gaussian_fit, SampleMode::raw_samples}) {
        spec.mode = mode;
        append(row, cells(simulate_kljn(spec, stop, point_seed(opts.seed, point++), par)));
      }
      r.table.add_row(std::move(row));
    }
  }
  r.plot = make_plot("KLJN voltage detector, alpha = 10",
            "N",
            {"bep_theory"},
            {"ber_gaussian_fit", "ber_raw_samples"},
            "thresholds");
  return r;
}

Result fig6(const FigureOptions& opts) {
  const bool full = opts.scale == Scale::full;
  const GridAxis beta{1.01, 1.81, full ? 0.002 : 0.01};
  const GridAxis kappa{1.85, 9.95, full ? 0.01 : 0.05};
  Result r;
  stamp(r.table, FigureId::fig6, opts, 0);
  r.table.metadata.emplace_back("alpha", "10");
  r.table.columns = {"N", "beta", "kappa", "bep"};
  Chart chart{"Minimum over kappa of the voltage BEP", "beta", "bit error probability", true, {}};
  for (int n : {50, 100, 200, 400}) {
    const auto s = sweep_beta_kappa_surface({10.0, n}, beta, kappa, opts.workers);
    r.table.metadata.emplace_back("argmin_N" + std::to_string(n),
                                  "beta=" + fmt_real(s.argmin[0]) + ";kappa=" + fmt_real(s.argmin[1]) +
                                      ";bep=" + fmt_bep(s.minimum));
    const auto& bs = s.axes[0];
    const auto& ks = s.axes[1];
    Series profile{"N=" + std::to_string(n), {}, {}, false};
    for (std::size_t i = 0; i < bs.size(); ++i) {
      double best = 1.0;
      for (std::size_t j = 0; j < ks.size(); ++j) {
        const double v = s.values[i * ks.size() + j];
        best = std::min(best, v);
        r.table.add_row({std::to_string(n), fmt_real(bs[i]), fmt_real(ks[j]), fmt_bep(v)});
      }
      profile.x.push_back(bs[i]);
      profile.y.push_back(best);
    }
    chart.series.push_back(std::move(profile));
  }
  r.plot = make_plot("", "beta", {"bep"}, {}, "N");
  r.chart = std::move(chart);
  return r;
}

Result fig7(const FigureOptions& opts) {
  const StopRule stop{max_bits_for(opts.scale), 100};
  const ParallelOptions par{1u << 16, opts.workers};
  const KljnConfig at100{10.0, 100};
  Result r;
  stamp(r.table, FigureId::fig7, opts, par.chunk_size);
  r.table.metadata.emplace_back("alpha", "10");
  r.table.metadata.emplace_back("optimized_at_N", "100");
  r.table.metadata.emplace_back("optimize_step", "0.001");
  r.table.columns = {"detector", "N", "beta", "kappa", "eta", "xi", "bep_theory"};
  r.table.columns.insert(r.table.columns.end(), kSimColumns.begin(), kSimColumns.end());
  r.table.columns.insert(r.table.columns.end(),
                         {"kept_ber_gaussian_fit", "discard_fraction_gaussian_fit",
                          "kept_ber_raw_samples", "discard_fraction_raw_samples"});
  std::uint64_t point = 0;
  for (auto det : {DetectorKind::classical_voltage, DetectorKind::new_detector_1,
                   DetectorKind::new_detector_2}) {
    const auto grid = default_kljn_grid(at100, det, 0.001);
    const auto opt = optimize_kljn_thresholds(at100, det, grid, false, SearchMethod::automatic,
                                              opts.workers);
    const bool ndi = det == DetectorKind::new_detector_1;
    const bool ndii = det == DetectorKind::new_detector_2;
    for (int n = 50; n <= 75; n += 5) {
      KljnSimSpec spec;
      spec.cfg = {10.0, n};
      spec.detector = det;
      spec.vth = opt.vth;
      spec.cth = opt.cth;
      spec.ndi_discard = false;
      double theory = 0.0;
      if (ndi) {
        theory = bep_ndi(spec.cfg, opt.vth, opt.cth);
      } else if (ndii) {
        theory = bep_ndii(spec.cfg, opt.vth.kappa, opt.cth.xi);
      } else {
        theory = bep_voltage(spec.cfg, opt.vth);
      }
      std::vector<std::string> row{std::string(to_string(det)),
                                   std::to_string(n),
                                   ndii ? "" : fmt_real(opt.vth.beta),
                                   fmt_real(opt.vth.kappa),
                                   ndi ? fmt_real(opt.cth.eta) : "",
                                   det == DetectorKind::classical_voltage ? "" : fmt_real(opt.cth.xi),
                                   fmt_bep(theory)};
      std::vector<std::string> extra;
      for (auto mode : {SampleMode::gaussian_fit, SampleMode::raw_samples}) {
        spec.mode = mode;
        const auto o = simulate_kljn(spec, stop, point_seed(opts.seed, point++), par);
        append(row, cells(o));
        extra.push_back(ndi ? fmt_bep(o.kept_ber) : "");
        extra.push_back(ndi ? fmt_real(static_cast<double>(o.discarded) /
                                       static_cast<double>(o.bits_simulated))
                            : "");
      }
      row.insert(row.end(), extra.begin(), extra.end());
      r.table.add_row(std::move(row));
    }
  }
  r.plot = make_plot("Detector comparison, alpha = 10",
            "N",
            {"bep_theory"},
            {"ber_gaussian_fit", "kept_ber_gaussian_fit"},
            "detector");
  return r;
}

Result fig8(const FigureOptions& opts) {
  const StopRule stop{max_bits_for(opts.scale), 100};
  const ParallelOptions par{1u << 16, opts.workers};
  Result r;
  stamp(r.table, FigureId::fig8, opts, par.chunk_size);
  r.table.metadata.emplace_back("alpha", "10");
  r.table.metadata.emplace_back("chi", "uniform");
  r.table.columns = {"delta", "N", "chi", "bep_theory"};
  r.table.columns.insert(r.table.columns.end(), kSimColumns.begin(), kSimColumns.end());
  std::uint64_t point = 0;
  for (double delta : {0.05, 0.1, 0.2, 0.5}) {
    for (int n = 10; n <= 100; n += 10) {
      ThermodSimSpec spec;
      spec.cfg = {10.0, delta, n};
      spec.th = uniform_chi(spec.cfg);
      std::vector<std::string> row{fmt_real(delta), std::to_string(n), fmt_real(spec.th.chi),
                                   fmt_bep(thermod_bep_uniform(spec.cfg))};
      for (auto mode : {SampleMode::gaussian_fit, SampleMode::raw_samples}) {
        spec.mode = mode;
        append(row, cells(simulate_thermod(spec, stop, point_seed(opts.seed, point++), par)));
      }
      r.table.add_row(std::move(row));
    }
  }
  r.plot = make_plot("TherMod, alpha = 10, uniform threshold",
            "N",
            {"bep_theory"},
            {"ber_gaussian_fit", "ber_raw_samples"},
            "delta");
  return r;
}

Result fig9(const FigureOptions& opts) {
  ExperimentConfig cfg;
  cfg.scheme = Scheme::thermod;
  cfg.alpha = 10.0;
  cfg.delta = 0.1;
  cfg.n_samples = {50, 100, 200, 400};
  cfg.sweep = SweepKind::chi;
  cfg.sweep_axis = {1.101, 1.999, 0.001};
  Result r = run_experiment(Command::thermod_sweep, cfg, opts.workers);
  Table t;
  stamp(t, FigureId::fig9, opts, 0);
  t.metadata.emplace_back("alpha", "10");
  t.metadata.emplace_back("delta", "0.1");
  t.columns = std::move(r.table.columns);
  t.rows = std::move(r.table.rows);
  r.table = std::move(t);
  return r;
}

Result fig10(const FigureOptions& opts) {
  const int n = 100;
  const GridAxis alpha{1.01, 40.0, 0.01};
  Result r;
  stamp(r.table, FigureId::fig10, opts, 0);
  r.table.metadata.emplace_back("N", std::to_string(n));
  r.table.columns = {"alpha", "bep_delta0.1", "bep_delta0.2"};
  const auto a = sweep_alpha(0.1, n, alpha);
  const auto b = sweep_alpha(0.2, n, alpha);
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    r.table.add_row({fmt_real(a.axes[0][i]), fmt_bep(a.values[i]), fmt_bep(b.values[i])});
  }
  r.plot = make_plot("TherMod BEP versus alpha, N = 100", "alpha", {"bep_delta0.1", "bep_delta0.2"}, {});
  return r;
}

}  // namespace

std::string to_string(FigureId id) { return kFigureNames[static_cast<int>(id)]; }

FigureId parse_figure(const std::string& s) {
  for (int i = 0; i < 6; ++i) {
    if (s == kFigureNames[i]) return static_cast<FigureId>(i);
  }
  throw ConfigError("unknown figure '" + s + "' (expected fig5 ... fig10)");
}

std::string to_string(Scale s) { return s == Scale::desk ? "desk" : "full"; }

Scale parse_scale(const std::string& s) {
  if (s == "desk") return Scale::desk;
  if (s == "full") return Scale::full;
  throw ConfigError("unknown scale '" + s + "' (expected desk or full)");
}

std::uint64_t max_bits_for(Scale s) { return s == Scale::desk ? 1'000'000 : 100'000'000; }

Result reproduce_figure(FigureId id, const FigureOptions& opts) {
  switch (id) {
    case FigureId::fig5:
      return fig5(opts);
    case FigureId::fig6:
      return fig6(opts);
    case FigureId::fig7:
      return fig7(opts);
    case FigureId::fig8:
      return fig8(opts);
    case FigureId::fig9:
      return fig9(opts);
    case FigureId::fig10:
      return fig10(opts);
  }
  throw ConfigError("unknown figure");
}

}  // namespace thercom::cli
