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

#include "thercom/cli/app.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

#include "thercom/cli/experiment.hpp"
#include "thercom/error.hpp"

namespace thercom::cli {

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  int workers = 0;
  std::string out;
  std::string format;
  std::string mode;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* sub, CommonFlags& f, bool with_mode) {
  sub->add_option("--config", f.config_path, "Experiment config file (key = value lines)");
  sub->add_option("--seed", f.seed, "Master RNG seed");
  sub->add_option("--workers", f.workers, "Cap on parallel workers (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--out", f.out, "Output path (default: CSV on standard output)");
  sub->add_option("--format", f.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  if (with_mode) {
    sub->add_option("--mode", f.mode, "gaussian-fit or raw-samples")
        ->check(CLI::IsMember({"gaussian-fit", "raw-samples"}));
  }
  sub->add_option("--set", f.overrides, "Config override, key=value (repeatable)");
}

ExperimentConfig build_config(const CommonFlags& f) {
  ExperimentConfig cfg = f.config_path.empty() ? ExperimentConfig{} : load_config_file(f.config_path);
  std::vector<std::pair<std::string, std::string>> kv;
  if (f.seed) kv.emplace_back("seed", std::to_string(*f.seed));
  if (!f.out.empty()) kv.emplace_back("out", f.out);
  if (!f.format.empty()) kv.emplace_back("format", f.format);
  if (!f.mode.empty()) kv.emplace_back("mode", f.mode);
  for (const auto& o : f.overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + o + "'");
    kv.emplace_back(o.substr(0, eq), o.substr(eq + 1));
  }
  return apply_config(kv, std::move(cfg));
}

std::string csv_text(const Table& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

// CSV is always produced; with svg format the chart goes to `out` and the
// CSV next to it.
void emit(const Result& r, const std::string& out, OutputFormat format, std::ostream& stdout_) {
  if (format == OutputFormat::csv) {
    if (out.empty()) {
      stdout_ << csv_text(r.table);
    } else {
      write_text_file(out, csv_text(r.table));
    }
    return;
  }
  if (out.empty()) throw ConfigError("--format svg needs --out <path>");
  write_text_file(out, render_svg(r.make_chart()));
  write_text_file(std::filesystem::path(out).replace_extension(".csv").string(), csv_text(r.table));
}

int rerun(const std::string& csv_path, const CommonFlags& f, std::ostream& out) {
  std::istringstream in(read_text_file(csv_path));
  const Table t = read_csv(in);
  const std::string figure = t.meta("figure");
  if (!figure.empty()) {
    FigureOptions opts;
    opts.seed = std::stoull(t.meta("seed"));
    opts.scale = parse_scale(t.meta("scale"));
    opts.workers = f.workers;
    emit(reproduce_figure(parse_figure(figure), opts), f.out,
         f.format == "svg" ? OutputFormat::svg : OutputFormat::csv, out);
    return kExitOk;
  }
  const std::string command = t.meta("command");
  if (command.empty()) throw ConfigError("'" + csv_path + "' has no command or figure metadata");
  std::vector<std::pair<std::string, std::string>> kv;
  for (const auto& [k, v] : t.metadata) {
    if (k != "tool" && k != "command") kv.emplace_back(k, v);
  }
  ExperimentConfig cfg = apply_config(kv);
  cfg.out = f.out;
  if (!f.format.empty()) cfg.format = f.format == "svg" ? OutputFormat::svg : OutputFormat::csv;
  emit(run_experiment(parse_command(command), cfg, f.workers), cfg.out, cfg.format, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal-noise communication: KLJN and TherMod error analysis"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  CommonFlags flags;
  std::vector<std::pair<Command, CLI::App*>> experiments;
  for (auto cmd : {Command::kljn_theory, Command::kljn_sim, Command::kljn_optimize,
                   Command::thermod_theory, Command::thermod_sim, Command::thermod_sweep}) {
    const bool sim = cmd == Command::kljn_sim || cmd == Command::thermod_sim;
    auto* sub = app.add_subcommand(to_string(cmd), "Run the " + to_string(cmd) + " experiment");
    add_common(sub, flags, sim);
    experiments.emplace_back(cmd, sub);
  }

  std::string figure_id;
  std::string scale = "desk";
  auto* fig = app.add_subcommand("figure", "Reproduce one figure (fig5 ... fig10)");
  fig->add_option("id", figure_id, "fig5, fig6, fig7, fig8, fig9 or fig10")->required();
  fig->add_option("--scale", scale, "desk (10^6 bits per point) or full (10^8)")
      ->check(CLI::IsMember({"desk", "full"}));
  fig->add_option("--seed", flags.seed, "Master RNG seed");
  fig->add_option("--workers", flags.workers, "Cap on parallel workers")
      ->check(CLI::NonNegativeNumber);
  fig->add_option("--out", flags.out, "Output path");
  fig->add_option("--format", flags.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

  std::string csv_path;
  auto* again = app.add_subcommand("rerun", "Repeat the run recorded in a CSV's metadata");
  again->add_option("csv", csv_path, "CSV written by this tool")->required();
  again->add_option("--workers", flags.workers, "Cap on parallel workers")
      ->check(CLI::NonNegativeNumber);
  again->add_option("--out", flags.out, "Output path");
  again->add_option("--format", flags.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (const auto& [cmd, sub] : experiments) {
      if (!sub->parsed()) continue;
      const ExperimentConfig cfg = build_config(flags);
      emit(run_experiment(cmd, cfg, flags.workers), cfg.out, cfg.format, out);
      return kExitOk;
    }
    if (fig->parsed()) {
      FigureOptions opts;
      opts.seed = flags.seed.value_or(1);
      opts.scale = parse_scale(scale);
      opts.workers = flags.workers;
      const auto id = parse_figure(figure_id);
      const std::string path =
          flags.out.empty() && flags.format == "svg" ? to_string(id) + ".svg" : flags.out;
      emit(reproduce_figure(id, opts), path,
           flags.format == "svg" ? OutputFormat::svg : OutputFormat::csv, out);
      return kExitOk;
    }
    if (again->parsed()) return rerun(csv_path, flags, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace thercom::cli
