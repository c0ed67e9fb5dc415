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

#include "thercom/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "thercom/error.hpp"
#include "thercom/thermod.hpp"

namespace thercom::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
  throw ConfigError("invalid value '" + value + "' for key '" + key + "' (expected " + expected +
                    ")");
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) bad_value(key, v, "a number");
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec == std::errc() && p == v.data() + v.size()) return out;
  // Allow 1e6-style counts when they are exact integers.
  const double d = to_double(key, v);
  if (d < 0 || d > 1.8e19 || d != static_cast<double>(static_cast<std::uint64_t>(d))) {
    bad_value(key, v, "a nonnegative integer");
  }
  return static_cast<std::uint64_t>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad_value(key, v, "true or false");
}

template <class F>
auto rethrow_as_key(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ConfigError& e) {
    throw ConfigError("key '" + key + "': " + e.what());
  }
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"scheme",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         if (v == "kljn") {
           c.scheme = Scheme::kljn;
         } else if (v == "thermod") {
           c.scheme = Scheme::thermod;
         } else {
           bad_value(k, v, "kljn or thermod");
         }
       }},
      {"detector",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         c.detector = rethrow_as_key(k, [&] { return parse_detector(v); });
       }},
      {"alpha", [](ExperimentConfig& c, const std::string& k,
                   const std::string& v) { c.alpha = to_double(k, v); }},
      {"delta", [](ExperimentConfig& c, const std::string& k,
                   const std::string& v) { c.delta = to_double(k, v); }},
      {"n_samples",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         c.n_samples = rethrow_as_key(k, [&] { return parse_n_list(v); });
       }},
      {"beta", [](ExperimentConfig& c, const std::string& k,
                  const std::string& v) { c.vth.beta = to_double(k, v); }},
      {"kappa", [](ExperimentConfig& c, const std::string& k,
                   const std::string& v) { c.vth.kappa = to_double(k, v); }},
      {"eta", [](ExperimentConfig& c, const std::string& k,
                 const std::string& v) { c.cth.eta = to_double(k, v); }},
      {"xi", [](ExperimentConfig& c, const std::string& k,
                const std::string& v) { c.cth.xi = to_double(k, v); }},
      {"thresholds",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         if (v == "given") {
           c.optimize_thresholds = false;
         } else if (v == "optimize") {
           c.optimize_thresholds = true;
         } else {
           bad_value(k, v, "given or optimize");
         }
       }},
      {"optimize_step", [](ExperimentConfig& c, const std::string& k,
                           const std::string& v) { c.optimize_step = to_double(k, v); }},
      {"search",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         if (v == "automatic") {
           c.search = SearchMethod::automatic;
         } else if (v == "exhaustive") {
           c.search = SearchMethod::exhaustive;
         } else if (v == "coarse-to-fine") {
           c.search = SearchMethod::coarse_to_fine;
         } else {
           bad_value(k, v, "automatic, exhaustive or coarse-to-fine");
         }
       }},
      {"reduce_ndii", [](ExperimentConfig& c, const std::string& k,
                         const std::string& v) { c.reduce_ndii = to_bool(k, v); }},
      {"ndi_discard", [](ExperimentConfig& c, const std::string& k,
                         const std::string& v) { c.ndi_discard = to_bool(k, v); }},
      {"chi",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         if (v == "uniform") {
           c.chi.reset();
         } else {
           c.chi = to_double(k, v);
         }
       }},
      {"sweep",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         if (v == "chi") {
           c.sweep = SweepKind::chi;
         } else if (v == "alpha") {
           c.sweep = SweepKind::alpha;
         } else {
           bad_value(k, v, "chi or alpha");
         }
       }},
      {"sweep_lower", [](ExperimentConfig& c, const std::string& k,
                         const std::string& v) { c.sweep_axis.lower = to_double(k, v); }},
      {"sweep_upper", [](ExperimentConfig& c, const std::string& k,
                         const std::string& v) { c.sweep_axis.upper = to_double(k, v); }},
      {"sweep_step", [](ExperimentConfig& c, const std::string& k,
                        const std::string& v) { c.sweep_axis.step = to_double(k, v); }},
      {"mode",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         c.mode = rethrow_as_key(k, [&] { return parse_sample_mode(v); });
       }},
      {"max_bits", [](ExperimentConfig& c, const std::string& k,
                      const std::string& v) { c.stop.max_bits = to_u64(k, v); }},
      {"min_errors", [](ExperimentConfig& c, const std::string& k,
                        const std::string& v) { c.stop.min_errors = to_u64(k, v); }},
      {"seed", [](ExperimentConfig& c, const std::string& k,
                  const std::string& v) { c.seed = to_u64(k, v); }},
      {"chunk_size", [](ExperimentConfig& c, const std::string& k,
                        const std::string& v) { c.chunk_size = to_u64(k, v); }},
      {"out", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.out = v; }},
      {"format",
       [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         if (v == "csv") {
           c.format = OutputFormat::csv;
         } else if (v == "svg") {
           c.format = OutputFormat::svg;
         } else {
           bad_value(k, v, "csv or svg");
         }
       }},
  };
  return table;
}

// Prefixes a domain error with the config key it came from, unless the
// message already names one.
template <class F>
void checked(const char* key, F&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    if (msg.find(key) != std::string::npos) throw;
    throw DomainError("key '" + std::string(key) + "': " + msg);
  }
}

}  // namespace

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

std::string to_string(Scheme s) { return s == Scheme::kljn ? "kljn" : "thermod"; }
std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "svg"; }
std::string to_string(SweepKind k) { return k == SweepKind::chi ? "chi" : "alpha"; }
std::string to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::automatic:
      return "automatic";
    case SearchMethod::exhaustive:
      return "exhaustive";
    case SearchMethod::coarse_to_fine:
      return "coarse-to-fine";
  }
  return "automatic";
}

std::vector<int> parse_n_list(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    int v = 0;
    const std::string t = trim(s);
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
      throw ConfigError("'" + text + "' is not an integer list or range");
    }
    return v;
  };
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw ConfigError("range '" + text + "' must be start:stop:step");
    const int start = to_int(parts[0]);
    const int stop = to_int(parts[1]);
    const int step = to_int(parts[2]);
    if (step <= 0 || stop < start) throw ConfigError("range '" + text + "' is empty");
    for (int n = start; n <= stop; n += step) out.push_back(n);
  } else {
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(to_int(part));
  }
  if (out.empty()) throw ConfigError("empty sample-count list");
  return out;
}

std::string format_n_list(const std::vector<int>& ns) {
  std::string s;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ns[i]);
  }
  return s;
}

ExperimentConfig apply_config(const std::vector<std::pair<std::string, std::string>>& kv,
                              ExperimentConfig base) {
  for (const auto& [key, value] : kv) {
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(base, key, value);
  }
  return base;
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
  std::istringstream in(text);
  std::vector<std::pair<std::string, std::string>> kv;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (!setters().count(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown config key '" + key + "'");
    }
    kv.emplace_back(key, value);
  }
  return apply_config(kv, std::move(base));
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<std::pair<std::string, std::string>> resolved_config(const ExperimentConfig& c) {
  return {
      {"scheme", to_string(c.scheme)},
      {"detector", std::string(thercom::to_string(c.detector))},
      {"alpha", fmt_double(c.alpha)},
      {"delta", fmt_double(c.delta)},
      {"n_samples", format_n_list(c.n_samples)},
      {"beta", fmt_double(c.vth.beta)},
      {"kappa", fmt_double(c.vth.kappa)},
      {"eta", fmt_double(c.cth.eta)},
      {"xi", fmt_double(c.cth.xi)},
      {"thresholds", c.optimize_thresholds ? "optimize" : "given"},
      {"optimize_step", fmt_double(c.optimize_step)},
      {"search", to_string(c.search)},
      {"reduce_ndii", c.reduce_ndii ? "true" : "false"},
      {"ndi_discard", c.ndi_discard ? "true" : "false"},
      {"chi", c.chi ? fmt_double(*c.chi) : "uniform"},
      {"sweep", to_string(c.sweep)},
      {"sweep_lower", fmt_double(c.sweep_axis.lower)},
      {"sweep_upper", fmt_double(c.sweep_axis.upper)},
      {"sweep_step", fmt_double(c.sweep_axis.step)},
      {"mode", std::string(thercom::to_string(c.mode))},
      {"max_bits", std::to_string(c.stop.max_bits)},
      {"min_errors", std::to_string(c.stop.min_errors)},
      {"seed", std::to_string(c.seed)},
      {"chunk_size", std::to_string(c.chunk_size)},
      {"out", c.out},
      {"format", to_string(c.format)},
  };
}

void ExperimentConfig::validate() const {
  if (n_samples.empty()) throw ConfigError("key 'n_samples': empty list");
  for (int n : n_samples) {
    if (n < 2) throw DomainError("key 'n_samples': every N must be >= 2 (got " +
                                 std::to_string(n) + ")");
  }
  if (stop.max_bits < 1) throw ConfigError("key 'max_bits' must be >= 1");
  if (chunk_size < 1) throw ConfigError("key 'chunk_size' must be >= 1");

  if (scheme == Scheme::kljn) {
    KljnConfig{alpha, n_samples.front()}.validate();
    if (optimize_thresholds) {
      checked("optimize_step", [&] { default_kljn_grid({alpha, 100}, detector, optimize_step); });
      return;
    }
    switch (detector) {
      case DetectorKind::classical_voltage:
        vth.validate(alpha);
        break;
      case DetectorKind::classical_current:
        cth.validate(alpha);
        break;
      case DetectorKind::new_detector_1:
        vth.validate(alpha);
        cth.validate(alpha);
        break;
      case DetectorKind::new_detector_2: {
        KljnSimSpec s;
        s.cfg = {alpha, n_samples.front()};
        s.detector = detector;
        s.vth = vth;
        s.cth = cth;
        s.validate();
        break;
      }
    }
    return;
  }

  const ThermodConfig tc{alpha, delta, n_samples.front()};
  tc.validate();
  if (chi) ThermodThreshold{*chi}.validate(tc);
  checked("sweep_lower", [&] { sweep_axis.validate("sweep"); });
}

}  // namespace thercom::cli
