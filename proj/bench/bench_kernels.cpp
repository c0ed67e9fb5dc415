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

// Serial reference kernels versus their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "thercom/optimize.hpp"
#include "thercom/reference.hpp"
#include "thercom/simulate.hpp"

namespace {

using namespace thercom;

KljnSimSpec voltage_spec() {
  KljnSimSpec spec;
  spec.cfg = {10.0, 100};
  spec.vth = VoltageThresholds{4.0 / 3.0, 5.0};
  return spec;
}

constexpr StopRule kBits{1u << 22, 0};

void BM_KljnSimSerial(benchmark::State& state) {
  const auto spec = voltage_spec();
  for (auto _ : state) benchmark::DoNotOptimize(reference::simulate_kljn(spec, kBits, 1));
  state.SetItemsProcessed(state.iterations() * kBits.max_bits);
}

void BM_KljnSimParallel(benchmark::State& state) {
  const auto spec = voltage_spec();
  const ParallelOptions par{1u << 16, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(simulate_kljn(spec, kBits, 1, par));
  state.SetItemsProcessed(state.iterations() * kBits.max_bits);
}

void BM_ThermodSimSerial(benchmark::State& state) {
  const ThermodSimSpec spec{{10.0, 0.1, 100}, {1.4194}, SampleMode::raw_samples};
  for (auto _ : state) benchmark::DoNotOptimize(reference::simulate_thermod(spec, {1u << 18, 0}, 1));
}

void BM_ThermodSimParallel(benchmark::State& state) {
  const ThermodSimSpec spec{{10.0, 0.1, 100}, {1.4194}, SampleMode::raw_samples};
  const ParallelOptions par{1u << 16, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(simulate_thermod(spec, {1u << 18, 0}, 1, par));
}

const GridAxis kBeta{1.01, 1.81, 0.002};
const GridAxis kKappa{1.85, 9.95, 0.01};

void BM_SurfaceSerial(benchmark::State& state) {
  const KljnConfig cfg{10.0, 100};
  const std::vector<std::vector<double>> axes{kBeta.points(), kKappa.points()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::brute_force_min(axes, [&](const std::vector<double>& x) {
      return bep_voltage(cfg, {x[0], x[1]});
    }));
  }
}

void BM_SurfaceParallel(benchmark::State& state) {
  const KljnConfig cfg{10.0, 100};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sweep_beta_kappa_surface(cfg, kBeta, kKappa, static_cast<int>(state.range(0))));
  }
}

void worker_counts(benchmark::internal::Benchmark* b) {
  for (int w = 1; w <= omp_get_max_threads(); w *= 2) b->Arg(w);
}

}  // namespace

BENCHMARK(BM_KljnSimSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KljnSimParallel)->Apply(worker_counts)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThermodSimSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThermodSimParallel)->Apply(worker_counts)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceParallel)->Apply(worker_counts)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
