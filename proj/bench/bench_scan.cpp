// Copyright 2026 The nmwitness Authors
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

// Serial reference against the OpenMP scan on the dephasing Choi grid.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <vector>

#include "nmw/models.hpp"
#include "nmw/quantifier.hpp"
#include "nmw/scan.hpp"

namespace {

std::vector<double> times(std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = 2.3 * static_cast<double>(k) / static_cast<double>(n);
    return out;
}

void BM_ChoiScanSerial(benchmark::State& state) {
    const auto gen = nmw::dephasing_generator({1.0, 2.0});
    const auto grid = times(static_cast<std::size_t>(state.range(0)));
    const auto obs = nmw::ObservablePair::choi_default();
    for (auto _ : state) benchmark::DoNotOptimize(nmw::choi_scan_serial(gen, grid, obs, {}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ChoiScanParallel(benchmark::State& state) {
    const auto gen = nmw::dephasing_generator({1.0, 2.0});
    const auto grid = times(static_cast<std::size_t>(state.range(0)));
    const auto obs = nmw::ObservablePair::choi_default();
    for (auto _ : state) benchmark::DoNotOptimize(nmw::choi_scan_parallel(gen, grid, obs, {}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_UnitalScan(benchmark::State& state) {
    const auto gen = nmw::spinbath_generator(nmw::spinbath_demo(nmw::SpinBathDemo{}));
    const nmw::BlochDirections dirs({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    const auto exec = state.range(0) == 0 ? nmw::Execution::Serial : nmw::Execution::Parallel;
    for (auto _ : state)
        benchmark::DoNotOptimize(nmw::unital_scan(gen, nmw::DensityMatrix::plus_state(), dirs, 5.0, 1e-3, exec));
}

}  // namespace

BENCHMARK(BM_ChoiScanSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChoiScanParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_UnitalScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
