// Copyright 2026 The infoblotto Authors
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

// Serial reference kernels against their OpenMP counterparts. The second
// benchmark argument selects the executor: 0 serial, 1 OpenMP.

#include <benchmark/benchmark.h>

#include "infoblotto/blotto2.h"
#include "infoblotto/lotto3.h"
#include "infoblotto/monte_carlo.h"
#include "infoblotto/oracle.h"
#include "infoblotto/sweep.h"

namespace infoblotto {
namespace {

Exec ExecArg(const benchmark::State& state) {
  return state.range(1) == 0 ? Exec::kSerial : Exec::kOpenMP;
}

void BM_MonteCarloLotto(benchmark::State& state) {
  const lotto3::LottoParams p(0.6, 0.3, 0.8);
  const StrategyProfile profile = lotto3::BuildEquilibrium(p);
  const ValuationMatrix v = p.Valuations();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MonteCarloValue(profile, v, p.prior(), state.range(0), 7, ExecArg(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloLotto)->ArgsProduct({{1 << 20}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BlottoDeviationScan(benchmark::State& state) {
  const auto p = blotto2::BlottoParams::FromRatio(1, 0.3, 0.96);
  const StrategyProfile profile = blotto2::BuildEquilibrium(p).profile;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::BlottoDeviationGap(profile, p, static_cast<int>(state.range(0)), ExecArg(state)));
  }
}
BENCHMARK(BM_BlottoDeviationScan)->ArgsProduct({{10000, 100000}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_LottoSupportScan(benchmark::State& state) {
  const lotto3::LottoParams p(0.6, 0.3, 0.8);
  const StrategyProfile profile = lotto3::BuildEquilibrium(p);
  const lotto3::Multipliers m = lotto3::ComputeMultipliers(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::LottoSupportOptimality(
        profile, p, m, static_cast<int>(state.range(0)), ExecArg(state)));
  }
}
BENCHMARK(BM_LottoSupportScan)->ArgsProduct({{10000, 100000}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_LottoSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sweep::SweepSpec spec{sweep::SweepGame::kLotto3,
                              {{"alpha", 0.05, 0.95, n}, {"gamma", 0.05, 1.0, n}},
                              {},
                              {"pi_I", "voi", "max_cost", "alpha_zero"}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep::RunSweep(spec, ExecArg(state)));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_LottoSweep)->ArgsProduct({{200}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace infoblotto

BENCHMARK_MAIN();
