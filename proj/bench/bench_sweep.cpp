// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference sweep against the OpenMP sweep on the same configuration.

#include <benchmark/benchmark.h>

#include "mimobc/harness.hpp"

namespace
{

mimobc::ExperimentConfig bench_config()
{
  mimobc::ExperimentConfig c;
  c.users = {20, 50, 100};
  c.snr_db = {15.0};
  c.trials = 200;
  c.schemes = {mimobc::SchemeKind::zfdpc_sus, mimobc::SchemeKind::zfbf_sus,
               mimobc::SchemeKind::upper_bound_c};
  return c;
}

void BM_SweepSerial(benchmark::State &state)
{
  const auto config = bench_config();
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(mimobc::sweep_serial(config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(config.trials));
}

void BM_SweepParallel(benchmark::State &state)
{
  const auto config = bench_config();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(mimobc::sweep(config, workers));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(config.trials));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
