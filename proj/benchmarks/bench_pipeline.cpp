// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "entrovol/dispersion.hpp"
#include "entrovol/returns_stats.hpp"
#include "entrovol/synthetic.hpp"

namespace {

entrovol::PriceSeries prices_of_size(std::size_t n) {
  entrovol::SyntheticSpec spec;
  spec.observations = n;
  spec.seed = 7;
  return entrovol::synthetic_price_series(spec);
}

}  // namespace

static void BM_LogReturns(benchmark::State& state) {
  const auto prices = prices_of_size(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entrovol::log_returns(prices));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogReturns)->Range(256, 256 << 8);

static void BM_SummaryStats(benchmark::State& state) {
  const auto returns = entrovol::log_returns(prices_of_size(std::size_t(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entrovol::summary_stats(returns));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SummaryStats)->Range(256, 256 << 8);

static void BM_StdDev(benchmark::State& state) {
  const auto returns = entrovol::log_returns(prices_of_size(std::size_t(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entrovol::std_dev(returns));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StdDev)->Range(256, 256 << 8);

static void BM_SyntheticSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(prices_of_size(std::size_t(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SyntheticSeries)->Range(256, 256 << 6);
