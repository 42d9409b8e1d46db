// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "entrovol/entropy.hpp"
#include "entrovol/probability.hpp"

namespace {

entrovol::ProbDist random_dist(std::size_t n) {
  std::mt19937_64 engine(42);
  std::vector<double> w(n);
  for (double& x : w) x = double(engine() >> 11) * 0x1.0p-53 + 1e-3;
  return entrovol::ProbDist::normalized(std::move(w));
}

std::vector<double> random_values(std::size_t n) {
  std::mt19937_64 engine(43);
  std::vector<double> v(n);
  for (double& x : v) x = double(engine() >> 11) * 0x1.0p-53;
  return v;
}

}  // namespace

static void BM_ShannonEntropy(benchmark::State& state) {
  const auto d = random_dist(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entrovol::shannon_entropy(d));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ShannonEntropy)->Range(8, 8 << 10);

static void BM_TsallisEntropy(benchmark::State& state) {
  const auto d = random_dist(std::size_t(state.range(0)));
  const entrovol::EntropicIndex q(1.45);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entrovol::tsallis_entropy(d, q));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TsallisEntropy)->Range(8, 8 << 10);

static void BM_JacksonEntropy(benchmark::State& state) {
  const auto d = random_dist(std::size_t(state.range(0)));
  const entrovol::EntropicIndex q(1.45);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entrovol::jackson_entropy(d, q));
  }
}
BENCHMARK(BM_JacksonEntropy)->Range(8, 8 << 10);

static void BM_HistogramProb(benchmark::State& state) {
  const auto values = random_values(std::size_t(state.range(0)));
  const entrovol::HistogramSpec spec(64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entrovol::histogram_prob(values, spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HistogramProb)->Range(256, 256 << 8);

static void BM_ProductDist(benchmark::State& state) {
  const auto a = random_dist(std::size_t(state.range(0)));
  const auto b = random_dist(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entrovol::product_dist(a, b));
  }
}
BENCHMARK(BM_ProductDist)->Range(4, 128);

BENCHMARK_MAIN();
