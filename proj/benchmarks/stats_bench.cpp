#include <benchmark/benchmark.h>

#include <random>

#include "citemetrics/stats.hpp"

namespace {

std::vector<double> heavy_column(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::lognormal_distribution<double> d(1.0, 1.2);
  std::vector<double> v(n);
  for (auto& x : v) x = std::floor(d(rng));
  return v;
}

void BM_Spearman(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = heavy_column(n, 1);
  const auto y = heavy_column(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(citemetrics::spearman(x, y));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Spearman)->RangeMultiplier(10)->Range(100, 100000);

void BM_CorrelationMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = "a" + std::to_string(i);
  std::vector<citemetrics::IndicatorColumn> columns;
  for (int j = 0; j < 8; ++j) {
    columns.push_back({"x" + std::to_string(j), heavy_column(n, 10 + j)});
  }
  const citemetrics::IndicatorMatrix m(ids, columns);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        citemetrics::correlation_matrix(m, citemetrics::CorrelationMethod::Spearman));
  }
}
BENCHMARK(BM_CorrelationMatrix)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
