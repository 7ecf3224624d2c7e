#include <benchmark/benchmark.h>

#include "citemetrics/indicators.hpp"
#include "citemetrics/simulate.hpp"

namespace {

citemetrics::CitationProfile author_with(std::int64_t papers) {
  citemetrics::GeneratorConfig config;
  config.n_authors = 1;
  config.papers = citemetrics::ConstantLaw{papers};
  return citemetrics::CorpusGenerator(config).author(0);
}

void BM_ComputeAll(benchmark::State& state) {
  const auto profile = author_with(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(citemetrics::compute_all(profile));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComputeAll)->RangeMultiplier(8)->Range(8, 4096);

void BM_GenerateAuthors(benchmark::State& state) {
  citemetrics::GeneratorConfig config;
  config.n_authors = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(citemetrics::generate_corpus(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateAuthors)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
