#include <benchmark/benchmark.h>

#include "gpw/complexity.hpp"
#include "gpw/counterexample.hpp"

using namespace gpw;

namespace {

void BM_FactorIndexBuild(benchmark::State& state) {
  const Word prefix = generate_word_prefix(counterexample::sequence(),
                                           static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FactorIndex(prefix, 64));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_FactorIndexBuild)->Range(1 << 12, 1 << 18);

void BM_FactorCounts(benchmark::State& state) {
  const Word prefix = generate_word_prefix(counterexample::sequence(), 1 << 16);
  const std::size_t n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_counts(prefix, n_max));
  }
}
BENCHMARK(BM_FactorCounts)->Arg(64)->Arg(256)->Arg(512);

void BM_AnalyzeInfinite(benchmark::State& state) {
  const BidirectiveSequence seq = counterexample::sequence();
  const std::size_t n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_infinite(seq, n_max));
  }
}
BENCHMARK(BM_AnalyzeInfinite)->Arg(32)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
