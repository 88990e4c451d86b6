#include <benchmark/benchmark.h>

#include "gpw/closure.hpp"
#include "gpw/counterexample.hpp"
#include "gpw/normalize.hpp"
#include "gpw/periodicity.hpp"

using namespace gpw;

namespace {

void BM_WordPrefixGeneration(benchmark::State& state) {
  const BidirectiveSequence seq = counterexample::sequence();
  const std::size_t length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_word_prefix(seq, length));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(length));
}
BENCHMARK(BM_WordPrefixGeneration)->Range(1 << 10, 1 << 20);

void BM_ClosureStep(benchmark::State& state) {
  // One border-scan closure step on a prefix of the given size.
  Word prefix = generate_word_prefix(counterexample::sequence(),
                                     static_cast<std::size_t>(state.range(0)));
  prefix.push_back(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pseudopalindromic_closure(prefix));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_ClosureStep)->Range(1 << 10, 1 << 18);

void BM_Normalize(benchmark::State& state) {
  const BidirectiveSequence seq = counterexample::sequence();
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(seq));
  }
}
BENCHMARK(BM_Normalize);

void BM_PeriodicityDecision(benchmark::State& state) {
  const BidirectiveSequence seq = parse_sequence("(011)^w;(EER)^w");
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_periodic(seq));
  }
}
BENCHMARK(BM_PeriodicityDecision);

}  // namespace
