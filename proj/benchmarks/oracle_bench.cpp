#include <benchmark/benchmark.h>

#include "indel/oracle.hpp"

namespace {

using namespace indel;

void BM_InsertionBall(benchmark::State& state) {
  const Word x = Word::from_index(0x5a5, 2, 12);
  const long t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::insertion_ball(x, t));
}
BENCHMARK(BM_InsertionBall)->DenseRange(1, 3);

void BM_IndelBall(benchmark::State& state) {
  const Word x = Word::from_index(0x5a5, 2, 12);
  const long t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::indel_ball(x, t, t));
}
BENCHMARK(BM_IndelBall)->DenseRange(1, 3);

void BM_PairHistogram(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::pair_histogram(n, 2));
}
BENCHMARK(BM_PairHistogram)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace
