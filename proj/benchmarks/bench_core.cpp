#include <benchmark/benchmark.h>

#include "dualcat/dpr.hpp"
#include "dualcat/homs.hpp"
#include "dualcat/matching.hpp"

using namespace dualcat;

namespace {

// Width-n snake: the two halves compose to the identity on n plain strands.
DiagMorphism snake_left(int n) {
  return tensor(identity(MarkedWord(n, {})), unit(n));
}

DiagMorphism snake_right(int n) {
  return tensor(counit(n), identity(MarkedWord(n, {})));
}

// k unit blocks interleaved with plain strands, so decompose has to find
// 2k+1 alternating factors.
DiagMorphism wide_tensor(int k) {
  DiagMorphism f = identity(MarkedWord("-"));
  for (int i = 0; i < k; ++i)
    f = tensor(f, tensor(unit(1), identity(MarkedWord("-"))));
  return f;
}

Word zigzag_word(int k) {
  Word w;
  for (int i = 0; i < k; ++i) {
    w.push_back("-");
    w.push_back("+");
  }
  return w;
}

void BM_compose_snake(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  DiagMorphism f = snake_left(n), g = snake_right(n);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}

void BM_glue_compose_snake(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Matching f = to_matching(snake_left(n)), g = to_matching(snake_right(n));
  for (auto _ : state) benchmark::DoNotOptimize(glue_compose(f, g));
}

void BM_enumerate_homs_zigzag(benchmark::State& state) {
  Signature sig = Signature::dpr();
  Word w = zigzag_word(static_cast<int>(state.range(0)));
  long long count = 0;
  for (auto _ : state) {
    HomSet homs = enumerate_homs(sig, w, w, 64);
    count = static_cast<long long>(homs.morphisms.size());
    benchmark::DoNotOptimize(homs);
  }
  state.counters["homs"] = static_cast<double>(count);
}

void BM_decompose_wide(benchmark::State& state) {
  DiagMorphism f = wide_tensor(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f));
}

BENCHMARK(BM_compose_snake)->RangeMultiplier(4)->Range(4, 256);
BENCHMARK(BM_glue_compose_snake)->RangeMultiplier(4)->Range(4, 256);
BENCHMARK(BM_enumerate_homs_zigzag)->DenseRange(1, 5);
BENCHMARK(BM_decompose_wide)->RangeMultiplier(4)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
