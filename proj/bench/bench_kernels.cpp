#include "kbh/kernels.hpp"
#include "kbh/lie.hpp"
#include "kbh/random.hpp"

#include <benchmark/benchmark.h>

using namespace kbh;

namespace {

const std::vector<Letter>& alphabet() {
  static const std::vector<Letter> a{Letter::of("u"), Letter::of("v"), Letter::of("w")};
  return a;
}

// Every word of length 1..D over the alphabet, coefficient 1/(length + 1).
AssocSeries dense(int D) {
  AssocSeries a(D);
  std::vector<Word> layer{Word()};
  for (int d = 1; d <= D; ++d) {
    std::vector<Word> next;
    for (auto& w : layer)
      for (Letter l : alphabet()) next.push_back(w + Word(1, l.id()));
    for (auto& w : next) a.add_term(w, Q(1, d + 1));
    layer = std::move(next);
  }
  return a;
}

LetterImages<Q> images(int D) {
  random::Rng rng(5);
  LetterImages<Q> m;
  for (Letter l : alphabet()) m.emplace(l, iota(random::random_lie(rng, alphabet(), D, 3)));
  return m;
}

void BM_mul(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  auto a = dense(D), b = dense(D);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul(a, b));
}

void BM_mul_reference(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  auto a = dense(D), b = dense(D);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_reference(a, b));
}

void BM_substitute(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  auto a = dense(D);
  auto m = images(D);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::substitute(a, m));
}

void BM_substitute_reference(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  auto a = dense(D);
  auto m = images(D);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::substitute_reference(a, m));
}

}  // namespace

BENCHMARK(BM_mul)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_reference)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_substitute)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_substitute_reference)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
