#include <benchmark/benchmark.h>

#include <random>

#include "arfe/arfe.hpp"

namespace {

using namespace arfe;

BitMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1U);
  }
  return m;
}

QuadraticForm arf_one(std::size_t pairs) {
  BitVector values(2 * pairs);
  values.set(0);
  values.set(1);
  return QuadraticForm::standard(pairs, values);
}

void BM_Rank(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(4)->Range(16, 1024);

void BM_Multiply(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, rng);
  const auto b = random_matrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(16, 1024);

void BM_Arf(benchmark::State& state) {
  const auto f = arf_one(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(arf(f));
}
BENCHMARK(BM_Arf)->RangeMultiplier(4)->Range(4, 256);

void BM_DemocraticArf(benchmark::State& state) {
  const auto f = arf_one(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(democratic_arf(f));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * state.range(0))));
}
BENCHMARK(BM_DemocraticArf)->DenseRange(4, 10, 2);

void BM_Decompose(benchmark::State& state) {
  const auto f = arf_one(static_cast<std::size_t>(state.range(0)) / 2);
  const auto t = random_orthogonal(f, 3, 4 * static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(t));
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(16)->Arg(64)->Arg(128);

void BM_TransvectionClosure(benchmark::State& state) {
  const auto f = arf_one(static_cast<std::size_t>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(transvection_closure(f));
}
BENCHMARK(BM_TransvectionClosure)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
