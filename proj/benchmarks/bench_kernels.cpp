#include <benchmark/benchmark.h>

#include <random>

#include "overconv/analysis.hpp"
#include "overconv/carlitz.hpp"
#include "overconv/special.hpp"

namespace {

using namespace overconv;
using series::GenSeries;

ff::FieldPtr field_for(std::int64_t q) {
  switch (q) {
    case 2: return ff::Field::create(2, 1);
    case 4: return ff::Field::create(2, 2);
    case 5: return ff::Field::create(5, 1);
    default: return ff::Field::create(3, 1);
  }
}

GenSeries dense_unit(const ff::FieldPtr& f, int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return special::sample_unit(f, rng, terms - 1);
}

void BM_FieldMul(benchmark::State& state) {
  auto f = ff::Field::create(3, 2);
  auto a = f->generator();
  auto b = f->from_code(17);
  for (auto _ : state) {
    a = f->mul(a, b);
    benchmark::DoNotOptimize(a = f->add(a, b));
  }
}
BENCHMARK(BM_FieldMul);

void BM_SeriesMul(benchmark::State& state) {
  auto f = field_for(3);
  const int n = static_cast<int>(state.range(0));
  auto a = dense_unit(f, n, 1);
  auto b = dense_unit(f, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(series::mul(a, b));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_SeriesInv(benchmark::State& state) {
  auto f = field_for(3);
  const int n = static_cast<int>(state.range(0));
  auto a = dense_unit(f, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(series::inv(a));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesInv)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_CarlitzFactorial(benchmark::State& state) {
  auto f = field_for(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(carlitz::carlitz_factorial(f, n));
}
BENCHMARK(BM_CarlitzFactorial)->ArgsProduct({{2, 3, 4, 5}, {4, 8}});

void BM_InverseFactorial(benchmark::State& state) {
  auto f = field_for(state.range(0));
  const auto d = carlitz::carlitz_factorial(f, 8);
  const Rational cap = 200;
  for (auto _ : state) benchmark::DoNotOptimize(series::inv(d, cap));
}
BENCHMARK(BM_InverseFactorial)->DenseRange(2, 5);

void BM_Pochhammer(benchmark::State& state) {
  auto f = field_for(3);
  const auto a = dense_unit(f, 8, 4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(special::pochhammer_sequence(a, n));
}
BENCHMARK(BM_Pochhammer)->DenseRange(2, 6, 2);

void BM_ReportAll(benchmark::State& state) {
  auto f = field_for(state.range(0));
  analysis::CheckSettings settings;
  for (auto _ : state) benchmark::DoNotOptimize(analysis::run_checks(analysis::check_names(), f, settings, 1));
}
BENCHMARK(BM_ReportAll)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
