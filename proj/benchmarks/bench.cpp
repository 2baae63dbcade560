#include <benchmark/benchmark.h>

#include "fanohodge/binomial.hpp"
#include "fanohodge/curves.hpp"
#include "fanohodge/fano_odd.hpp"
#include "fanohodge/motivic.hpp"

namespace {

void BM_GaussBinomialByProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    fanohodge::LaurentPoly num(1), den(1);
    for (int l = 0; l < n / 2; ++l) num *= fanohodge::LaurentPoly{{0, 1}, {n - l, -1}};
    for (int l = 1; l <= n / 2; ++l) den *= fanohodge::LaurentPoly{{0, 1}, {l, -1}};
    benchmark::DoNotOptimize(fanohodge::exact_divide(num, den));
  }
}
BENCHMARK(BM_GaussBinomialByProduct)->Arg(10)->Arg(20)->Arg(40);

void BM_GaussBinomialCached(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fanohodge::gauss_binomial(n, n / 2));
}
BENCHMARK(BM_GaussBinomialCached)->Arg(40);

void BM_SymCurveDiamond(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fanohodge::sym_curve_diamond(g, g));
}
BENCHMARK(BM_SymCurveDiamond)->Arg(4)->Arg(8)->Arg(12);

void BM_FanoOddDiamond(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fanohodge::fano_odd_diamond(fanohodge::OddFanoParams(g, g / 2)));
}
BENCHMARK(BM_FanoOddDiamond)->Arg(4)->Arg(8)->Arg(12);

void BM_VerifyConjectureB(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fanohodge::verify_conjecture_b(g, g / 2));
}
BENCHMARK(BM_VerifyConjectureB)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
