#include <benchmark/benchmark.h>

#include <vector>

#include "dvf/extension.hpp"
#include "dvf/finite_field.hpp"
#include "dvf/laurent.hpp"
#include "dvf/padic.hpp"

namespace {

void BM_PAdicMul(benchmark::State& state) {
  const dvf::PAdicCtx ctx(5, state.range(0));
  const auto x = dvf::PAdicNum::from_rat(ctx, dvf::Rational(1, 3));
  const auto y = dvf::PAdicNum::from_rat(ctx, dvf::Rational(-7, 11));
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_PAdicMul)->Arg(20)->Arg(200)->Arg(2000);

void BM_PAdicInv(benchmark::State& state) {
  const dvf::PAdicCtx ctx(7, state.range(0));
  const auto x = dvf::PAdicNum::from_rat(ctx, dvf::Rational(22, 13));
  for (auto _ : state) benchmark::DoNotOptimize(x.inv());
}
BENCHMARK(BM_PAdicInv)->Arg(20)->Arg(200)->Arg(2000);

void BM_LaurentInv(benchmark::State& state) {
  const dvf::CoefField q;
  std::vector<dvf::Rational> window;
  for (int i = 0; i < state.range(0); ++i) window.emplace_back(i + 1, i + 2);
  const auto f = dvf::LaurentSeries::from_coeffs(q, -1, window);
  for (auto _ : state) benchmark::DoNotOptimize(f.inv());
}
BENCHMARK(BM_LaurentInv)->Arg(10)->Arg(50)->Arg(100);

void BM_NormDeterminant(benchmark::State& state) {
  const dvf::PAdicCtx ctx(5, 20);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<dvf::Rational> f(n + 1, dvf::Rational(0));
  f[0] = -5;
  f[1] = 10;
  f[n] = 1;
  const auto ext = dvf::ExtField<dvf::PAdicNum>::make(ctx, f);
  std::vector<dvf::PAdicNum> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back(dvf::PAdicNum::from_rat(ctx, dvf::Rational(i + 1, 2 * i + 3)));
  const auto x = ext.element(coords);
  for (auto _ : state) benchmark::DoNotOptimize(dvf::norm(x));
}
BENCHMARK(BM_NormDeterminant)->DenseRange(2, 8, 2);

void BM_IsIrreducible(benchmark::State& state) {
  // x^d + x + 2 over F_7.
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<std::uint64_t> c(d + 1, 0);
  c[0] = 2;
  c[1] = 1;
  c[d] = 1;
  const dvf::FpPoly f(7, c);
  for (auto _ : state) benchmark::DoNotOptimize(dvf::is_irreducible(f));
}
BENCHMARK(BM_IsIrreducible)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
