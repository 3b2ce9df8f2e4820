#include <benchmark/benchmark.h>

#include <cmath>

#include "crbelt/beltrami.hpp"
#include "crbelt/catalog.hpp"
#include "crbelt/circular.hpp"
#include "crbelt/winding.hpp"

using namespace crbelt;

namespace {

const char* kBulgeSrc = "(abs2(z1)+abs2(z2))^2+abs2(z1)^2+abs2(z2)^2-2";

void BM_ParseBulge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse(kBulgeSrc));
}
BENCHMARK(BM_ParseBulge);

void BM_EvalBulge(benchmark::State& state) {
  const ExprPtr e = parse(kBulgeSrc);
  const CPoint p{Complex(0.4, 0.3), Complex(0.8, -0.1)};
  for (auto _ : state) benchmark::DoNotOptimize(eval(e, p));
}
BENCHMARK(BM_EvalBulge);

void BM_JetBulge(benchmark::State& state) {
  const JetEvaluator jets(parse(kBulgeSrc));
  const double s = std::pow(3.0, -0.25);
  const CPoint p{Complex(s), Complex(s)};
  for (auto _ : state) benchmark::DoNotOptimize(jets.jet(p));
}
BENCHMARK(BM_JetBulge);

void BM_BeltramiBulge(benchmark::State& state) {
  const JetEvaluator jets(parse(kBulgeSrc));
  const double s = std::pow(3.0, -0.25);
  const CPoint p{Complex(s), Complex(s)};
  for (auto _ : state) benchmark::DoNotOptimize(beltrami_coeff(jets, p));
}
BENCHMARK(BM_BeltramiBulge);

void BM_RadialSolve(benchmark::State& state) {
  const CircularSurface bulge(parse(kBulgeSrc));
  const Complex zeta(0.7, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(bulge.radial_solve(zeta));
}
BENCHMARK(BM_RadialSolve);

void BM_BChart(benchmark::State& state) {
  const CircularSurface bulge(parse(kBulgeSrc));
  const Complex zeta(0.7, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(bulge.b_chart(zeta));
}
BENCHMARK(BM_BChart);

void BM_WindingSynthetic(benchmark::State& state) {
  const auto f = [](Complex z) {
    const Complex zb = std::conj(z);
    return (zb * zb + Complex(0.2, 0.1)) / (z * z + Complex(-0.3, 0.05));
  };
  const Contour c = Contour::circle(Complex(0.0), 20.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(winding_number(f, c));
}
BENCHMARK(BM_WindingSynthetic)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
