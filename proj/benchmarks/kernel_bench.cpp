#include <benchmark/benchmark.h>

#include <cmath>

#include "ppcf/analytic.hpp"
#include "ppcf/levelset.hpp"
#include "ppcf/solver.hpp"

namespace {

using namespace ppcf;

ScalarField circle_slice(double h) {
  const CircleBenchmark b(0.7, 1.0);
  return from_function([&](Vec2 x) { return u0_circle(x, b); }, make_box(-2, -2, 2, 2), h);
}

// One backward step of the Table-1 game with l0 directions on a grid of spacing 0.04.
void BM_GameStep(benchmark::State& state) {
  const GammaParams p(0.7);
  const double eps = 0.08;
  const ControlSet cs = discretize_controls(eps, alphas_from_scale(p, 0.9), p, StepSize{0.01});
  const DirectionSet ds(static_cast<std::size_t>(state.range(0)));
  const CircleBenchmark b(0.7, 1.0);
  const ScalarField u = circle_slice(0.04);
  ScalarField out = ScalarField::like(u);
  const OutsidePolicy policy = OutsidePolicy::analytic([&](Vec2 x) { return u0_circle(x, b); }, 0.0);
  for (auto _ : state) {
    game_step_into(u, out, cs, ds, eps, policy, 1);
    benchmark::DoNotOptimize(out.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(u.size()));
}
BENCHMARK(BM_GameStep)->Arg(16)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_SampleBilinear(benchmark::State& state) {
  const ScalarField u = circle_slice(0.01);
  const OutsidePolicy clamp = OutsidePolicy::clamp_nearest();
  double x = -1.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_bilinear(u, {x, 0.37 * x}, clamp));
    x = x > 1.9 ? -1.9 : x + 0.0037;
  }
}
BENCHMARK(BM_SampleBilinear);

void BM_ExtractContour(benchmark::State& state) {
  const ScalarField u = circle_slice(4.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    const Contour c = extract_contour(u, 0.07);
    benchmark::DoNotOptimize(c.polylines.data());
  }
}
BENCHMARK(BM_ExtractContour)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
