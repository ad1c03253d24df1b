#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "drharm/abel.hpp"
#include "drharm/spherical.hpp"
#include "drharm/transforms.hpp"
#include "drharm/zeros.hpp"

using namespace drharm;

namespace {

// Arguments: lambda * 10, r * 10.
void BM_PhiSeries(benchmark::State& state) {
  const SpaceParams s(4, 3);
  const double lambda = state.range(0) / 10.0;
  const double r = state.range(1) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(phi(s, lambda, r));
}
BENCHMARK(BM_PhiSeries)->Args({5, 5})->Args({30, 20})->Args({200, 50})->Args({50, 90});

void BM_PhiOde(benchmark::State& state) {
  const SpaceParams s(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(phi_ode_oracle(s, 3.0, 2.0));
}
BENCHMARK(BM_PhiOde);

void BM_BallTransform(benchmark::State& state) {
  const SpaceParams s(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ball_transform(s, 2.0, {1.0, 1.0}));
}
BENCHMARK(BM_BallTransform);

void BM_BallTransformQuadrature(benchmark::State& state) {
  const SpaceParams s(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ball_transform_quadrature(s, 2.0, {1.0, 1.0}));
}
BENCHMARK(BM_BallTransformQuadrature);

void BM_AbelRoundtrip(benchmark::State& state) {
  const SpaceParams s(2, 2);
  const CosineSum sum({{1.0, 1.5, 0}});
  const std::vector<double> radii{0.5, 1.0, 2.0, 4.0};
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip(sum, s, radii));
}
BENCHMARK(BM_AbelRoundtrip)->Unit(benchmark::kMillisecond);

void BM_SpectralZeroSet(benchmark::State& state) {
  const SpaceParams s(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_zero_set(s, 1.0, DistKind::Sphere, 20.0));
}
BENCHMARK(BM_SpectralZeroSet)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
