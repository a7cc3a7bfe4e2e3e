#include <benchmark/benchmark.h>

#include "gaussric/catalog.hpp"
#include "gaussric/sampling.hpp"
#include "gaussric/spherical.hpp"

namespace {

using namespace gaussric;

void BM_PrincipalAngles(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto rng = stream_rng(1, {});
  const OrientedPlane p = random_plane(m, 2 * m, rng);
  const OrientedPlane q = random_plane(m, 2 * m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(principal_angles(p, q));
}
BENCHMARK(BM_PrincipalAngles)->Arg(1)->Arg(2)->Arg(3)->Arg(6);

void BM_DistancePair(benchmark::State& state) {
  auto rng = stream_rng(2, {});
  const OrientedPlane p = random_plane(2, 4, rng);
  const OrientedPlane q = random_plane(2, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_distance(p, q));
    benchmark::DoNotOptimize(spherical_distance(p, q));
  }
}
BENCHMARK(BM_DistancePair);

void BM_PlueckerEmbed(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto rng = stream_rng(3, {});
  const OrientedPlane p = random_plane(m, 2 * m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pluecker_embed(p));
}
BENCHMARK(BM_PlueckerEmbed)->Arg(2)->Arg(3)->Arg(4);

void BM_FundamentalData(benchmark::State& state) {
  const auto e = Catalog::instance().get("enneper");
  Vector u(2);
  u << 0.3, -0.4;
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_data(e.immersion, u));
}
BENCHMARK(BM_FundamentalData);

void BM_RicciIntrinsic(benchmark::State& state) {
  const auto e = Catalog::instance().get("holo_z2");
  Vector u(2);
  u << 0.3, -0.4;
  for (auto _ : state) benchmark::DoNotOptimize(ricci_intrinsic(e.immersion, u));
}
BENCHMARK(BM_RicciIntrinsic);

void BM_PullbackMetricPsi(benchmark::State& state) {
  const auto e = Catalog::instance().get("clifford_torus");
  Vector u(2);
  u << 0.3, -0.4;
  for (auto _ : state) benchmark::DoNotOptimize(pullback_metric_psi(*e.nested, u));
}
BENCHMARK(BM_PullbackMetricPsi);

void BM_VerifyCatenoidGrid(benchmark::State& state) {
  const auto e = Catalog::instance().get("catenoid");
  GridSpec grid = e.default_grid;
  grid.resolution = {11, 11};
  for (auto _ : state) benchmark::DoNotOptimize(verify_corollary_minimal(e.immersion, grid));
}
BENCHMARK(BM_VerifyCatenoidGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
