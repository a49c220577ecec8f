// Hot-path timings: subdivision construction, the three solid-angle
// routes, total curvature assembly, and the partition sampler.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "tropcurv/curvature.hpp"
#include "tropcurv/tropical.hpp"

namespace {

using namespace tropcurv;

TropicalPolynomial curve(int degree) {
  TropicalPolynomial f(2);
  for (std::int64_t i = 0; i <= degree; ++i)
    for (std::int64_t j = 0; j + i <= degree; ++j)
      f.add_term(LatticeVector{i, j}, Rational(-(i * i + i * j + j * j)));
  return f;
}

SignDistribution checkerboard(const TropicalPolynomial& f) {
  SignDistribution theta;
  for (const auto& [e, c] : f.terms()) theta.signs[e] = (e[0] + e[1]) % 2 == 0 ? +1 : -1;
  return theta;
}

void BM_DualSubdivision(benchmark::State& state) {
  auto f = curve(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_subdivision(f));
}
BENCHMARK(BM_DualSubdivision)->DenseRange(3, 6);

void BM_PlanarAngle(benchmark::State& state) {
  Cone c = make_cone(2, {LatticeVector{3, 1}, LatticeVector{-2, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(solid_angle(c));
}
BENCHMARK(BM_PlanarAngle);

void BM_SphericalAngle(benchmark::State& state) {
  Cone c = make_cone(3, {LatticeVector{3, 1, 1}, LatticeVector{-2, 5, 1},
                         LatticeVector{0, -1, 4}, LatticeVector{1, 1, 2}});
  ensure_facets(c);
  for (auto _ : state) benchmark::DoNotOptimize(solid_angle(c));
}
BENCHMARK(BM_SphericalAngle);

void BM_MonteCarloAngle(benchmark::State& state) {
  Cone c = make_cone(3, {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0},
                         LatticeVector{0, 0, 1}});
  ensure_facets(c);
  AngleConfig cfg;
  cfg.force_monte_carlo = true;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solid_angle(c, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloAngle)->Arg(10000)->Arg(100000);

void BM_PolyhedralTotal(benchmark::State& state) {
  auto f = curve(static_cast<int>(state.range(0)));
  auto theta = checkerboard(f);
  for (auto _ : state) benchmark::DoNotOptimize(polyhedral_total_curvature(f, theta));
}
BENCHMARK(BM_PolyhedralTotal)->DenseRange(2, 6);

void BM_PartitionCheck(benchmark::State& state) {
  LatticeSimplex tet{{LatticeVector{0, 0, 0}, LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0},
                      LatticeVector{0, 0, 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(partition_check(tet, 10000));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_PartitionCheck);

}  // namespace

BENCHMARK_MAIN();
