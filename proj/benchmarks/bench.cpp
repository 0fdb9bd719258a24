#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sphedra/discrepancy.hpp"
#include "sphedra/ideal.hpp"
#include "sphedra/polyhedron.hpp"
#include "sphedra/search.hpp"

namespace {

using sphedra::Vec3;

std::vector<Vec3> random_unit_points(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(pts.size()) < n) {
    const Vec3 raw{gauss(rng), gauss(rng), gauss(rng)};
    const double len = norm(raw);
    if (len < 1e-6) continue;
    pts.push_back(raw / len);
  }
  return pts;
}

void BM_ConvexHull(benchmark::State& state) {
  const auto pts = random_unit_points(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphedra::convex_hull(pts));
  }
}
BENCHMARK(BM_ConvexHull)->Arg(5)->Arg(8)->Arg(32)->Arg(128);

void BM_SurfaceArea(benchmark::State& state) {
  const auto hull = sphedra::convex_hull(random_unit_points(64, 11));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphedra::surface_area(hull));
  }
}
BENCHMARK(BM_SurfaceArea);

void BM_Volume(benchmark::State& state) {
  const auto hull = sphedra::convex_hull(random_unit_points(64, 11));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphedra::volume(hull));
  }
}
BENCHMARK(BM_Volume);

void BM_Classify(benchmark::State& state) {
  const auto hull = sphedra::build_ideal_bipyramid(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphedra::classify(hull));
  }
}
BENCHMARK(BM_Classify);

void BM_DiscrepancyReport(benchmark::State& state) {
  const auto hull = sphedra::build_ideal_bipyramid(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphedra::discrepancy_report(hull));
  }
}
BENCHMARK(BM_DiscrepancyReport);

void BM_Objective(benchmark::State& state) {
  const auto config = sphedra::SphericalConfig::from_points(
      random_unit_points(static_cast<int>(state.range(0)), 23));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sphedra::objective(config, sphedra::Objective::kArea));
  }
}
BENCHMARK(BM_Objective)->Arg(5)->Arg(8);

void BM_LocalOptimize(benchmark::State& state) {
  const auto start = sphedra::SphericalConfig::from_points(
      random_unit_points(5, 31));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sphedra::local_optimize(start, sphedra::Objective::kArea, 1e-7));
  }
}
BENCHMARK(BM_LocalOptimize);

void BM_CapSearchSingleRestart(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphedra::constrained_cap_search(5, 1.0, 1, 3));
  }
}
BENCHMARK(BM_CapSearchSingleRestart);

}  // namespace

BENCHMARK_MAIN();
