#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "proxtri/delaunay.hpp"
#include "proxtri/io/checks.hpp"
#include "proxtri/io/generate.hpp"
#include "proxtri/predicates.hpp"
#include "proxtri/regions.hpp"
#include "proxtri/voronoi.hpp"

using namespace proxtri;

namespace {

SiteSet uniform_sites(std::size_t n, io::Distribution d = io::Distribution::Uniform) {
  return SiteSet(io::generate_sites(n, 42, d));
}

void BM_Triangulate(benchmark::State& state) {
  const SiteSet sites = uniform_sites(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(triangulate(sites));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Triangulate)->RangeMultiplier(4)->Range(64, 16384)->Complexity()->Unit(benchmark::kMillisecond);

void BM_TriangulateCocircular(benchmark::State& state) {
  const SiteSet sites = uniform_sites(static_cast<std::size_t>(state.range(0)), io::Distribution::Cocircular);
  for (auto _ : state) benchmark::DoNotOptimize(triangulate(sites));
}
BENCHMARK(BM_TriangulateCocircular)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_ConstrainedTriangulate(benchmark::State& state) {
  const SiteSet sites = uniform_sites(static_cast<std::size_t>(state.range(0)));
  // Edges of one triangulation never cross, so every tenth one is a valid constraint set.
  const TriMesh mesh = triangulate(sites);
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < mesh.edges().size(); i += 10) {
    const Edge e = mesh.edges()[i].edge;
    segs.emplace_back(sites[e.u], sites[e.v]);
  }
  const ConstraintSet constraints(segs);
  for (auto _ : state) benchmark::DoNotOptimize(constrained_triangulate(sites, constraints));
}
BENCHMARK(BM_ConstrainedTriangulate)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_Voronoi(benchmark::State& state) {
  const TriMesh mesh = triangulate(uniform_sites(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(voronoi_diagram(mesh));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Voronoi)->RangeMultiplier(4)->Range(64, 4096)->Complexity()->Unit(benchmark::kMillisecond);

void BM_ExtractRegions(benchmark::State& state) {
  const auto mesh = std::make_shared<const TriMesh>(triangulate(uniform_sites(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(extract_regions(mesh));
}
BENCHMARK(BM_ExtractRegions)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_CheckSuite(benchmark::State& state) {
  const TriMesh mesh = triangulate(uniform_sites(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(io::run_checks(mesh, io::Suite::All));
}
BENCHMARK(BM_CheckSuite)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

std::vector<Point> random_points(std::size_t n, bool near_degenerate) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(0, 999);
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (near_degenerate) {
      // All on one line: every orientation is an exact tie.
      const long t = d(rng);
      out.emplace_back(Rational(t), Rational(2 * t + 1));
    } else {
      Rational x(d(rng), 1000), y(d(rng), 1000);
      x.canonicalize();
      y.canonicalize();
      out.emplace_back(x, y);
    }
  }
  return out;
}

void BM_Orientation(benchmark::State& state) {
  const auto p = random_points(1024, state.range(0) != 0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orientation(p[i % 1024], p[(i + 1) % 1024], p[(i + 2) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_Orientation)->Arg(0)->Arg(1)->ArgNames({"degenerate"});

void BM_OrientationExact(benchmark::State& state) {
  const auto p = random_points(1024, state.range(0) != 0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orientation_exact(p[i % 1024], p[(i + 1) % 1024], p[(i + 2) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_OrientationExact)->Arg(0)->Arg(1)->ArgNames({"degenerate"});

void BM_InCircle(benchmark::State& state) {
  const auto p = random_points(1024, false);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(incircle_sign(p[i % 1024], p[(i + 1) % 1024], p[(i + 2) % 1024], p[(i + 3) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_InCircle);

void BM_InCircleExact(benchmark::State& state) {
  const auto p = random_points(1024, false);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(incircle_exact(p[i % 1024], p[(i + 1) % 1024], p[(i + 2) % 1024], p[(i + 3) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_InCircleExact);

}  // namespace

BENCHMARK_MAIN();
