#include <benchmark/benchmark.h>

#include "mvdist/caps.hpp"
#include "mvdist/distance.hpp"
#include "mvdist/harness.hpp"
#include "mvdist/metrics.hpp"
#include "mvdist/mixed_volume.hpp"
#include "mvdist/polytope_io.hpp"

namespace mvdist {
namespace {

VPolytope body(const char* name) { return read_polytope_file(std::string(MVDIST_DATA_DIR) + "/" + name); }

std::vector<Point> ring(std::size_t count) {
  std::vector<Point> pts;
  const VPolytope disk = regular_polygon_proxy(static_cast<unsigned>(count));
  for (const auto& v : disk.vertices()) pts.push_back(v);
  return pts;
}

void BM_Hull2D(benchmark::State& state) {
  const auto pts = ring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts, 2));
}
BENCHMARK(BM_Hull2D)->Arg(64)->Arg(256)->Arg(1024);

void BM_MinkowskiSum2D(benchmark::State& state) {
  const VPolytope p = regular_polygon_proxy(static_cast<unsigned>(state.range(0)));
  const VPolytope q = scale(p, Scalar(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(p, q));
}
BENCHMARK(BM_MinkowskiSum2D)->Arg(64)->Arg(256);

void BM_SteinerProfileCube(benchmark::State& state) {
  const VPolytope g = body("cube.json");
  const VPolytope k = convex_hull({Point{Scalar(0), Scalar(0), Scalar(0)}, Point{Scalar(1), Scalar(1, 2), Scalar(1, 3)},
                                   Point{Scalar(1, 4), Scalar(1), Scalar(0)}, Point{Scalar(0), Scalar(1, 5), Scalar(1)}});
  for (auto _ : state) benchmark::DoNotOptimize(steiner_profile(g, k));
}
BENCHMARK(BM_SteinerProfileCube)->Unit(benchmark::kMillisecond);

void BM_Hausdorff256(benchmark::State& state) {
  const VPolytope p = regular_polygon_proxy(256);
  const VPolytope q = scale(p, Scalar(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(p, q));
}
BENCHMARK(BM_Hausdorff256)->Unit(benchmark::kMillisecond);

void BM_PairMetricsSquare(benchmark::State& state) {
  const VPolytope g = body("square.json");
  Rng rng(1);
  const VPolytope k = random_body(g, rng);
  const VPolytope l = random_body(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pair_metrics(g, k, l));
}
BENCHMARK(BM_PairMetricsSquare)->Unit(benchmark::kMillisecond);

void BM_DiskSweep(benchmark::State& state) {
  const VPolytope g = body("disk256.json");
  const auto [lo, hi] = polygon_window(256);
  const auto schedule = geometric_schedule(hi, lo, 16);
  const Point d = family_direction(g);
  for (auto _ : state) benchmark::DoNotOptimize(cap_slice_family(g, d, schedule));
}
BENCHMARK(BM_DiskSweep)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mvdist

BENCHMARK_MAIN();
