#include <benchmark/benchmark.h>

#include "mvdist/estimator.hpp"
#include "mvdist/polytope_io.hpp"

namespace mvdist {
namespace {

VertexBody vertex_body(const char* name) {
  const VertexData d = read_vertex_file(std::string(MVDIST_DATA_DIR) + "/" + name);
  return VertexBody(d.dim, d.vertices);
}

void BM_MembershipNumeric4D(benchmark::State& state) {
  const VertexBody g = vertex_body("cube4.json");
  const VertexBody k = vertex_body("half_cube4.json");
  const double x[4] = {1.2, 0.3, 1.4, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(member_minkowski_numeric(x, g, k));
}
BENCHMARK(BM_MembershipNumeric4D);

void BM_RhoEstimate4D(benchmark::State& state) {
  const VertexBody g = vertex_body("cube4.json");
  const VertexBody k = vertex_body("half_cube4.json");
  for (auto _ : state) benchmark::DoNotOptimize(mc_rho_G(g, g, k, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_RhoEstimate4D)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mvdist
