#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mvdist/caps.hpp"
#include "mvdist/error.hpp"
#include "mvdist/estimator.hpp"
#include "mvdist/harness.hpp"
#include "mvdist/metrics.hpp"
#include "support.hpp"

namespace mvdist {
namespace {

using testing::hull;
using testing::pt;
using testing::q;

VertexBody cube_body(std::size_t dim, const Scalar& side) {
  std::vector<Point> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = (mask >> i) & 1 ? side : Scalar(0);
    pts.push_back(p);
  }
  return VertexBody(dim, pts);
}

TEST(VertexBody, PrunesInteriorPoints) {
  std::vector<Point> pts = cube_body(4, 1).vertices();
  pts.push_back(Point{q("1/2"), q("1/2"), q("1/2"), q("1/2")});
  pts.push_back(Point{Scalar(1), Scalar(0), q("1/3"), Scalar(1)});
  const VertexBody b(4, pts);
  EXPECT_EQ(b.vertices().size(), 16u);
  EXPECT_EQ(b, cube_body(4, 1));
  EXPECT_TRUE(is_subset(cube_body(4, q("1/2")), b));
  EXPECT_FALSE(is_subset(b, cube_body(4, q("1/2"))));
  EXPECT_EQ(hull_union(cube_body(4, q("1/2")), b), b);
  EXPECT_THROW(VertexBody(2, {}), Error);
}

TEST(MemberMinkowski, Examples) {
  const VPolytope sq = testing::unit_square();
  const VPolytope seg = hull({{0, 0}, {1, 1}});
  EXPECT_TRUE(member_minkowski(pt({2, 2}), sq, seg).member);
  EXPECT_TRUE(member_minkowski(pt({2, 1}), sq, seg).member);
  EXPECT_FALSE(member_minkowski(pt({2, 0}), sq, seg).member);
  EXPECT_TRUE(member_minkowski(Point{q("1/2"), q("1/2")}, hull({{0, 0}}), sq).member);
  EXPECT_FALSE(member_minkowski(pt({-1, 0}), hull({{0, 0}}), sq).member);
  EXPECT_FALSE(member_minkowski(pt({0, 0}), sq, seg).approximate);
  const double inside[2] = {1.5, 1.0};
  const double outside[2] = {2.0, 0.5};
  const VertexBody a(sq), b(seg);
  EXPECT_TRUE(member_minkowski_numeric(inside, a, b));
  EXPECT_FALSE(member_minkowski_numeric(outside, a, b));
  EXPECT_FALSE(member_minkowski_numeric(inside, a, b, 0.25));
}

TEST(MemberMinkowski, AgreesWithExactSum) {
  Rng rng(307);
  for (int body = 0; body < 20; ++body) {
    const VPolytope p = testing::random_polytope(rng, 2, 6, -2, 2);
    const VPolytope r = testing::random_polytope(rng, 2, 6, -2, 2);
    const VPolytope sum = minkowski_sum(p, r);
    const VertexBody vp(p), vr(r);
    for (int i = 0; i < 500; ++i) {
      const Point x = testing::random_point(rng, 2, -5, 5, 4);
      const bool exact = contains(sum, x);
      EXPECT_EQ(member_minkowski(x, vp, vr).member, exact);
      const double xd[2] = {to_double(x[0]), to_double(x[1])};
      // Boundary points may go either way numerically.
      const Scalar gap = nearest_point(x, sum).distance2;
      if (!exact && gap > rational(1, 1 << 20)) {
        EXPECT_FALSE(member_minkowski_numeric(xd, vp, vr));
      }
      if (exact && sum.is_full_dimensional()) {
        bool interior = true;
        for (const auto& f : sum.facets()) interior = interior && f.slack(x) * f.slack(x) > rational(1, 1 << 20) * norm2(f.normal());
        if (interior) {
          EXPECT_TRUE(member_minkowski_numeric(xd, vp, vr));
        }
      }
    }
  }
}

TEST(McVolume, Basics) {
  const Box box{{0, 0}, {1, 1}};
  const VolumeEstimate all = mc_volume([](const double*) { return true; }, box, 5000, 1);
  EXPECT_EQ(all.mean, 1);
  EXPECT_EQ(all.hit_fraction, 1);
  EXPECT_EQ(all.ci95, 0);
  EXPECT_EQ(all.samples, 5000u);
  const VolumeEstimate disk =
      mc_volume([](const double* x) { return x[0] * x[0] + x[1] * x[1] <= 1; }, box, 200000, 2);
  EXPECT_NEAR(disk.hit_fraction, std::numbers::pi / 4, 3 * disk.ci95);
  EXPECT_THROW(mc_volume([](const double*) { return true; }, box, 999, 1), Error);
  EXPECT_THROW(mc_volume([](const double*) { return true; }, Box{{0}, {0}}, 5000, 1), Error);
}

TEST(McVolume, CubeSum) {
  const VertexBody c = cube_body(4, 1);
  const Box box = sum_box(c, c);
  EXPECT_EQ(box.volume(), 16);
  const VolumeEstimate v =
      mc_volume([&](const double* x) { return member_minkowski_numeric(x, c, c); }, box, 20000, 3);
  EXPECT_EQ(v.mean, 16);
}

TEST(McRho, CommonRandomNumbersAndDeterminism) {
  const VertexBody g(testing::unit_square());
  const VertexBody k(hull({{0, 0}, {1, 0}}));
  const RhoEstimate same = mc_rho_G(g, k, k, 20000, 5);
  EXPECT_EQ(same.rho, 0);
  EXPECT_EQ(same.ci95, 0);
  const VertexBody l(hull({{0, 1}, {1, 1}}));
  const RhoEstimate a = mc_rho_G(g, k, l, 20000, 9);
  const RhoEstimate b = mc_rho_G(g, k, l, 20000, 9);
  EXPECT_EQ(a.rho, b.rho);
  EXPECT_EQ(a.ci95, b.ci95);
  EXPECT_THROW(mc_rho_G(g, VertexBody(hull({{2, 2}})), l, 20000, 1), Error);
}

TEST(McRho, HalfCubeInFourDimensions) {
  const VertexBody g = cube_body(4, 1);
  const RhoEstimate r = mc_rho_G(g, g, cube_body(4, q("1/2")), 100000, 11);
  EXPECT_NEAR(r.rho, 10.9375, 3 * r.ci95);
  EXPECT_GT(r.ci95, 0);
}

TEST(McEstimates, ConsistentWithExactInThePlane) {
  const VPolytope g = testing::unit_square();
  Rng rng(313);
  int rho_misses = 0;
  int dg_misses = 0;
  const int pairs = 12;
  for (int i = 0; i < pairs; ++i) {
    const VPolytope k = random_body(g, rng);
    const VPolytope l = random_body(g, rng);
    const PairMetrics exact = pair_metrics(g, k, l);
    const RhoEstimate r = mc_rho_G(VertexBody(g), VertexBody(k), VertexBody(l), 40000, 1000 + i);
    if (std::abs(r.rho - to_double(exact.rho)) > 3 * r.ci95) ++rho_misses;
    const DgEstimate d = mc_d_G(VertexBody(g), VertexBody(k), VertexBody(l), 40000, 2000 + i);
    if (std::abs(d.dg - to_double(exact.dg)) > 3 * d.ci95) ++dg_misses;
    EXPECT_EQ(d.terms.size(), 3u);
  }
  EXPECT_LE(rho_misses, 1);
  EXPECT_LE(dg_misses, 1);
}

}  // namespace
}  // namespace mvdist
