#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mvdist/caps.hpp"
#include "mvdist/constants.hpp"
#include "mvdist/error.hpp"
#include "mvdist/harness.hpp"
#include "mvdist/metrics.hpp"
#include "support.hpp"

namespace mvdist {
namespace {

using testing::hull;
using testing::pt;
using testing::q;

TEST(Cap, SquareCorner) {
  const VPolytope sq = testing::unit_square();
  const Cap c = cap(sq, pt({1, 1}), q("1/2"));
  EXPECT_EQ(c.body, convex_hull({Point{Scalar(1), Scalar(1)}, Point{q("1/2"), Scalar(1)}, Point{Scalar(1), q("1/2")}}));
  EXPECT_EQ(volume(c.body), q("1/8"));
  EXPECT_NEAR(c.height, 0.5 / std::sqrt(2.0), 1e-15);
  const VPolytope s = slice(sq, pt({1, 1}), q("1/2"));
  EXPECT_EQ(s.vertices(), (std::vector<Point>{Point{q("1/2"), Scalar(1)}, Point{Scalar(1), q("1/2")}}));
  EXPECT_EQ(pyramid_threshold(sq, pt({1, 1})), 1);
  // Full-width cap is G itself; a slice past the width is empty.
  EXPECT_EQ(cap(sq, pt({1, 0}), 1).body, sq);
  EXPECT_THROW(slice(sq, pt({1, 0}), 2), Error);
  EXPECT_THROW(cap(sq, pt({0, 0}), 1), Error);
  EXPECT_EQ(pyramid_threshold(sq, pt({1, 0})), 0);
}

TEST(Cap, NestingAndPyramidLaw) {
  for (const VPolytope& g : {testing::unit_simplex2(), testing::unit_cube(), testing::unit_simplex3()}) {
    const Point d = family_direction(g);
    const Scalar threshold = pyramid_threshold(g, d);
    ASSERT_GT(threshold, 0);
    const Scalar s0 = threshold / 2;
    const Scalar a = volume(cap(g, d, s0).body) / pow(s0, static_cast<unsigned>(g.dim()));
    std::optional<VPolytope> prev;
    for (const Scalar& s : dyadic_schedule(2, 9)) {
      const Scalar t = threshold * s;
      const VPolytope c = cap(g, d, t).body;
      EXPECT_EQ(volume(c), a * pow(t, static_cast<unsigned>(g.dim())));
      if (prev) {
        EXPECT_TRUE(is_subset(c, *prev));
      }
      prev = c;
      // The cone over the slice with apex at the top vertex sits inside the cap.
      std::vector<Point> cone = slice(g, d, t).vertices();
      Point apex = g.vertex(0);
      for (const auto& v : g.vertices()) {
        if (dot(d, v) > dot(d, apex)) apex = v;
      }
      cone.push_back(apex);
      EXPECT_TRUE(is_subset(convex_hull(cone, g.dim()), c));
    }
  }
}

TEST(Cap, RandomBodiesCapContainsSlice) {
  Rng rng(211);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const VPolytope g = testing::random_body(rng, dim);
    const Point d = testing::random_point(rng, dim, -2, 2, 1);
    if (d.is_zero()) continue;
    const Scalar width = support_value(g, d) - min_value(g, d);
    const Scalar s = width * rational(1 + static_cast<long>(rng() % 7), 8);
    const Cap c = cap(g, d, s);
    const VPolytope sl = slice(g, d, s);
    EXPECT_TRUE(is_subset(sl, c.body));
    EXPECT_TRUE(is_subset(c.body, g));
    for (const auto& v : sl.vertices()) EXPECT_EQ(dot(d, v), support_value(g, d) - s);
    EXPECT_EQ(min_value(c.body, d), support_value(g, d) - s);
  }
}

TEST(SphericalCap, ClosedForms) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(spherical_cap_volume(2, 1, 1), pi / 2, 1e-12);
  EXPECT_NEAR(spherical_cap_volume(3, 1, 1), 2 * pi / 3, 1e-12);
  EXPECT_NEAR(spherical_cap_volume(2, 1, 1 - 1 / std::sqrt(2.0)), pi / 4 - 0.5, 1e-12);
  for (unsigned n = 2; n <= 6; ++n) {
    EXPECT_NEAR(spherical_cap_volume(n, 1.5, 1.5), omega(n) * std::pow(1.5, n) / 2, 1e-10);
    EXPECT_THROW(spherical_cap_volume(n, 1, 1.5), Error);
    EXPECT_THROW(spherical_cap_volume(n, 1, -0.1), Error);
    double prev = 0;
    for (double h = 0.05; h <= 1; h += 0.05) {
      const double v = spherical_cap_volume(n, 1, h);
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
  // 3-ball: pi h^2 (3r - h) / 3.
  for (double h : {0.1, 0.5, 1.3}) EXPECT_NEAR(spherical_cap_volume(3, 2, h), pi * h * h * (6 - h) / 3, 1e-12);
}

TEST(Cap, ConeLowerBoundOnSquare) {
  const VPolytope sq = testing::unit_square();
  const ConstantsReport c = theoretical_constants(sq);
  Rng rng(227);
  for (int trial = 0; trial < 200; ++trial) {
    const Point d = testing::random_point(rng, 2, -3, 3, 1);
    if (d.is_zero()) continue;
    const Scalar width = support_value(sq, d) - min_value(sq, d);
    const Scalar s = width * rational(1 + static_cast<long>(rng() % 64), 64);
    const Cap cp = cap(sq, d, s);
    EXPECT_GE(to_double(volume(cp.body)) * (1 + 1e-9), c.c_lower * cp.height * cp.height);
  }
}

TEST(SphericalCap, MonteCarloCrossCheck) {
  Rng rng(223);
  const double h = 0.6;
  const int samples = 400000;
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    const double x = 2 * uniform01(rng) - 1;
    const double y = 2 * uniform01(rng) - 1;
    const double z = 2 * uniform01(rng) - 1;
    if (x * x + y * y + z * z <= 1 && z >= 1 - h) ++hits;
  }
  const double p = static_cast<double>(hits) / samples;
  const double est = 8 * p;
  const double ci = 3 * 8 * std::sqrt(p * (1 - p) / samples);
  EXPECT_NEAR(est, spherical_cap_volume(3, 1, h), ci);
}

TEST(Omega, Table) {
  EXPECT_EQ(omega(0), 1);
  EXPECT_EQ(omega(1), 2);
  EXPECT_NEAR(omega(2), std::numbers::pi, 1e-15);
  EXPECT_NEAR(omega(3), 4 * std::numbers::pi / 3, 1e-15);
  EXPECT_NEAR(omega(4), std::numbers::pi * std::numbers::pi / 2, 1e-14);
  for (unsigned k = 1; k < 12; ++k) {
    EXPECT_NEAR(omega(k), std::pow(std::numbers::pi, k / 2.0) / std::tgamma(k / 2.0 + 1), 1e-12);
  }
}

TEST(Constants, Square) {
  const ConstantsReport c = theoretical_constants(testing::unit_square());
  EXPECT_EQ(c.n, 2u);
  EXPECT_EQ(c.diam_sq, 2);
  EXPECT_EQ(c.inradius.radius, q("1/2"));
  EXPECT_DOUBLE_EQ(c.c_upper_value, 12);
  EXPECT_NEAR(c.c_lower, std::pow(2.0, -4.5), 1e-15);
  EXPECT_FALSE(c.c_cap.has_value());
  ASSERT_EQ(c.omega.size(), 3u);
}

TEST(Constants, Doubling) {
  for (const VPolytope& g : {testing::unit_square(), testing::unit_simplex2(), testing::unit_cube()}) {
    const ConstantsReport a = theoretical_constants(g);
    const ConstantsReport b = theoretical_constants(scale(g, 2));
    // MV_1(G, B) is homogeneous of degree n - 1 in G.
    const double factor = std::ldexp(1.0, static_cast<int>(g.dim()) - 1);
    EXPECT_NEAR(b.c_upper_value, factor * a.c_upper_value, 1e-12 * b.c_upper_value);
    EXPECT_NEAR(b.c_lower, a.c_lower, 1e-9 * a.c_lower);
    EXPECT_NEAR(b.diam, 2 * a.diam, 1e-14);
  }
}

TEST(Constants, RollingBall) {
  // The 64-gon proxy of the unit disk; rolling radius 1.
  const VPolytope g = regular_polygon_proxy(64);
  const ConstantsReport c = theoretical_constants(g, 1.0);
  ASSERT_TRUE(c.c_cap && c.c_cap_quadrature && c.c_cap_displayed && c.c_smooth);
  EXPECT_NEAR(*c.c_cap_quadrature, *c.c_cap, 1e-10 * *c.c_cap);
  EXPECT_NEAR(*c.c_smooth, *c.c_cap / 2, 1e-15);
  for (unsigned n = 2; n <= 4; ++n) {
    for (double h = 0.01; h <= 1; h += 0.01) {
      // The unit ball has diameter 2.
      const double nd = n;
      const double small = omega(n - 1) * std::pow(2 / std::numbers::pi, nd) * std::pow(2.0, (nd + 1) / 2) / (nd + 1);
      const double large = 0.5 * omega(n) * std::pow(2.0, -(nd + 1) / 2);
      EXPECT_GE(spherical_cap_volume(n, 1, h), std::min(small, large) * std::pow(h, (nd + 1) / 2));
    }
  }
  EXPECT_THROW(theoretical_constants(g, 0.0), Error);
}

class ScalingFamily : public ::testing::TestWithParam<Placement> {};

TEST_P(ScalingFamily, ClosedForms) {
  for (const VPolytope& g : {testing::unit_square(), testing::unit_cube(), testing::unit_simplex2()}) {
    const auto pts = scaling_family(g, dyadic_schedule(1, 6), GetParam());
    ASSERT_EQ(pts.size(), 6u);
    const unsigned n = static_cast<unsigned>(g.dim());
    for (const auto& fp : pts) {
      EXPECT_TRUE(fp.closed_form_ok);
      // With r G inside G the union is G and d_G = Vol(G) sum_j (1 - r^j).
      Scalar dg = 0;
      for (unsigned j = 1; j <= n; ++j) dg += volume(g) * (1 - pow(fp.t, j));
      EXPECT_EQ(fp.dg, dg);
    }
  }
  EXPECT_THROW(scaling_family(testing::unit_square(), {q("3/2")}, GetParam()), Error);
}

INSTANTIATE_TEST_SUITE_P(Placements, ScalingFamily, ::testing::Values(Placement::chebyshev_center, Placement::vertex));

TEST(FamilyDirection, Values) {
  EXPECT_EQ(family_direction(testing::unit_square()), pt({1, 1}));
  EXPECT_EQ(family_direction(testing::unit_cube()), pt({1, 1, 1}));
  // (1,0) and (0,1) tie at distance^2 5/9 from the centroid; the larger one wins.
  EXPECT_EQ(family_direction(testing::unit_simplex2()), (Point{Scalar(1), q("-1/2")}));
  EXPECT_THROW(family_direction(hull({{1, 1}})), Error);
}

TEST(CapSliceFamily, FlagsOnSquare) {
  const VPolytope sq = testing::unit_square();
  const auto pts = cap_slice_family(sq, pt({1, 1}), dyadic_schedule(1, 8));
  for (const auto& fp : pts) {
    EXPECT_TRUE(fp.height_ok && fp.cap_volume_ok && fp.double_cap_volume_ok && fp.monotone_ok);
    EXPECT_EQ(fp.vol_cap, fp.t * fp.t / 2);
    EXPECT_LE(fp.dg, fp.rho);
  }
  EXPECT_THROW(cap_slice_family(sq, pt({1, 1}), {q("1/4"), q("1/2")}), Error);
}

TEST(PolygonProxy, Properties) {
  const VPolytope p = regular_polygon_proxy(256);
  EXPECT_EQ(p.vertices().size(), 256u);
  EXPECT_TRUE(p.is_full_dimensional());
  const Scalar bound = 1;
  for (const auto& v : p.vertices()) {
    EXPECT_LE(norm2(v), bound);
    EXPECT_GE(norm2(v), Scalar(1) - rational(1, 1 << 20));
    EXPECT_TRUE(contains(p, Point{-v[0], v[1]}));
    EXPECT_TRUE(contains(p, Point{v[1], v[0]}));
  }
  EXPECT_NEAR(to_double(volume(p)), 128 * std::sin(2 * std::numbers::pi / 256), 1e-6);
  EXPECT_THROW(regular_polygon_proxy(12), Error);
  EXPECT_NEAR(polygon_sagitta(4), 1 - std::sqrt(0.5), 1e-15);
}

}  // namespace
}  // namespace mvdist
