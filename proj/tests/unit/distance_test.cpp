#include <gtest/gtest.h>

#include "mvdist/distance.hpp"
#include "support.hpp"

namespace mvdist {
namespace {

using testing::hull;
using testing::pt;
using testing::q;

/// Min squared distance from x to a dense grid of convex combinations of P's vertices.
Scalar sampled_distance2(const Point& x, const VPolytope& p, Rng& rng, int samples) {
  Scalar best = distance2(x, p.vertex(0));
  for (int s = 0; s < samples; ++s) {
    Point y(p.dim());
    Scalar total = 0;
    std::vector<Scalar> w;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      w.push_back(Scalar(static_cast<long>(rng() % 4 == 0 ? 0 : rng() % 16)));
      total += w.back();
    }
    if (sgn(total) == 0) continue;
    for (std::size_t i = 0; i < w.size(); ++i) y += p.vertex(i) * (w[i] / total);
    const Scalar d = distance2(x, y);
    if (d < best) best = d;
  }
  return best;
}

TEST(NearestPoint, Examples) {
  const VPolytope sq = testing::unit_square();
  const Point inside{q("1/3"), q("2/3")};
  EXPECT_EQ(nearest_point(inside, sq).point, inside);
  EXPECT_EQ(nearest_point(inside, sq).distance2, 0);
  auto face = nearest_point(pt({2, 0}), sq);
  EXPECT_EQ(face.point, pt({1, 0}));
  EXPECT_EQ(face.distance2, 1);
  auto vertex = nearest_point(pt({2, 2}), sq);
  EXPECT_EQ(vertex.point, pt({1, 1}));
  EXPECT_EQ(vertex.distance2, 2);
}

TEST(NearestPoint, SegmentClosedForm) {
  // Distance from (0, 1) to the segment [(-1, 0), (1, 0)] and to [(1, 0), (3, 0)].
  EXPECT_EQ(nearest_point(pt({0, 1}), hull({{-1, 0}, {1, 0}})).distance2, 1);
  EXPECT_EQ(nearest_point(pt({0, 1}), hull({{1, 0}, {3, 0}})).distance2, 2);
  const auto d = nearest_point(pt({0, 0, 3}), hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}}));
  EXPECT_EQ(d.point, pt({0, 0, 0}));
  EXPECT_EQ(d.distance2, 9);
  const auto e = nearest_point(Point{q("1/2"), q("1/2"), Scalar(5)}, hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}}));
  EXPECT_EQ(e.distance2, 25);
}

class NearestProperty : public ::testing::TestWithParam<std::size_t> {};

TEST_P(NearestProperty, AgreesWithDenseSampling) {
  const std::size_t dim = GetParam();
  Rng rng(stream_seed(41, dim));
  for (int trial = 0; trial < 60; ++trial) {
    const VPolytope p = testing::random_polytope(rng, dim, 8, -2, 2);
    const Point x = testing::random_point(rng, dim, -4, 4, 4);
    const NearestPoint n = nearest_point(x, p);
    EXPECT_TRUE(contains(p, n.point));
    EXPECT_EQ(distance2(x, n.point), n.distance2);
    // The minimizer is never beaten by sampled points or vertices.
    EXPECT_LE(n.distance2, sampled_distance2(x, p, rng, 300));
    for (const auto& v : p.vertices()) {
      // Variational inequality: (x - y*) . (v - y*) <= 0.
      EXPECT_LE(sgn(dot(x - n.point, v - n.point)), 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, NearestProperty, ::testing::Values(2, 3));

TEST(Hausdorff, Examples) {
  const VPolytope sq = testing::unit_square();
  EXPECT_EQ(hausdorff(sq, sq).value_sq, 0);
  EXPECT_FALSE(hausdorff(sq, sq).support.has_value());
  EXPECT_EQ(hausdorff(sq, hull({{0, 0}})).value_sq, 2);
  // G = [0,1]^2 against rG with r = 1/2: M (1 - r) with M = sqrt 2.
  const HausdorffWitness w = hausdorff(sq, scale(sq, q("1/2")));
  EXPECT_EQ(w.value_sq, q("1/2"));
  EXPECT_DOUBLE_EQ(w.value, std::sqrt(0.5));
}

TEST(Hausdorff, WitnessAndSupportingHalfspace) {
  Rng rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const VPolytope k = testing::random_polytope(rng, dim, 8);
    const VPolytope l = testing::random_polytope(rng, dim, 8);
    const HausdorffWitness w = hausdorff(k, l);
    EXPECT_TRUE(contains(k, w.p));
    EXPECT_TRUE(contains(l, w.q));
    EXPECT_EQ(distance2(w.p, w.q), w.value_sq);
    if (k == l) {
      EXPECT_EQ(w.value_sq, 0);
      continue;
    }
    ASSERT_TRUE(w.support.has_value());
    const Halfspace& h = *w.support;
    // Normal parallel to q - p.
    const Point pq = w.q - w.p;
    EXPECT_EQ(dot(h.normal(), pq) * dot(h.normal(), pq), norm2(h.normal()) * norm2(pq));
    const VPolytope& inside = w.support_contains_first ? k : l;
    const Point& on = w.support_contains_first ? w.p : w.q;
    const Point& far = w.support_contains_first ? w.q : w.p;
    for (const auto& v : inside.vertices()) EXPECT_TRUE(h.contains(v));
    EXPECT_EQ(sgn(h.slack(on)), 0);
    EXPECT_LT(sgn(h.slack(far)), 0);
    // The far point is exactly d_H away from the other body.
    EXPECT_EQ(nearest_point(far, inside).distance2, w.value_sq);
  }
}

TEST(Hausdorff, MetricProperties) {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const VPolytope a = testing::random_polytope(rng, dim, 6);
    const VPolytope b = testing::random_polytope(rng, dim, 6);
    const VPolytope c = testing::random_polytope(rng, dim, 6);
    const HausdorffWitness ab = hausdorff(a, b);
    EXPECT_EQ(ab.value_sq, hausdorff(b, a).value_sq);
    EXPECT_EQ(sgn(ab.value_sq) == 0, a == b);
    EXPECT_EQ(hausdorff(a, a).value_sq, 0);
    EXPECT_LE(ab.value, (hausdorff(a, c).value + hausdorff(c, b).value) * (1 + 1e-12));
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter2(testing::unit_square()), 2);
  EXPECT_EQ(diameter2(hull({{0, 0}, {3, 4}})), 25);
  EXPECT_EQ(diameter2(testing::unit_cube()), 3);
  EXPECT_EQ(diameter2(hull({{1, 1}})), 0);
}

}  // namespace
}  // namespace mvdist
