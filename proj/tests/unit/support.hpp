#pragma once

#include <string>
#include <vector>

#include "mvdist/polytope.hpp"
#include "mvdist/random.hpp"

namespace mvdist::testing {

inline Scalar q(const char* s) { return parse_scalar(s); }

inline Point pt(std::initializer_list<long> c) {
  Point p(c.size());
  std::size_t i = 0;
  for (long v : c) p[i++] = v;
  return p;
}

inline VPolytope hull(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<Point> v;
  for (auto c : pts) v.push_back(pt(c));
  return convex_hull(std::move(v));
}

inline VPolytope unit_square() { return hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
inline VPolytope unit_simplex2() { return hull({{0, 0}, {1, 0}, {0, 1}}); }
inline VPolytope unit_cube() {
  return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}
inline VPolytope unit_simplex3() { return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

/// Uniform rational in [lo, hi] on a grid of step 1/den.
inline Scalar grid_value(Rng& rng, long lo, long hi, long den) {
  const auto span = static_cast<std::uint64_t>((hi - lo) * den);
  return Scalar(lo) + rational(static_cast<long>(rng() % (span + 1)), den);
}

inline Point random_point(Rng& rng, std::size_t dim, long lo = -4, long hi = 4, long den = 8) {
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = grid_value(rng, lo, hi, den);
  return p;
}

/// Hull of 1..max_points random grid points: often degenerate in low counts.
inline VPolytope random_polytope(Rng& rng, std::size_t dim, std::size_t max_points = 10, long lo = -4, long hi = 4) {
  const std::size_t k = 1 + rng() % max_points;
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) pts.push_back(random_point(rng, dim, lo, hi));
  return convex_hull(std::move(pts), dim);
}

/// Full-dimensional random polytope.
inline VPolytope random_body(Rng& rng, std::size_t dim, std::size_t max_points = 10, long lo = -4, long hi = 4) {
  for (;;) {
    std::vector<Point> pts;
    const std::size_t k = dim + 1 + rng() % max_points;
    for (std::size_t i = 0; i < k; ++i) pts.push_back(random_point(rng, dim, lo, hi));
    VPolytope p = convex_hull(std::move(pts), dim);
    if (p.is_full_dimensional()) return p;
  }
}

inline std::string data_file(const std::string& name) { return std::string(MVDIST_DATA_DIR) + "/" + name; }

}  // namespace mvdist::testing
