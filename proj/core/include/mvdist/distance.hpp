#pragma once

#include <optional>

#include "mvdist/polytope.hpp"

namespace mvdist {

struct NearestPoint {
  Point point;
  Scalar distance2;
};

/// Exact Euclidean projection of x onto P, found by projecting onto the
/// affine hull of every face and keeping the closest projection that lands
/// inside its face.
NearestPoint nearest_point(const Point& x, const VPolytope& p);

/// Hausdorff distance with a realizing pair p in K, q in L, |q - p| = value.
struct HausdorffWitness {
  Scalar value_sq;
  double value = 0;
  Point p;
  Point q;
  /// Hyperplane through the nearest point, orthogonal to [p, q]. It contains
  /// K when `support_contains_first`, otherwise L. Absent when K == L.
  std::optional<Halfspace> support;
  bool support_contains_first = false;
};

HausdorffWitness hausdorff(const VPolytope& k, const VPolytope& l);

/// Squared diameter (max squared vertex distance).
Scalar diameter2(const VPolytope& p);

}  // namespace mvdist
