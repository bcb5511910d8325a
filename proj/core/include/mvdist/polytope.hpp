#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "mvdist/point.hpp"
#include "mvdist/scalar.hpp"

namespace mvdist {

/// Closed halfspace {x : normal . x >= offset}.
class Halfspace {
 public:
  Halfspace(Point normal, Scalar offset);

  const Point& normal() const { return normal_; }
  const Scalar& offset() const { return offset_; }

  /// normal . x - offset; non-negative exactly on the halfspace.
  Scalar slack(const Point& x) const { return dot(normal_, x) - offset_; }
  bool contains(const Point& x) const { return sgn(slack(x)) >= 0; }

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }

 private:
  Point normal_;
  Scalar offset_;
};

namespace detail {
struct PolytopeAccess;
}

/// Convex hull of finitely many points in R^2 or R^3, stored by its extreme
/// points (sorted lexicographically) together with its face structure.
/// Lower-dimensional polytopes (points, segments, planar polygons in R^3) are
/// ordinary values. Instances are immutable.
class VPolytope {
 public:
  using Cycle = std::vector<std::size_t>;
  using Edge = std::array<std::size_t, 2>;

  std::size_t dim() const { return dim_; }
  int intrinsic_dim() const { return intrinsic_dim_; }
  bool is_full_dimensional() const { return intrinsic_dim_ == static_cast<int>(dim_); }

  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }

  /// Inward facet halfspaces with primitive integer normals; empty unless full-dimensional.
  /// In R^3 facet i is bounded by polygons()[i]; in R^2 facet i is the edge
  /// from polygons()[0][i] to its successor.
  const std::vector<Halfspace>& facets() const { return facets_; }

  /// Two-dimensional faces as vertex cycles, counter-clockwise seen from
  /// outside (R^3) or in the plane (R^2).
  const std::vector<Cycle>& polygons() const { return polygons_; }

  /// One-dimensional faces, index pairs with first < second.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const VPolytope& a, const VPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const VPolytope& a, const VPolytope& b) { return !(a == b); }

 private:
  friend struct detail::PolytopeAccess;
  VPolytope() = default;

  std::size_t dim_ = 0;
  int intrinsic_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Cycle> polygons_;
  std::vector<Edge> edges_;
};

/// Canonical hull of a nonempty point set; dim must be 2 or 3 (higher
/// dimensions are handled by the estimator on raw vertex sets).
VPolytope convex_hull(std::vector<Point> points, std::size_t dim);
VPolytope convex_hull(std::vector<Point> points);

VPolytope point_body(const Point& p);

/// Closed convex hull of the union.
VPolytope hull_union(const VPolytope& a, const VPolytope& b);

/// Exact n-dimensional volume; zero for lower-dimensional polytopes.
Scalar volume(const VPolytope& p);

/// Boundary measure of a full-dimensional polytope: perimeter in R^2, facet area sum in R^3.
RadicalSum surface_measure(const VPolytope& p);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

/// Hull of all pairwise vertex sums; independent of the planar edge-merge used by minkowski_sum.
VPolytope minkowski_sum_by_hull(const VPolytope& p, const VPolytope& q);

/// max of d . v over the polytope.
Scalar support_value(const VPolytope& p, const Point& d);
/// min of d . v over the polytope.
Scalar min_value(const VPolytope& p, const Point& d);

VPolytope translate(const VPolytope& p, const Point& offset);
/// t * P for t >= 0 (t = 0 gives the origin).
VPolytope scale(const VPolytope& p, const Scalar& t);

bool contains(const VPolytope& p, const Point& x);
bool is_subset(const VPolytope& inner, const VPolytope& outer);

/// Mean of the vertices; interior (relative interior) point of the polytope.
Point vertex_centroid(const VPolytope& p);

struct BoundingBox {
  Point lo;
  Point hi;
};
BoundingBox bounding_box(const VPolytope& p);

}  // namespace mvdist
