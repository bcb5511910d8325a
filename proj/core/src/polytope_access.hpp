#pragma once

#include <utility>
#include <vector>

#include "mvdist/polytope.hpp"

namespace mvdist::detail {

struct PolytopeAccess {
  static VPolytope make(std::size_t dim, int intrinsic_dim, std::vector<Point> vertices,
                        std::vector<Halfspace> facets, std::vector<VPolytope::Cycle> polygons,
                        std::vector<VPolytope::Edge> edges) {
    VPolytope p;
    p.dim_ = dim;
    p.intrinsic_dim_ = intrinsic_dim;
    p.vertices_ = std::move(vertices);
    p.facets_ = std::move(facets);
    p.polygons_ = std::move(polygons);
    p.edges_ = std::move(edges);
    return p;
  }

  static std::vector<Point>& vertices(VPolytope& p) { return p.vertices_; }
  static std::vector<Halfspace>& facets(VPolytope& p) { return p.facets_; }
};

}  // namespace mvdist::detail
