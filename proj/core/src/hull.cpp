// Exact convex hulls in R^2 and R^3.
//
// Coordinates are brought to a common denominator first. Small integers use
// int64 coordinates with __int128 determinants, larger ones fall back to GMP
// integers, and very large common denominators to plain rationals. All three
// paths share the same templated predicates and return index structures only.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "mvdist/error.hpp"
#include "mvdist/polytope.hpp"
#include "polytope_access.hpp"

namespace mvdist {
namespace {

template <class T>
struct Arith {
  using Wide = T;
  static Wide mul(const T& a, const T& b) { return Wide(a * b); }
  static Wide mulw(const Wide& a, const T& b) { return Wide(a * b); }
  static int sign(const Wide& w) { return sgn(w); }
};

template <>
struct Arith<std::int64_t> {
  using Wide = __int128;
  static Wide mul(std::int64_t a, std::int64_t b) { return static_cast<Wide>(a) * b; }
  static Wide mulw(Wide a, std::int64_t b) { return a * b; }
  static int sign(Wide w) { return (w > 0) - (w < 0); }
};

template <class T>
using P2 = std::array<T, 2>;
template <class T>
using P3 = std::array<T, 3>;

template <class T>
int orient2(const P2<T>& a, const P2<T>& b, const P2<T>& c) {
  using A = Arith<T>;
  const T bx = b[0] - a[0];
  const T by = b[1] - a[1];
  const T cx = c[0] - a[0];
  const T cy = c[1] - a[1];
  typename A::Wide w = A::mul(bx, cy);
  w -= A::mul(by, cx);
  return A::sign(w);
}

/// Sign of det[b-a, c-a, d-a]; positive when d lies on the side the
/// right-handed normal of (a, b, c) points to.
template <class T>
int orient3(const P3<T>& a, const P3<T>& b, const P3<T>& c, const P3<T>& d) {
  using A = Arith<T>;
  using W = typename A::Wide;
  const T b0 = b[0] - a[0], b1 = b[1] - a[1], b2 = b[2] - a[2];
  const T c0 = c[0] - a[0], c1 = c[1] - a[1], c2 = c[2] - a[2];
  const T d0 = d[0] - a[0], d1 = d[1] - a[1], d2 = d[2] - a[2];
  W m0 = A::mul(c1, d2);
  m0 -= A::mul(c2, d1);
  W m1 = A::mul(c0, d2);
  m1 -= A::mul(c2, d0);
  W m2 = A::mul(c0, d1);
  m2 -= A::mul(c1, d0);
  W det = A::mulw(m0, b0);
  det -= A::mulw(m1, b1);
  det += A::mulw(m2, b2);
  return A::sign(det);
}

template <class T>
P2<T> project(const P3<T>& p, int drop) {
  return {p[(drop + 1) % 3], p[(drop + 2) % 3]};
}

/// Counter-clockwise strictly convex hull of distinct points (monotone chain).
/// Returns one index for a single point and two for a collinear set.
template <class T>
std::vector<std::size_t> hull2(const std::vector<P2<T>>& pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (pts[i][0] != pts[j][0]) return pts[i][0] < pts[j][0];
    return pts[i][1] < pts[j][1];
  });
  if (order.size() <= 2) return order;

  std::vector<std::size_t> h(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && orient2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t r = order.size() - 1; r-- > 0;) {
    const std::size_t i = order[r];
    while (k >= lower && orient2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

struct HullIndices {
  int dim = 0;
  /// dim 0/1: vertex list; dim 2: one cycle; dim 3: facet cycles (ccw from outside).
  std::vector<std::vector<std::size_t>> cycles;
};

template <class T>
HullIndices hull_planar_points(const std::vector<P2<T>>& pts) {
  HullIndices out;
  auto cycle = hull2(pts);
  out.dim = cycle.size() >= 3 ? 2 : static_cast<int>(cycle.size()) - 1;
  out.cycles.push_back(std::move(cycle));
  return out;
}

template <class T>
bool collinear3(const P3<T>& a, const P3<T>& b, const P3<T>& c) {
  for (int k = 0; k < 3; ++k) {
    if (orient2(project(a, k), project(b, k), project(c, k)) != 0) return false;
  }
  return true;
}

/// Hull of coplanar (non-collinear) points given by index; the cycle is
/// counter-clockwise in the projection that drops axis `drop`.
template <class T>
std::vector<std::size_t> planar_cycle(const std::vector<P3<T>>& pts, const std::vector<std::size_t>& ids, int drop) {
  std::vector<P2<T>> proj;
  proj.reserve(ids.size());
  for (std::size_t i : ids) proj.push_back(project(pts[i], drop));
  auto local = hull2(proj);
  for (auto& i : local) i = ids[i];
  return local;
}

/// An axis whose removal keeps the plane through a, b, c non-degenerate, and
/// the orientation sign of (a, b, c) in that projection.
template <class T>
std::pair<int, int> projection_axis(const P3<T>& a, const P3<T>& b, const P3<T>& c) {
  for (int k = 0; k < 3; ++k) {
    const int s = orient2(project(a, k), project(b, k), project(c, k));
    if (s != 0) return {k, s};
  }
  throw Error(ErrorKind::internal, "degenerate facet triangle");
}

template <class T>
HullIndices hull_space_points(const std::vector<P3<T>>& pts) {
  HullIndices out;
  const std::size_t n = pts.size();
  if (n == 1) {
    out.dim = 0;
    out.cycles.push_back({0});
    return out;
  }
  std::size_t i2 = n;
  for (std::size_t k = 2; k < n; ++k) {
    if (!collinear3(pts[0], pts[1], pts[k])) {
      i2 = k;
      break;
    }
  }
  if (i2 == n) {
    // Sorted input: the extremes of a collinear set are first and last.
    out.dim = 1;
    out.cycles.push_back({0, n - 1});
    return out;
  }
  std::size_t i3 = n;
  for (std::size_t k = 2; k < n; ++k) {
    if (orient3(pts[0], pts[1], pts[i2], pts[k]) != 0) {
      i3 = k;
      break;
    }
  }
  if (i3 == n) {
    out.dim = 2;
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    const auto [drop, s] = projection_axis(pts[0], pts[1], pts[i2]);
    (void)s;
    out.cycles.push_back(planar_cycle(pts, all, drop));
    return out;
  }

  struct Tri {
    std::size_t v[3];
  };
  std::vector<Tri> faces;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t opposite) {
    if (orient3(pts[a], pts[b], pts[c], pts[opposite]) > 0) std::swap(b, c);
    faces.push_back({{a, b, c}});
  };
  const std::size_t t0 = 0, t1 = 1;
  add_face(t0, t1, i2, i3);
  add_face(t0, t1, i3, i2);
  add_face(t0, i2, i3, t1);
  add_face(t1, i2, i3, t0);

  auto key = [](std::size_t a, std::size_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
  std::vector<char> visible;
  std::unordered_set<std::uint64_t> visible_edges;
  std::vector<Tri> next;
  for (std::size_t p = 2; p < n; ++p) {
    if (p == i2 || p == i3) continue;
    visible.assign(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const auto& t = faces[f];
      if (orient3(pts[t.v[0]], pts[t.v[1]], pts[t.v[2]], pts[p]) > 0) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;
    visible_edges.clear();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      for (int e = 0; e < 3; ++e) visible_edges.insert(key(faces[f].v[e], faces[f].v[(e + 1) % 3]));
    }
    next.clear();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) {
        next.push_back(faces[f]);
        continue;
      }
      for (int e = 0; e < 3; ++e) {
        const std::size_t a = faces[f].v[e];
        const std::size_t b = faces[f].v[(e + 1) % 3];
        if (!visible_edges.count(key(b, a))) next.push_back({{a, b, p}});
      }
    }
    faces.swap(next);
  }

  // Merge coplanar neighbouring triangles into facets.
  std::unordered_map<std::uint64_t, std::size_t> edge_owner;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int e = 0; e < 3; ++e) edge_owner[key(faces[f].v[e], faces[f].v[(e + 1) % 3])] = f;
  }
  std::vector<std::size_t> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& t = faces[f];
    for (int e = 0; e < 3; ++e) {
      const auto it = edge_owner.find(key(t.v[(e + 1) % 3], t.v[e]));
      if (it == edge_owner.end()) throw Error(ErrorKind::internal, "open hull surface");
      const std::size_t g = it->second;
      const auto& u = faces[g];
      std::size_t third = u.v[0];
      for (std::size_t v : u.v) {
        if (v != t.v[e] && v != t.v[(e + 1) % 3]) third = v;
      }
      if (orient3(pts[t.v[0]], pts[t.v[1]], pts[t.v[2]], pts[third]) == 0) parent[find(f)] = find(g);
    }
  }
  std::vector<std::vector<std::size_t>> group_vertices;
  std::vector<std::size_t> group_rep;
  std::unordered_map<std::size_t, std::size_t> group_of_root;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const std::size_t r = find(f);
    auto [it, inserted] = group_of_root.try_emplace(r, group_vertices.size());
    if (inserted) {
      group_vertices.emplace_back();
      group_rep.push_back(f);
    }
    auto& vs = group_vertices[it->second];
    vs.insert(vs.end(), faces[f].v, faces[f].v + 3);
  }
  out.dim = 3;
  for (std::size_t g = 0; g < group_vertices.size(); ++g) {
    auto& vs = group_vertices[g];
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const auto& t = faces[group_rep[g]];
    const auto [drop, s] = projection_axis(pts[t.v[0]], pts[t.v[1]], pts[t.v[2]]);
    auto cycle = planar_cycle(pts, vs, drop);
    if (s < 0) std::reverse(cycle.begin(), cycle.end());
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 39;
constexpr std::size_t kMaxDenominatorBits = 512;

template <class T, class Convert>
HullIndices hull_with(const std::vector<Point>& pts, std::size_t dim, Convert convert) {
  if (dim == 2) {
    std::vector<P2<T>> q(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) q[i] = {convert(pts[i][0]), convert(pts[i][1])};
    return hull_planar_points(q);
  }
  std::vector<P3<T>> q(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) q[i] = {convert(pts[i][0]), convert(pts[i][1]), convert(pts[i][2])};
  return hull_space_points(q);
}

HullIndices hull_indices(const std::vector<Point>& pts, std::size_t dim) {
  mpz_class common = 1;
  for (const auto& p : pts) {
    for (const auto& c : p) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  }
  if (mpz_sizeinbase(common.get_mpz_t(), 2) > kMaxDenominatorBits) {
    return hull_with<Scalar>(pts, dim, [](const Scalar& c) { return c; });
  }
  bool small = true;
  mpz_class limit(static_cast<long>(kSmallLimit));
  for (const auto& p : pts) {
    for (const auto& c : p) {
      mpz_class v = c.get_num() * (common / c.get_den());
      if (abs(v) >= limit) small = false;
    }
  }
  auto to_mpz = [&common](const Scalar& c) { return mpz_class(c.get_num() * (common / c.get_den())); };
  if (small) {
    return hull_with<std::int64_t>(pts, dim, [&](const Scalar& c) { return to_mpz(c).get_si(); });
  }
  return hull_with<mpz_class>(pts, dim, to_mpz);
}

Halfspace edge_halfspace(const Point& a, const Point& b) {
  // Interior lies to the left of a -> b.
  Point d{a[1] - b[1], b[0] - a[0]};
  d = primitive_direction(d);
  Scalar c = dot(d, a);
  return Halfspace(std::move(d), std::move(c));
}

Halfspace facet_halfspace(const std::vector<Point>& vs, const VPolytope::Cycle& cycle) {
  const Point outward = cross(vs[cycle[1]] - vs[cycle[0]], vs[cycle[2]] - vs[cycle[0]]);
  Point d = primitive_direction(-outward);
  Scalar c = dot(d, vs[cycle[0]]);
  return Halfspace(std::move(d), std::move(c));
}

void rotate_to_min(VPolytope::Cycle& c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
}

}  // namespace

VPolytope convex_hull(std::vector<Point> points, std::size_t dim) {
  if (dim != 2 && dim != 3) {
    throw Error(ErrorKind::domain, "exact hulls are limited to dimensions 2 and 3 (got " + std::to_string(dim) +
                                       "); use the estimator for higher dimensions");
  }
  if (points.empty()) throw Error(ErrorKind::domain, "convex hull of an empty point set");
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorKind::domain, "point dimension does not match ambient dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  HullIndices h = hull_indices(points, dim);

  std::vector<std::size_t> used;
  for (const auto& c : h.cycles) used.insert(used.end(), c.begin(), c.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::size_t> remap(points.size(), 0);
  std::vector<Point> vertices;
  vertices.reserve(used.size());
  for (std::size_t i = 0; i < used.size(); ++i) {
    remap[used[i]] = i;
    vertices.push_back(std::move(points[used[i]]));
  }

  std::vector<VPolytope::Cycle> polygons;
  std::vector<VPolytope::Edge> edges;
  std::vector<Halfspace> facets;
  if (h.dim == 1) {
    edges.push_back({0, 1});
  } else if (h.dim >= 2) {
    for (auto c : h.cycles) {
      for (auto& i : c) i = remap[i];
      rotate_to_min(c);
      polygons.push_back(std::move(c));
    }
    std::sort(polygons.begin(), polygons.end());
    for (const auto& c : polygons) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t a = c[i], b = c[(i + 1) % c.size()];
        edges.push_back({std::min(a, b), std::max(a, b)});
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (h.dim == 2 && dim == 2) {
      const auto& c = polygons.front();
      for (std::size_t i = 0; i < c.size(); ++i) facets.push_back(edge_halfspace(vertices[c[i]], vertices[c[(i + 1) % c.size()]]));
    } else if (h.dim == 3) {
      for (const auto& c : polygons) facets.push_back(facet_halfspace(vertices, c));
    }
  }
  return detail::PolytopeAccess::make(dim, h.dim, std::move(vertices), std::move(facets), std::move(polygons),
                                      std::move(edges));
}

VPolytope convex_hull(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorKind::domain, "convex hull of an empty point set");
  const std::size_t dim = points.front().size();
  return convex_hull(std::move(points), dim);
}

}  // namespace mvdist
