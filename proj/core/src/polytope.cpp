#include "mvdist/polytope.hpp"

#include <algorithm>

#include "mvdist/distance.hpp"
#include "mvdist/error.hpp"
#include "polytope_access.hpp"

namespace mvdist {

Point primitive_direction(const Point& v) {
  if (v.is_zero()) throw Error(ErrorKind::domain, "zero direction");
  mpz_class common = 1;
  for (const auto& c : v) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& c : v) {
    ints.push_back(c.get_num() * (common / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& i : ints) out.emplace_back(mpz_class(i / g));
  return Point(std::move(out));
}

std::vector<double> to_doubles(const Point& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(to_double(c));
  return out;
}

Halfspace::Halfspace(Point normal, Scalar offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
  if (normal_.is_zero()) throw Error(ErrorKind::domain, "halfspace with zero normal");
}

VPolytope point_body(const Point& p) { return convex_hull({p}, p.size()); }

VPolytope hull_union(const VPolytope& a, const VPolytope& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::domain, "dimension mismatch in hull union");
  std::vector<Point> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return convex_hull(std::move(pts), a.dim());
}

Scalar volume(const VPolytope& p) {
  if (!p.is_full_dimensional()) return 0;
  const auto& v = p.vertices();
  Scalar total = 0;
  if (p.dim() == 2) {
    const auto& c = p.polygons().front();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Point& a = v[c[i]];
      const Point& b = v[c[(i + 1) % c.size()]];
      total += a[0] * b[1] - a[1] * b[0];
    }
    return total / 2;
  }
  const Point& o = v.front();
  for (const auto& c : p.polygons()) {
    const Point a = v[c[0]] - o;
    for (std::size_t i = 1; i + 1 < c.size(); ++i) total += dot(a, cross(v[c[i]] - o, v[c[i + 1]] - o));
  }
  return total / 6;
}

RadicalSum surface_measure(const VPolytope& p) {
  if (!p.is_full_dimensional()) {
    throw Error(ErrorKind::domain, "surface measure requires a full-dimensional polytope");
  }
  const auto& v = p.vertices();
  RadicalSum total;
  if (p.dim() == 2) {
    for (const auto& e : p.edges()) total += RadicalSum::sqrt_of(distance2(v[e[0]], v[e[1]]));
    return total;
  }
  for (const auto& c : p.polygons()) {
    Point twice_area(3);
    for (std::size_t i = 1; i + 1 < c.size(); ++i) twice_area += cross(v[c[i]] - v[c[0]], v[c[i + 1]] - v[c[0]]);
    total += RadicalSum::sqrt_of(norm2(twice_area)) * Scalar(1, 2);
  }
  return total;
}

namespace {

/// Counter-clockwise boundary walk starting at the lowest (then leftmost) vertex.
std::vector<Point> planar_walk(const VPolytope& p) {
  std::vector<Point> cyc;
  if (p.intrinsic_dim() == 2) {
    for (std::size_t i : p.polygons().front()) cyc.push_back(p.vertex(i));
  } else {
    cyc = p.vertices();
  }
  auto lower = [](const Point& a, const Point& b) {
    if (a[1] != b[1]) return a[1] < b[1];
    return a[0] < b[0];
  };
  std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end(), lower), cyc.end());
  return cyc;
}

/// Polar-angle order on edge vectors, angles taken in [0, 2*pi).
bool angle_less(const Point& u, const Point& v) {
  auto half = [](const Point& w) { return sgn(w[1]) < 0 || (sgn(w[1]) == 0 && sgn(w[0]) < 0) ? 1 : 0; };
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return sgn(u[0] * v[1] - u[1] * v[0]) > 0;
}

VPolytope minkowski_sum_planar(const VPolytope& p, const VPolytope& q) {
  const auto a = planar_walk(p);
  const auto b = planar_walk(q);
  auto edges_of = [](const std::vector<Point>& c) {
    std::vector<Point> e;
    if (c.size() < 2) return e;
    for (std::size_t i = 0; i < c.size(); ++i) e.push_back(c[(i + 1) % c.size()] - c[i]);
    return e;
  };
  const auto ea = edges_of(a);
  const auto eb = edges_of(b);
  std::vector<Point> out;
  out.reserve(ea.size() + eb.size() + 1);
  Point cur = a.front() + b.front();
  out.push_back(cur);
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && angle_less(ea[i], eb[j]))) {
      cur += ea[i++];
    } else if (i == ea.size() || angle_less(eb[j], ea[i])) {
      cur += eb[j++];
    } else {
      cur += ea[i++];
      cur += eb[j++];
    }
    out.push_back(cur);
  }
  return convex_hull(std::move(out), 2);
}

}  // namespace

VPolytope minkowski_sum_by_hull(const VPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::domain, "dimension mismatch in Minkowski sum");
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return convex_hull(std::move(sums), p.dim());
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::domain, "dimension mismatch in Minkowski sum");
  if (p.dim() == 2) return minkowski_sum_planar(p, q);
  return minkowski_sum_by_hull(p, q);
}

Scalar support_value(const VPolytope& p, const Point& d) {
  if (d.size() != p.dim()) throw Error(ErrorKind::domain, "direction dimension mismatch");
  if (d.is_zero()) throw Error(ErrorKind::domain, "support value in the zero direction");
  Scalar best = dot(d, p.vertex(0));
  for (const auto& v : p.vertices()) {
    Scalar s = dot(d, v);
    if (s > best) best = std::move(s);
  }
  return best;
}

Scalar min_value(const VPolytope& p, const Point& d) { return -support_value(p, -d); }

VPolytope translate(const VPolytope& p, const Point& offset) {
  if (offset.size() != p.dim()) throw Error(ErrorKind::domain, "translation dimension mismatch");
  VPolytope out = p;
  for (auto& v : detail::PolytopeAccess::vertices(out)) v += offset;
  for (auto& f : detail::PolytopeAccess::facets(out)) f = Halfspace(f.normal(), f.offset() + dot(f.normal(), offset));
  return out;
}

VPolytope scale(const VPolytope& p, const Scalar& t) {
  if (sgn(t) < 0) throw Error(ErrorKind::domain, "negative scale factor");
  if (sgn(t) == 0) return point_body(Point(p.dim()));
  VPolytope out = p;
  for (auto& v : detail::PolytopeAccess::vertices(out)) v *= t;
  for (auto& f : detail::PolytopeAccess::facets(out)) f = Halfspace(f.normal(), f.offset() * t);
  return out;
}

bool contains(const VPolytope& p, const Point& x) {
  if (x.size() != p.dim()) throw Error(ErrorKind::domain, "point dimension mismatch");
  if (p.is_full_dimensional()) {
    return std::all_of(p.facets().begin(), p.facets().end(), [&](const Halfspace& h) { return h.contains(x); });
  }
  return sgn(nearest_point(x, p).distance2) == 0;
}

bool is_subset(const VPolytope& inner, const VPolytope& outer) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Point& v) { return contains(outer, v); });
}

Point vertex_centroid(const VPolytope& p) {
  Point c(p.dim());
  for (const auto& v : p.vertices()) c += v;
  c *= Scalar(1) / Scalar(static_cast<long>(p.vertices().size()));
  return c;
}

BoundingBox bounding_box(const VPolytope& p) {
  BoundingBox box{p.vertex(0), p.vertex(0)};
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < box.lo[i]) box.lo[i] = v[i];
      if (v[i] > box.hi[i]) box.hi[i] = v[i];
    }
  }
  return box;
}

}  // namespace mvdist
