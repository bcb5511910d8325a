#include "mvdist/distance.hpp"

#include "mvdist/error.hpp"

namespace mvdist {
namespace {

bool inside_polygon(const VPolytope& p, const VPolytope::Cycle& c, const Point& normal, const Point& y) {
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Point& a = v[c[i]];
    const Point& b = v[c[(i + 1) % c.size()]];
    if (sgn(dot(cross(b - a, y - a), normal)) < 0) return false;
  }
  return true;
}

}  // namespace

NearestPoint nearest_point(const Point& x, const VPolytope& p) {
  if (x.size() != p.dim()) throw Error(ErrorKind::domain, "point dimension mismatch");
  if (p.is_full_dimensional() && contains(p, x)) return {x, 0};

  std::optional<NearestPoint> best;
  auto consider = [&](Point y) {
    Scalar d = distance2(x, y);
    if (!best || d < best->distance2) best = NearestPoint{std::move(y), std::move(d)};
  };

  const auto& v = p.vertices();
  for (const auto& w : v) consider(w);
  for (const auto& [i, j] : p.edges()) {
    const Point e = v[j] - v[i];
    const Scalar lambda = dot(x - v[i], e) / norm2(e);
    if (sgn(lambda) > 0 && lambda < 1) consider(v[i] + e * lambda);
  }
  if (p.dim() == 3) {
    for (const auto& c : p.polygons()) {
      const Point normal = cross(v[c[1]] - v[c[0]], v[c[2]] - v[c[0]]);
      Point y = x - normal * (dot(normal, x - v[c[0]]) / norm2(normal));
      if (inside_polygon(p, c, normal, y)) consider(std::move(y));
    }
  }
  return std::move(*best);
}

HausdorffWitness hausdorff(const VPolytope& k, const VPolytope& l) {
  if (k.dim() != l.dim()) throw Error(ErrorKind::domain, "dimension mismatch in Hausdorff distance");
  HausdorffWitness w;
  w.value_sq = -1;
  bool from_k = true;
  for (const auto& x : k.vertices()) {
    NearestPoint n = nearest_point(x, l);
    if (n.distance2 > w.value_sq) {
      w.value_sq = n.distance2;
      w.p = x;
      w.q = std::move(n.point);
      from_k = true;
    }
  }
  for (const auto& y : l.vertices()) {
    NearestPoint n = nearest_point(y, k);
    if (n.distance2 > w.value_sq) {
      w.value_sq = n.distance2;
      w.p = std::move(n.point);
      w.q = y;
      from_k = false;
    }
  }
  w.value = sqrt_to_double(w.value_sq);
  if (sgn(w.value_sq) > 0) {
    if (from_k) {
      // The far point is p in K; the hyperplane through q supports L.
      Point normal = w.q - w.p;
      Scalar offset = dot(normal, w.q);
      w.support = Halfspace(std::move(normal), std::move(offset));
      w.support_contains_first = false;
    } else {
      Point normal = w.p - w.q;
      Scalar offset = dot(normal, w.p);
      w.support = Halfspace(std::move(normal), std::move(offset));
      w.support_contains_first = true;
    }
  }
  return w;
}

Scalar diameter2(const VPolytope& p) {
  Scalar best = 0;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Scalar d = distance2(v[i], v[j]);
      if (d > best) best = std::move(d);
    }
  }
  return best;
}

}  // namespace mvdist
