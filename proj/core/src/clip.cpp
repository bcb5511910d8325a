#include "mvdist/clip.hpp"

#include "mvdist/error.hpp"

namespace mvdist {
namespace {

/// Points where edges of P cross the level set {normal . x = offset} strictly.
void add_crossings(const VPolytope& p, const Point& normal, const Scalar& offset, std::vector<Point>& out) {
  const auto& v = p.vertices();
  for (const auto& [i, j] : p.edges()) {
    const Scalar si = dot(normal, v[i]) - offset;
    const Scalar sj = dot(normal, v[j]) - offset;
    if (sgn(si) * sgn(sj) < 0) out.push_back(v[i] + (v[j] - v[i]) * (si / (si - sj)));
  }
}

}  // namespace

std::optional<VPolytope> clip(const VPolytope& p, const Halfspace& h) {
  if (h.normal().size() != p.dim()) throw Error(ErrorKind::domain, "halfspace dimension mismatch");
  std::vector<Point> kept;
  bool all_inside = true;
  for (const auto& v : p.vertices()) {
    if (h.contains(v)) {
      kept.push_back(v);
    } else {
      all_inside = false;
    }
  }
  if (all_inside) return p;
  if (kept.empty()) return std::nullopt;
  add_crossings(p, h.normal(), h.offset(), kept);
  return convex_hull(std::move(kept), p.dim());
}

std::optional<VPolytope> section(const VPolytope& p, const Point& normal, const Scalar& offset) {
  if (normal.size() != p.dim()) throw Error(ErrorKind::domain, "hyperplane dimension mismatch");
  if (normal.is_zero()) throw Error(ErrorKind::domain, "hyperplane with zero normal");
  std::vector<Point> on;
  for (const auto& v : p.vertices()) {
    if (dot(normal, v) == offset) on.push_back(v);
  }
  add_crossings(p, normal, offset, on);
  if (on.empty()) return std::nullopt;
  return convex_hull(std::move(on), p.dim());
}

}  // namespace mvdist
