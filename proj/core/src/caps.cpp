#include "mvdist/caps.hpp"

#include <cmath>
#include <numbers>

#include "mvdist/clip.hpp"
#include "mvdist/distance.hpp"
#include "mvdist/error.hpp"
#include "mvdist/metrics.hpp"
#include "mvdist/mixed_volume.hpp"
#include "mvdist/parallel.hpp"
#include "quadrature.hpp"

namespace mvdist {
namespace {

void check_cap_args(const VPolytope& g, const Point& d, const Scalar& s) {
  if (d.size() != g.dim()) throw Error(ErrorKind::domain, "direction dimension mismatch");
  if (d.is_zero()) throw Error(ErrorKind::domain, "zero cap direction");
  if (sgn(s) < 0) throw Error(ErrorKind::domain, "negative cap height");
}

Scalar pow2(std::size_t n) { return Scalar(mpz_class(1) << static_cast<mp_bitcnt_t>(n)); }

}  // namespace

Cap cap(const VPolytope& g, const Point& d, const Scalar& s) {
  check_cap_args(g, d, s);
  auto body = clip(g, Halfspace(d, support_value(g, d) - s));
  if (!body) throw Error(ErrorKind::internal, "cap at a supporting hyperplane came out empty");
  return Cap{std::move(*body), d, s, to_double(s) / sqrt_to_double(norm2(d))};
}

VPolytope slice(const VPolytope& g, const Point& d, const Scalar& s) {
  check_cap_args(g, d, s);
  auto body = section(g, d, support_value(g, d) - s);
  if (!body) throw Error(ErrorKind::domain, "slice beyond the width of G");
  return std::move(*body);
}

Point family_direction(const VPolytope& g) {
  const Point c = vertex_centroid(g);
  const Point* best = nullptr;
  Scalar best_d2 = -1;
  // Vertices are sorted, so >= keeps the lexicographically largest on ties.
  for (const auto& v : g.vertices()) {
    const Scalar d2 = distance2(v, c);
    if (d2 >= best_d2) {
      best_d2 = d2;
      best = &v;
    }
  }
  Point d = *best - c;
  if (d.is_zero()) throw Error(ErrorKind::domain, "family direction needs a polytope with two or more vertices");
  Scalar m = 0;
  for (const auto& x : d) m = std::max<Scalar>(m, abs(x));
  return d * (Scalar(1) / m);
}

Scalar pyramid_threshold(const VPolytope& g, const Point& d) {
  const Scalar h = support_value(g, d);
  std::size_t top = 0;
  std::optional<Scalar> gap;
  for (const auto& v : g.vertices()) {
    const Scalar depth = h - dot(d, v);
    if (sgn(depth) == 0) {
      ++top;
    } else if (!gap || depth < *gap) {
      gap = depth;
    }
  }
  if (top != 1 || !gap) return 0;
  return *gap;
}

std::vector<FamilyPoint> cap_slice_family(const VPolytope& g, const Point& d, const std::vector<Scalar>& schedule) {
  if (!g.is_full_dimensional()) throw Error(ErrorKind::domain, "reference body must be full-dimensional");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (sgn(schedule[i]) <= 0) throw Error(ErrorKind::config, "cap heights must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1])) throw Error(ErrorKind::config, "schedule must be strictly decreasing");
  }
  const std::size_t n = g.dim();
  const Scalar d2 = norm2(d);
  auto points = parallel_map(schedule.size(), [&](std::size_t i) {
    const Scalar& s = schedule[i];
    Cap c = cap(g, d, s);
    FamilyPoint fp{.t = s, .k = c.body, .l = slice(g, d, s)};
    const PairMetrics pm = pair_metrics(g, fp.k, fp.l);
    const HausdorffWitness w = hausdorff(fp.k, fp.l);
    fp.dh_sq = w.value_sq;
    fp.dh = w.value;
    fp.dg = pm.dg;
    fp.rho = pm.rho;
    fp.height = c.height;
    fp.vol_cap = volume(fp.k);
    fp.height_ok = fp.dh_sq * d2 >= s * s;
    fp.cap_volume_ok = fp.rho <= pow2(n) * fp.vol_cap;
    fp.double_cap_volume_ok = fp.rho <= pow2(n + 1) * fp.vol_cap;
    return fp;
  });
  for (std::size_t i = 1; i < points.size(); ++i) points[i].monotone_ok = points[i].dh_sq <= points[i - 1].dh_sq;
  return points;
}

VPolytope place_at_origin(const VPolytope& g, Placement placement) {
  if (placement == Placement::vertex) return translate(g, -g.vertex(0));
  return translate(g, -inradius_center(g).center);
}

std::vector<FamilyPoint> scaling_family(const VPolytope& g, const std::vector<Scalar>& schedule, Placement placement) {
  if (!g.is_full_dimensional()) throw Error(ErrorKind::domain, "reference body must be full-dimensional");
  for (const auto& r : schedule) {
    if (sgn(r) <= 0 || r >= 1) throw Error(ErrorKind::config, "scale factors must lie in (0, 1)");
  }
  const VPolytope g0 = place_at_origin(g, placement);
  const std::size_t n = g0.dim();
  const Scalar vol = volume(g0);
  Scalar m2 = 0;
  for (const auto& v : g0.vertices()) m2 = std::max(m2, norm2(v));
  return parallel_map(schedule.size(), [&](std::size_t i) {
    const Scalar& r = schedule[i];
    FamilyPoint fp{.t = r, .k = g0, .l = scale(g0, r)};
    const PairMetrics pm = pair_metrics(g0, fp.k, fp.l);
    const HausdorffWitness w = hausdorff(fp.k, fp.l);
    fp.dh_sq = w.value_sq;
    fp.dh = w.value;
    fp.dg = pm.dg;
    fp.rho = pm.rho;
    const Scalar gap = 1 - r;
    fp.closed_form_ok = fp.rho == vol * (pow2(n) - pow(1 + r, static_cast<unsigned>(n))) && fp.dh_sq == m2 * gap * gap;
    return fp;
  });
}

VPolytope regular_polygon_proxy(unsigned m, unsigned bits) {
  if (m < 8 || m % 8 != 0) throw Error(ErrorKind::domain, "polygon proxy needs a multiple of 8 vertices");
  const double unit = std::ldexp(1.0, static_cast<int>(bits));
  auto snap = [&](double x) {
    Scalar q(mpz_class(std::trunc(x * unit)));
    q /= mpz_class(1) << bits;
    return q;
  };
  // First octant, then reflections in y = x and the axes.
  std::vector<Point> pts;
  for (unsigned k = 0; k <= m / 8; ++k) {
    const double a = 2 * std::numbers::pi * k / m;
    Scalar x = k == 0 ? Scalar(1) : snap(std::cos(a));
    Scalar y = k == 0 ? Scalar(0) : snap(std::sin(a));
    if (8 * k == m) y = x;
    for (int sx : {1, -1}) {
      for (int sy : {1, -1}) {
        pts.push_back(Point{sx * x, sy * y});
        pts.push_back(Point{sx * y, sy * x});
      }
    }
  }
  VPolytope out = convex_hull(std::move(pts), 2);
  if (out.vertices().size() != m) throw Error(ErrorKind::internal, "polygon proxy lost vertices");
  return out;
}

double polygon_sagitta(unsigned m) { return 1 - std::cos(std::numbers::pi / m); }

ConstantsReport theoretical_constants(const VPolytope& g, std::optional<double> rolling_radius) {
  if (!g.is_full_dimensional()) throw Error(ErrorKind::domain, "constants need a full-dimensional G");
  ConstantsReport out;
  const std::size_t n = g.dim();
  const auto nd = static_cast<double>(n);
  out.n = n;
  out.diam_sq = diameter2(g);
  out.diam = sqrt_to_double(out.diam_sq);
  out.inradius = inradius_center(g);
  out.r_in = to_double(out.inradius.radius);
  out.mv1_ball = mv1_ball(g);
  out.c_upper = out.mv1_ball * Scalar(static_cast<long>(n * (n + 1)));
  out.c_upper_value = out.c_upper.to_double();
  for (unsigned k = 0; k <= n; ++k) out.omega.push_back(omega(k));
  out.c_lower = out.omega[n - 1] / nd * std::pow(out.r_in / out.diam, 2 * nd - 1);
  if (rolling_radius) {
    const double r = *rolling_radius;
    if (!(r > 0)) throw Error(ErrorKind::config, "rolling radius must be positive");
    out.rolling_radius = r;
    // omega_{n-1} (2r/pi)^n int_0^{sqrt(2h/r)} theta^n = c h^{(n+1)/2}.
    const double small = out.omega[n - 1] * std::pow(2 * r / std::numbers::pi, nd) * std::pow(2 / r, (nd + 1) / 2) / (nd + 1);
    const double large = 0.5 * out.omega[n] * std::pow(r, nd) * std::pow(out.diam, -(nd + 1) / 2);
    out.c_cap = std::min(small, large);
    // Same bound with the theta-integral done by quadrature at h = r.
    const double integral = detail::integrate([&](double th) { return std::pow(th, nd); }, 0.0, std::sqrt(2.0));
    out.c_cap_quadrature = std::min(out.omega[n - 1] * std::pow(2 * r / std::numbers::pi, nd) * integral / std::pow(r, (nd + 1) / 2), large);
    out.c_cap_displayed = out.omega[n - 1] * std::pow(std::numbers::pi, nd + 1) * std::pow(r, (nd - 1) / 2) /
                          (std::pow(2.0, (nd + 1) / 2) * (nd + 1));
    out.c_smooth = *out.c_cap / to_double(binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2)));
  }
  return out;
}

}  // namespace mvdist
