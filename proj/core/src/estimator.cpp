#include "mvdist/estimator.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mvdist/error.hpp"
#include "mvdist/lp.hpp"
#include "mvdist/mixed_volume.hpp"
#include "mvdist/parallel.hpp"
#include "mvdist/random.hpp"

namespace mvdist {
namespace {

constexpr std::size_t kChunk = 4096;
constexpr double kZ95 = 1.96;

/// Whether x is a convex combination of the given points (exact).
bool in_hull_exact(const Point& x, const std::vector<const Point*>& pts) {
  const std::size_t n = x.size();
  Matrix<Scalar> a(n + 1, std::vector<Scalar>(pts.size()));
  std::vector<Scalar> b(n + 1);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = (*pts[j])[i];
    a[n][j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = x[i];
  b[n] = 1;
  return feasible_point(a, b).has_value();
}

template <class T, class GetP, class GetQ>
std::optional<std::vector<T>> sum_feasibility(std::size_t n, std::size_t np, std::size_t nq, GetP get_p, GetQ get_q,
                                              const std::vector<T>& x) {
  Matrix<T> a(n + 2, std::vector<T>(np + nq));
  std::vector<T> b(n + 2);
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = get_p(j, i);
    a[n][j] = 1;
  }
  for (std::size_t j = 0; j < nq; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][np + j] = get_q(j, i);
    a[n + 1][np + j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = x[i];
  b[n] = 1;
  b[n + 1] = 1;
  return feasible_point(a, b);
}

void check_samples(std::size_t samples) {
  if (samples < kMinSamples) throw Error(ErrorKind::config, "at least 1000 samples are required");
}

void check_box(const Box& box) {
  if (box.lo.empty() || box.lo.size() != box.hi.size()) throw Error(ErrorKind::config, "malformed sampling box");
  for (std::size_t i = 0; i < box.lo.size(); ++i) {
    if (!(box.hi[i] > box.lo[i])) throw Error(ErrorKind::config, "degenerate sampling box");
  }
}

void draw(Rng& rng, const Box& box, std::vector<double>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * uniform01(rng);
}

std::size_t chunk_count(std::size_t samples) { return (samples + kChunk - 1) / kChunk; }

std::size_t chunk_size(std::size_t samples, std::size_t c) { return std::min(kChunk, samples - c * kChunk); }

/// Point counts by membership pattern (bit 0: G+U, bit 1: G+K, bit 2: G+L).
using Pattern = std::array<std::uint64_t, 8>;

struct Classifier {
  const VertexBody& g;
  std::vector<const VertexBody*> bodies;  // distinct among U, K, L (U first)
  std::array<std::size_t, 3> slot{};      // U, K, L -> index into bodies

  Classifier(const VertexBody& g_, const VertexBody& k, const VertexBody& l, const VertexBody& u) : g(g_) {
    for (const VertexBody* b : {&u, &k, &l}) {
      std::size_t i = 0;
      while (i < bodies.size() && !(*bodies[i] == *b)) ++i;
      if (i == bodies.size()) bodies.push_back(b);
      slot[b == &u ? 0 : (b == &k ? 1 : 2)] = i;
    }
  }

  unsigned classify(const double* x, double t) const {
    std::array<bool, 3> in{};
    in[0] = member_minkowski_numeric(x, g, *bodies[0], t);
    // K and L lie in U, so a miss for U is a miss for both.
    for (std::size_t i = 1; i < bodies.size(); ++i) in[i] = in[0] && member_minkowski_numeric(x, g, *bodies[i], t);
    return (in[slot[0]] ? 1u : 0u) | (in[slot[1]] ? 2u : 0u) | (in[slot[2]] ? 4u : 0u);
  }
};

Pattern sample_patterns(const Classifier& cls, const Box& box, double t, std::size_t samples, std::uint64_t seed) {
  auto chunks = parallel_map(chunk_count(samples), [&](std::size_t c) {
    Rng rng(stream_seed(seed, c));
    std::vector<double> x(box.lo.size());
    Pattern counts{};
    for (std::size_t i = 0; i < chunk_size(samples, c); ++i) {
      draw(rng, box, x);
      ++counts[cls.classify(x.data(), t)];
    }
    return counts;
  });
  Pattern total{};
  for (const auto& c : chunks) {
    for (std::size_t i = 0; i < 8; ++i) total[i] += c[i];
  }
  return total;
}

VolumeEstimate estimate_from_hits(std::uint64_t hits, std::size_t samples, const Box& box) {
  VolumeEstimate out;
  const double vol = box.volume();
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  out.hit_fraction = p;
  out.mean = vol * p;
  out.ci95 = kZ95 * vol * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  out.samples = samples;
  out.box = box;
  return out;
}

/// Mean and variance of the mean of D = 2 [U] - [K] - [L] (box-volume units not applied).
std::pair<double, double> difference_stats(const Pattern& counts, std::size_t samples) {
  double sum = 0;
  double sum2 = 0;
  for (unsigned pat = 0; pat < 8; ++pat) {
    const double d = 2.0 * (pat & 1u) - ((pat >> 1) & 1u) - ((pat >> 2) & 1u);
    sum += d * static_cast<double>(counts[pat]);
    sum2 += d * d * static_cast<double>(counts[pat]);
  }
  const auto nn = static_cast<double>(samples);
  const double mean = sum / nn;
  const double var = nn > 1 ? (sum2 - nn * mean * mean) / (nn - 1) : 0.0;
  return {mean, std::max(var, 0.0) / nn};
}

std::uint64_t hits(const Pattern& counts, unsigned bit) {
  std::uint64_t h = 0;
  for (unsigned pat = 0; pat < 8; ++pat) {
    if (pat & bit) h += counts[pat];
  }
  return h;
}

}  // namespace

VertexBody::VertexBody(std::size_t dim, std::vector<Point> points) : dim_(dim) {
  if (dim == 0 || points.empty()) throw Error(ErrorKind::domain, "a body needs a positive dimension and a point");
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorKind::domain, "point dimension mismatch");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<const Point*> others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(&points[j]);
    }
    if (others.empty() || !in_hull_exact(points[i], others)) vertices_.push_back(points[i]);
  }
  lo_.assign(dim, 0);
  hi_.assign(dim, 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (std::size_t i = 0; i < dim; ++i) {
      const double c = to_double(vertices_[v][i]);
      coords_.push_back(c);
      lo_[i] = v == 0 ? c : std::min(lo_[i], c);
      hi_[i] = v == 0 ? c : std::max(hi_[i], c);
    }
  }
}

VertexBody::VertexBody(const VPolytope& p) : VertexBody(p.dim(), p.vertices()) {}

VertexBody hull_union(const VertexBody& a, const VertexBody& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::domain, "bodies of different ambient dimension");
  std::vector<Point> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return VertexBody(a.dim(), std::move(pts));
}

bool is_subset(const VertexBody& inner, const VertexBody& outer) {
  if (inner.dim() != outer.dim()) return false;
  std::vector<const Point*> pts;
  for (const auto& v : outer.vertices()) pts.push_back(&v);
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Point& x) { return in_hull_exact(x, pts); });
}

Membership member_minkowski(const Point& x, const VertexBody& p, const VertexBody& q) {
  const std::size_t n = p.dim();
  if (q.dim() != n || x.size() != n) throw Error(ErrorKind::domain, "dimension mismatch in Minkowski membership");
  const std::size_t np = p.vertices().size();
  const std::size_t nq = q.vertices().size();
  if (np + nq <= kExactLpLimit) {
    auto gp = [&](std::size_t j, std::size_t i) { return p.vertices()[j][i]; };
    auto gq = [&](std::size_t j, std::size_t i) { return q.vertices()[j][i]; };
    return {sum_feasibility<Scalar>(n, np, nq, gp, gq, x.coords()).has_value(), false};
  }
  const std::vector<double> xd = to_doubles(x);
  return {member_minkowski_numeric(xd.data(), p, q), true};
}

Membership member_minkowski(const Point& x, const VPolytope& p, const VPolytope& q) {
  return member_minkowski(x, VertexBody(p), VertexBody(q));
}

bool member_minkowski_numeric(const double* x, const VertexBody& p, const VertexBody& q, double t) {
  const std::size_t n = p.dim();
  constexpr double kPad = 1e-9;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < p.lo()[i] + t * q.lo()[i] - kPad || x[i] > p.hi()[i] + t * q.hi()[i] + kPad) return false;
  }
  const std::size_t np = p.vertices().size();
  const std::size_t nq = q.vertices().size();
  auto gp = [&](std::size_t j, std::size_t i) { return p.coords()[j * n + i]; };
  auto gq = [&](std::size_t j, std::size_t i) { return t * q.coords()[j * n + i]; };
  return sum_feasibility<double>(n, np, nq, gp, gq, std::vector<double>(x, x + n)).has_value();
}

double Box::volume() const {
  double v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

Box sum_box(const VertexBody& p, const VertexBody& q, double t) {
  Box box{p.lo(), p.hi()};
  for (std::size_t i = 0; i < p.dim(); ++i) {
    box.lo[i] += t * q.lo()[i];
    box.hi[i] += t * q.hi()[i];
  }
  return box;
}

VolumeEstimate mc_volume(const MembershipOracle& inside, const Box& box, std::size_t samples, std::uint64_t seed) {
  check_samples(samples);
  check_box(box);
  const auto chunks = parallel_map(chunk_count(samples), [&](std::size_t c) {
    Rng rng(stream_seed(seed, c));
    std::vector<double> x(box.lo.size());
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < chunk_size(samples, c); ++i) {
      draw(rng, box, x);
      if (inside(x.data())) ++h;
    }
    return h;
  });
  std::uint64_t total = 0;
  for (auto h : chunks) total += h;
  return estimate_from_hits(total, samples, box);
}

RhoEstimate mc_rho_G(const VertexBody& g, const VertexBody& k, const VertexBody& l, std::size_t samples,
                     std::uint64_t seed, std::optional<Box> box) {
  check_samples(samples);
  if (k.dim() != g.dim() || l.dim() != g.dim()) throw Error(ErrorKind::domain, "bodies of different ambient dimension");
  if (!is_subset(k, g)) throw Error(ErrorKind::containment, "K is not contained in G");
  if (!is_subset(l, g)) throw Error(ErrorKind::containment, "L is not contained in G");
  const VertexBody u = hull_union(k, l);
  const Box b = box ? *box : sum_box(g, u);
  check_box(b);
  const Classifier cls(g, k, l, u);
  const Pattern counts = sample_patterns(cls, b, 1.0, samples, seed);
  RhoEstimate out;
  out.gu = estimate_from_hits(hits(counts, 1), samples, b);
  out.gk = estimate_from_hits(hits(counts, 2), samples, b);
  out.gl = estimate_from_hits(hits(counts, 4), samples, b);
  const auto [mean, var] = difference_stats(counts, samples);
  out.rho = b.volume() * mean;
  out.ci95 = kZ95 * b.volume() * std::sqrt(var);
  return out;
}

DgEstimate mc_d_G(const VertexBody& g, const VertexBody& k, const VertexBody& l, std::size_t samples,
                  std::uint64_t seed) {
  check_samples(samples);
  if (k.dim() != g.dim() || l.dim() != g.dim()) throw Error(ErrorKind::domain, "bodies of different ambient dimension");
  if (!is_subset(k, g)) throw Error(ErrorKind::containment, "K is not contained in G");
  if (!is_subset(l, g)) throw Error(ErrorKind::containment, "L is not contained in G");
  const std::size_t n = g.dim();
  const VertexBody u = hull_union(k, l);
  const Classifier cls(g, k, l, u);
  // D(t) = 2 Vol(G+tU) - Vol(G+tK) - Vol(G+tL) at t = 1..n; D(0) = 0.
  std::vector<double> d(n + 1, 0.0);
  std::vector<double> var(n + 1, 0.0);
  for (std::size_t t = 1; t <= n; ++t) {
    const Box b = sum_box(g, u, static_cast<double>(t));
    check_box(b);
    const Pattern counts = sample_patterns(cls, b, static_cast<double>(t), samples, stream_seed(seed, t));
    const auto [mean, v] = difference_stats(counts, samples);
    d[t] = b.volume() * mean;
    var[t] = b.volume() * b.volume() * v;
  }
  // Inverse Vandermonde on nodes 0..n, exactly, then to doubles.
  std::vector<std::vector<double>> w(n + 1, std::vector<double>(n + 1));
  for (std::size_t t = 0; t <= n; ++t) {
    std::vector<Scalar> unit(n + 1, Scalar(0));
    unit[t] = 1;
    const SteinerProfile basis = profile_from_volumes(n, unit);
    for (std::size_t j = 0; j <= n; ++j) w[j][t] = to_double(basis.mv[j]);
  }
  DgEstimate out;
  double dg_var = 0;
  for (std::size_t t = 0; t <= n; ++t) {
    double c = 0;
    for (std::size_t j = 1; j <= n; ++j) c += w[j][t];
    dg_var += c * c * var[t];
  }
  for (std::size_t j = 0; j <= n; ++j) {
    double term = 0;
    for (std::size_t t = 0; t <= n; ++t) term += w[j][t] * d[t];
    out.terms.push_back(term);
    if (j > 0) out.dg += term;
  }
  out.ci95 = kZ95 * std::sqrt(dg_var);
  out.rho = d[1];
  out.rho_ci95 = kZ95 * std::sqrt(var[1]);
  return out;
}

}  // namespace mvdist
