#include "mvdist/metrics.hpp"

#include <cmath>

#include "mvdist/error.hpp"
#include "mvdist/parallel.hpp"

namespace mvdist {

PairMetrics pair_metrics(const VPolytope& g, const VPolytope& k, const VPolytope& l) {
  if (!g.is_full_dimensional()) throw Error(ErrorKind::domain, "reference body must be full-dimensional");
  if (k.dim() != g.dim() || l.dim() != g.dim()) throw Error(ErrorKind::domain, "bodies of different ambient dimension");
  if (!is_subset(k, g)) throw Error(ErrorKind::containment, "K is not contained in G");
  if (!is_subset(l, g)) throw Error(ErrorKind::containment, "L is not contained in G");
  const std::size_t n = g.dim();
  const VPolytope u = hull_union(k, l);
  auto profile = [&](const VPolytope& x) { return steiner_profile(g, x); };
  SteinerProfile pk = profile(k);
  SteinerProfile pl = l == k ? pk : profile(l);
  SteinerProfile pu = u == k ? pk : (u == l ? pl : profile(u));
  PairMetrics out{0, 0, {}, pk, pl, pu};
  for (std::size_t j = 0; j <= n; ++j) {
    out.terms.push_back(2 * pu.mv[j] - pk.mv[j] - pl.mv[j]);
    if (j > 0) out.dg += out.terms.back();
  }
  // Vol(G + X) is the sum of C(n, j) MV_j(G, X).
  for (std::size_t j = 0; j <= n; ++j) {
    out.rho += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * out.terms[j];
  }
  return out;
}

Scalar d_G(const VPolytope& g, const VPolytope& k, const VPolytope& l) { return pair_metrics(g, k, l).dg; }

Scalar rho_G(const VPolytope& g, const VPolytope& k, const VPolytope& l) {
  if (!g.is_full_dimensional()) throw Error(ErrorKind::domain, "reference body must be full-dimensional");
  if (!is_subset(k, g)) throw Error(ErrorKind::containment, "K is not contained in G");
  if (!is_subset(l, g)) throw Error(ErrorKind::containment, "L is not contained in G");
  const VPolytope u = hull_union(k, l);
  return 2 * volume(minkowski_sum(g, u)) - volume(minkowski_sum(g, k)) - volume(minkowski_sum(g, l));
}

MetricReport metric_report(const VPolytope& g, const VPolytope& k, const VPolytope& l, const ConstantsReport& constants) {
  const PairMetrics pm = pair_metrics(g, k, l);
  MetricReport out;
  out.n = g.dim();
  out.dg = pm.dg;
  out.rho = pm.rho;
  out.binom = binomial(static_cast<unsigned>(out.n), static_cast<unsigned>(out.n / 2));
  out.witness = hausdorff(k, l);
  out.sandwich_ok = sgn(out.dg) >= 0 && out.dg <= out.rho && out.rho <= out.binom * out.dg;
  const double dg = to_double(out.dg);
  const double rho = to_double(out.rho);
  const double dh = out.witness.value;
  out.upper_ok = dg <= constants.c_upper_value * dh * (1 + kBoundSlack);
  const double lower = constants.c_lower * std::pow(dh, static_cast<double>(out.n)) * (1 - kBoundSlack);
  out.lower_ok = lower <= dg;
  out.lower_rho_ok = lower <= rho;
  return out;
}

MetricReport metric_report(const VPolytope& g, const VPolytope& k, const VPolytope& l) {
  return metric_report(g, k, l, theoretical_constants(g));
}

void TriangleProbe::record(const Scalar& num, const Scalar& den) {
  if (sgn(den) == 0) {
    if (sgn(num) == 0) {
      ++skipped;
    } else {
      ++unbounded;
    }
    return;
  }
  ++evaluated;
  const Scalar ratio = num / den;
  if (!max_ratio || ratio > *max_ratio) max_ratio = ratio;
}

TriangleProbe quasi_triangle_probe(const VPolytope& g, const std::vector<std::array<VPolytope, 3>>& triples) {
  struct Row {
    Scalar num;
    Scalar den;
  };
  const auto rows = parallel_map(triples.size(), [&](std::size_t i) {
    const auto& [k, l, m] = triples[i];
    return Row{d_G(g, k, m), d_G(g, k, l) + d_G(g, l, m)};
  });
  TriangleProbe out;
  for (const auto& row : rows) out.record(row.num, row.den);
  return out;
}

}  // namespace mvdist
