#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mvdist/constants.hpp"
#include "mvdist/distance.hpp"
#include "mvdist/mixed_volume.hpp"

namespace mvdist {

/// d_G and rho_G of one pair, sharing the Vol(G + tX) evaluations.
struct PairMetrics {
  Scalar dg;
  Scalar rho;
  /// 2 MV_j(G, K u L) - MV_j(G, K) - MV_j(G, L) for j = 0..n; terms[0] is always 0.
  std::vector<Scalar> terms;
  SteinerProfile k;
  SteinerProfile l;
  SteinerProfile u;
};

/// Throws ErrorKind::containment unless K, L are subsets of G.
PairMetrics pair_metrics(const VPolytope& g, const VPolytope& k, const VPolytope& l);

Scalar d_G(const VPolytope& g, const VPolytope& k, const VPolytope& l);
Scalar rho_G(const VPolytope& g, const VPolytope& k, const VPolytope& l);

struct MetricReport {
  std::size_t n = 0;
  Scalar dg;
  Scalar rho;
  Scalar binom;
  HausdorffWitness witness;
  /// dg <= rho <= binom * dg, exactly.
  bool sandwich_ok = false;
  /// dg <= C_upper * dH.
  bool upper_ok = false;
  /// C_lower * dH^n <= dg.
  bool lower_ok = false;
  /// C_lower * dH^n <= rho.
  bool lower_rho_ok = false;

  const Scalar& dh_sq() const { return witness.value_sq; }
  double dh() const { return witness.value; }
};

/// Relative slack granted to the numeric side of the bound checks.
inline constexpr double kBoundSlack = 1e-9;

MetricReport metric_report(const VPolytope& g, const VPolytope& k, const VPolytope& l, const ConstantsReport& constants);
MetricReport metric_report(const VPolytope& g, const VPolytope& k, const VPolytope& l);

struct TriangleProbe {
  /// max of d_G(K, M) / (d_G(K, L) + d_G(L, M)) over triples with a positive denominator.
  std::optional<Scalar> max_ratio;
  std::size_t evaluated = 0;
  /// Triples with 0/0.
  std::size_t skipped = 0;
  /// Triples with d_G(K, M) > 0 = d_G(K, L) + d_G(L, M).
  std::size_t unbounded = 0;

  /// Adds one triple with ratio num / den.
  void record(const Scalar& num, const Scalar& den);
};

TriangleProbe quasi_triangle_probe(const VPolytope& g, const std::vector<std::array<VPolytope, 3>>& triples);

}  // namespace mvdist
