#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mvdist/polytope.hpp"

namespace mvdist {

/// Convex hull of finitely many rational points in any dimension, kept as
/// its extreme points (redundant generators are pruned with an exact LP).
class VertexBody {
 public:
  VertexBody(std::size_t dim, std::vector<Point> points);
  explicit VertexBody(const VPolytope& p);

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  /// Row-major copy of the vertices as doubles.
  const std::vector<double>& coords() const { return coords_; }
  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }

  friend bool operator==(const VertexBody& a, const VertexBody& b) { return a.vertices_ == b.vertices_; }

 private:
  std::size_t dim_;
  std::vector<Point> vertices_;
  std::vector<double> coords_;
  std::vector<double> lo_;
  std::vector<double> hi_;
};

VertexBody hull_union(const VertexBody& a, const VertexBody& b);
bool is_subset(const VertexBody& inner, const VertexBody& outer);

struct Membership {
  bool member = false;
  /// Decided by the floating-point LP (tolerance 1e-9) rather than exactly.
  bool approximate = false;
};

/// Vertex counts above which member_minkowski switches to the numeric LP.
inline constexpr std::size_t kExactLpLimit = 64;

/// Whether x lies in P + Q (boundary included), by LP feasibility of
/// sum lambda_i v_i + sum mu_j w_j = x with convex weights.
Membership member_minkowski(const Point& x, const VertexBody& p, const VertexBody& q);
Membership member_minkowski(const Point& x, const VPolytope& p, const VPolytope& q);

/// Floating-point membership of x in P + t Q, with a bounding-box prefilter.
bool member_minkowski_numeric(const double* x, const VertexBody& p, const VertexBody& q, double t = 1);

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  double volume() const;
};

/// Bounding box of P + t Q.
Box sum_box(const VertexBody& p, const VertexBody& q, double t = 1);

struct VolumeEstimate {
  /// Estimated volume: box volume times the hit fraction.
  double mean = 0;
  double hit_fraction = 0;
  /// 1.96 standard errors of the binomial hit-or-miss estimate, in volume units.
  double ci95 = 0;
  std::size_t samples = 0;
  Box box;
};

using MembershipOracle = std::function<bool(const double*)>;

/// Minimum number of samples accepted by the estimators.
inline constexpr std::size_t kMinSamples = 1000;

/// Hit-or-miss volume; points are drawn in fixed-size chunks with seeds
/// derived from (seed, chunk), so results do not depend on the thread count.
VolumeEstimate mc_volume(const MembershipOracle& inside, const Box& box, std::size_t samples, std::uint64_t seed);

struct RhoEstimate {
  VolumeEstimate gk;
  VolumeEstimate gl;
  VolumeEstimate gu;
  double rho = 0;
  double ci95 = 0;
};

/// rho_G(K, L) from one stream of points classified against G+K, G+L and
/// G+(K u L). Bodies with equal vertex sets share classifications, so K = L gives 0.
RhoEstimate mc_rho_G(const VertexBody& g, const VertexBody& k, const VertexBody& l, std::size_t samples,
                     std::uint64_t seed, std::optional<Box> box = std::nullopt);

struct DgEstimate {
  double dg = 0;
  double ci95 = 0;
  /// Estimated 2 MV_j(G, K u L) - MV_j(G, K) - MV_j(G, L), j = 0..n.
  std::vector<double> terms;
  /// rho_G from the t = 1 node.
  double rho = 0;
  double rho_ci95 = 0;
};

/// d_G by fitting t -> Vol(G + tX) at t = 0..n, with common random numbers
/// across X = K, L, K u L at each node.
DgEstimate mc_d_G(const VertexBody& g, const VertexBody& k, const VertexBody& l, std::size_t samples,
                  std::uint64_t seed);

}  // namespace mvdist
