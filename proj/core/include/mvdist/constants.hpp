#pragma once

#include <optional>
#include <vector>

#include "mvdist/lp.hpp"
#include "mvdist/polytope.hpp"

namespace mvdist {

/// Volume of the unit ball in R^k.
double omega(unsigned k);

/// Volume of a cap of height h of the radius-r ball in R^n, by adaptive
/// Gauss-Kronrod quadrature of omega_{n-1} r^n int_0^{acos(1-h/r)} sin^n.
double spherical_cap_volume(unsigned n, double r, double h);

struct ConstantsReport {
  std::size_t n = 0;
  Scalar diam_sq;
  double diam = 0;
  /// Chebyshev center and certified inradius lower bound r_in.
  Inradius inradius;
  double r_in = 0;
  RadicalSum mv1_ball;
  /// n (n + 1) MV_1(G, B): d_G <= C_upper d_H.
  RadicalSum c_upper;
  double c_upper_value = 0;
  /// (omega_{n-1} / n) (r_in / diam)^{2n-1}: C_lower d_H^n <= d_G.
  double c_lower = 0;
  /// Smooth-boundary constants, present when a rolling-ball radius is given.
  /// c_cap bounds cap volumes, Vol(C_G(u, h)) >= c_cap h^{(n+1)/2}, taking the
  /// smaller of the h <= r and h >= r branches; c_smooth = c_cap / C(n, n/2)
  /// bounds d_G. c_cap_quadrature evaluates the same integral bound
  /// numerically; c_cap_displayed is the alternative closed form kept for comparison.
  std::optional<double> rolling_radius;
  std::optional<double> c_cap;
  std::optional<double> c_cap_quadrature;
  std::optional<double> c_cap_displayed;
  std::optional<double> c_smooth;
  /// omega[k] for k = 0..n.
  std::vector<double> omega;
};

ConstantsReport theoretical_constants(const VPolytope& g, std::optional<double> rolling_radius = std::nullopt);

}  // namespace mvdist
