#pragma once

#include <optional>
#include <vector>

#include "mvdist/constants.hpp"
#include "mvdist/polytope.hpp"

namespace mvdist {

/// C_G(d, s) = G intersected with {d . x >= h_G(d) - s}. The direction is not
/// normalized: s is measured in units of |d| and the geometric height is s / |d|.
struct Cap {
  VPolytope body;
  Point direction;
  Scalar scaled_height;
  double height = 0;
};

Cap cap(const VPolytope& g, const Point& d, const Scalar& s);

/// G intersected with {d . x = h_G(d) - s}; throws ErrorKind::domain when empty.
VPolytope slice(const VPolytope& g, const Point& d, const Scalar& s);

/// Direction used by the cap/slice family: towards the vertex farthest from
/// the vertex centroid (ties go to the lexicographically largest vertex),
/// scaled to max-norm 1.
Point family_direction(const VPolytope& g);

/// Largest s for which the cap in direction d is a pyramid over the unique
/// maximizing vertex: min over the remaining vertices w of h_G(d) - d . w.
/// Zero when the maximizer is not a vertex.
Scalar pyramid_threshold(const VPolytope& g, const Point& d);

struct FamilyPoint {
  /// Family parameter: scaled height s (cap/slice) or scale factor r (scaling).
  Scalar t;
  VPolytope k;
  VPolytope l;
  Scalar dh_sq{};
  double dh = 0;
  Scalar dg{};
  Scalar rho{};

  // cap/slice family
  double height = 0;
  Scalar vol_cap{};
  /// dH |d| >= s, checked on squares.
  bool height_ok = true;
  /// rho <= 2^n Vol(C).
  bool cap_volume_ok = true;
  /// rho <= 2^{n+1} Vol(C).
  bool double_cap_volume_ok = true;
  /// dH no larger than at the previous (larger) parameter.
  bool monotone_ok = true;

  // scaling family
  /// rho == Vol(G)(2^n - (1 + r)^n) and dH^2 == M^2 (1 - r)^2.
  bool closed_form_ok = true;
};

/// Caps and slices of G at each scaled height of a strictly decreasing positive schedule.
std::vector<FamilyPoint> cap_slice_family(const VPolytope& g, const Point& d, const std::vector<Scalar>& schedule);

enum class Placement { chebyshev_center, vertex };

/// G translated so the chosen point sits at the origin.
VPolytope place_at_origin(const VPolytope& g, Placement placement);

/// Pairs (G', rG') for G' = place_at_origin(G) and every r in the schedule (each in (0, 1)).
std::vector<FamilyPoint> scaling_family(const VPolytope& g, const std::vector<Scalar>& schedule,
                                        Placement placement = Placement::chebyshev_center);

/// Regular m-gon inscribed in the unit circle, vertex k at angle 2 pi k / m,
/// coordinates truncated toward zero to multiples of 2^-bits. The
/// construction is exactly symmetric under the dihedral group of the square;
/// m must be a multiple of 8.
VPolytope regular_polygon_proxy(unsigned m, unsigned bits = 30);

/// 1 - cos(pi / m): the gap between the m-gon and its circumcircle.
double polygon_sagitta(unsigned m);

}  // namespace mvdist
