#pragma once

#include <vector>

#include "mvdist/polytope.hpp"

namespace mvdist {

/// mv[j] = MV(G[n-j], K[j]) for j = 0..n.
struct SteinerProfile {
  std::size_t n = 0;
  std::vector<Scalar> mv;
};

/// Vol(G + tK) at t = 0, 1, ..., n.
std::vector<Scalar> steiner_volumes(const VPolytope& g, const VPolytope& k);

/// Recovers the profile from Vol(G + tK) sampled at t = 0..n.
SteinerProfile profile_from_volumes(std::size_t n, const std::vector<Scalar>& volumes);

SteinerProfile steiner_profile(const VPolytope& g, const VPolytope& k);

/// MV(K_1, ..., K_n) by inclusion-exclusion over the 2^n - 1 partial Minkowski sums.
Scalar mixed_volume_full(const std::vector<VPolytope>& bodies);

/// MV(G[n-1], B) for the unit ball B: perimeter / 2 or surface area / 3.
RadicalSum mv1_ball(const VPolytope& g);

Scalar binomial(unsigned n, unsigned k);

}  // namespace mvdist
