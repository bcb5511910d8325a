#pragma once

#include <optional>

#include "mvdist/polytope.hpp"

namespace mvdist {

/// P intersected with a closed halfspace; std::nullopt marks an empty result.
std::optional<VPolytope> clip(const VPolytope& p, const Halfspace& h);

/// P intersected with the hyperplane {x : normal . x = offset}.
std::optional<VPolytope> section(const VPolytope& p, const Point& normal, const Scalar& offset);

}  // namespace mvdist
