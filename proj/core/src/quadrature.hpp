#pragma once

#include <functional>

namespace mvdist::detail {

/// Adaptive Gauss-Kronrod integral of a smooth integrand over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b);

}  // namespace mvdist::detail
