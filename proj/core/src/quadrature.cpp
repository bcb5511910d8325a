#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "mvdist/constants.hpp"
#include "mvdist/error.hpp"
#include "quadrature.hpp"

namespace mvdist {

namespace detail {

double integrate(const std::function<double(double)>& f, double a, double b) {
  double err = 0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-13, &err);
}

}  // namespace detail

double omega(unsigned k) {
  // omega_k = 2 pi omega_{k-2} / k from omega_0 = 1, omega_1 = 2.
  double w = k % 2 == 0 ? 1.0 : 2.0;
  for (unsigned j = k % 2 + 2; j <= k; j += 2) w *= 2 * std::numbers::pi / j;
  return w;
}

double spherical_cap_volume(unsigned n, double r, double h) {
  if (n == 0) throw Error(ErrorKind::domain, "dimension must be positive");
  if (!(r > 0) || !(h >= 0) || h > r) throw Error(ErrorKind::domain, "cap height must lie in [0, r]");
  const double upper = std::acos(1.0 - h / r);
  auto integrand = [n](double theta) { return std::pow(std::sin(theta), static_cast<double>(n)); };
  return omega(n - 1) * std::pow(r, n) * detail::integrate(integrand, 0.0, upper);
}

}  // namespace mvdist
