#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace mvdist {

/// Exact rational number. gmpxx keeps values canonical as long as they are
/// built through arithmetic or the helpers below.
using Scalar = mpq_class;

Scalar rational(long num, long den = 1);

/// Parses "p" or "p/q" (optional leading '-'); decimals and exponents are rejected.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& x);

int sign(const Scalar& x);

Scalar pow(const Scalar& base, unsigned exponent);

/// Nearest double to x.
double to_double(const Scalar& x);

/// Nearest double to sqrt(x); x must be non-negative.
double sqrt_to_double(const Scalar& x);

/// sqrt(x) if x is the square of a rational.
std::optional<Scalar> exact_sqrt(const Scalar& x);

/// A rational u with sqrt(x) <= u <= sqrt(x) * (1 + 2^-bits). Exact when x is a perfect square.
Scalar sqrt_upper_bound(const Scalar& x, int bits = 60);

/// A rational l with sqrt(x) * (1 - 2^-bits) <= l <= sqrt(x). Exact when x is a perfect square.
Scalar sqrt_lower_bound(const Scalar& x, int bits = 60);

/// Finite sum of rational multiples of square roots of integers,
/// e.g. perimeters and facet-area sums with irrational edge lengths.
class RadicalSum {
 public:
  RadicalSum() = default;
  RadicalSum(const Scalar& rational_part);  // NOLINT(google-explicit-constructor)

  /// sqrt(x) for x >= 0, with square factors pulled out of the radicand.
  static RadicalSum sqrt_of(const Scalar& x);

  RadicalSum& operator+=(const RadicalSum& other);
  RadicalSum& operator*=(const Scalar& factor);

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator*(RadicalSum a, const Scalar& f) { return a *= f; }
  friend RadicalSum operator*(const Scalar& f, RadicalSum a) { return a *= f; }
  friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }

  bool is_rational() const;
  /// The value when it is rational.
  std::optional<Scalar> rational() const;
  double to_double() const;
  /// Rendered like "2 + 1*sqrt(2)".
  std::string to_string() const;

  /// radicand -> coefficient; radicand 1 carries the rational part.
  const std::map<mpz_class, Scalar>& terms() const { return terms_; }

 private:
  void add_term(const mpz_class& radicand, const Scalar& coefficient);

  std::map<mpz_class, Scalar> terms_;
};

}  // namespace mvdist
