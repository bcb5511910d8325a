#include "mvdist/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <sstream>

#include "mvdist/error.hpp"

namespace mvdist {
namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Scalar from_mpfr(mpfr_srcptr v) {
  mpz_class mantissa;
  const mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), v);
  Scalar out(mantissa);
  if (exp >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
  }
  return out;
}

Scalar sqrt_bound(const Scalar& x, int bits, mpfr_rnd_t direction) {
  if (sgn(x) < 0) throw Error(ErrorKind::domain, "square root of a negative value");
  if (auto s = exact_sqrt(x)) return *s;
  Mpfr t(bits + 8);
  mpfr_set_q(t.get(), x.get_mpq_t(), direction);
  mpfr_sqrt(t.get(), t.get(), direction);
  return from_mpfr(t.get());
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::domain, "zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::parse, "not a rational literal: '" + std::string(text) + "'");
  }
  Scalar q;
  q.get_num() = mpz_class(std::string(num));
  q.get_den() = mpz_class(std::string(den));
  if (q.get_den() == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

int sign(const Scalar& x) { return sgn(x); }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

double to_double(const Scalar& x) {
  Mpfr t(53);
  mpfr_set_q(t.get(), x.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(t.get(), MPFR_RNDN);
}

double sqrt_to_double(const Scalar& x) {
  if (sgn(x) < 0) throw Error(ErrorKind::domain, "square root of a negative value");
  Mpfr t(256);
  mpfr_set_q(t.get(), x.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
  return mpfr_get_d(t.get(), MPFR_RNDN);
}

std::optional<Scalar> exact_sqrt(const Scalar& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
    return std::nullopt;
  }
  Scalar out;
  mpz_sqrt(out.get_num_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(out.get_den_mpz_t(), x.get_den_mpz_t());
  return out;
}

Scalar sqrt_upper_bound(const Scalar& x, int bits) { return sqrt_bound(x, bits, MPFR_RNDU); }

Scalar sqrt_lower_bound(const Scalar& x, int bits) { return sqrt_bound(x, bits, MPFR_RNDD); }

RadicalSum::RadicalSum(const Scalar& rational_part) { add_term(1, rational_part); }

RadicalSum RadicalSum::sqrt_of(const Scalar& x) {
  if (sgn(x) < 0) throw Error(ErrorKind::domain, "square root of a negative value");
  RadicalSum out;
  if (sgn(x) == 0) return out;
  // sqrt(p/q) = sqrt(p*q) / q; split p*q = s^2 * m.
  mpz_class radicand = x.get_num() * x.get_den();
  mpz_class outside = 1;
  for (unsigned long p = 2; p < 1000 && p * p <= radicand; ++p) {
    const unsigned long sq = p * p;
    while (mpz_divisible_ui_p(radicand.get_mpz_t(), sq)) {
      radicand /= sq;
      outside *= p;
    }
  }
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    outside *= root;
    radicand = 1;
  }
  Scalar coefficient(outside, x.get_den());
  coefficient.canonicalize();
  out.add_term(radicand, coefficient);
  return out;
}

void RadicalSum::add_term(const mpz_class& radicand, const Scalar& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  for (const auto& [radicand, coefficient] : other.terms_) add_term(radicand, coefficient);
  return *this;
}

RadicalSum& RadicalSum::operator*=(const Scalar& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [radicand, coefficient] : terms_) coefficient *= factor;
  return *this;
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Scalar> RadicalSum::rational() const {
  if (terms_.empty()) return Scalar(0);
  if (!is_rational()) return std::nullopt;
  return terms_.begin()->second;
}

double RadicalSum::to_double() const {
  Mpfr sum(256);
  Mpfr term(256);
  Mpfr coefficient(256);
  mpfr_set_zero(sum.get(), 1);
  for (const auto& [radicand, coef] : terms_) {
    mpfr_set_z(term.get(), radicand.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(term.get(), term.get(), MPFR_RNDN);
    mpfr_set_q(coefficient.get(), coef.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), coefficient.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  return mpfr_get_d(sum.get(), MPFR_RNDN);
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [radicand, coefficient] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << coefficient.get_str();
    if (radicand != 1) out << "*sqrt(" << radicand.get_str() << ")";
  }
  return out.str();
}

}  // namespace mvdist
