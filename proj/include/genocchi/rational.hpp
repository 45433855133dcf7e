// SPDX-License-Identifier: Apache-2.0
//
// Exact rational scalar over GMP, plus the combinatorial helpers used by
// every recurrence in the library.

#ifndef GENOCCHI_RATIONAL_HPP
#define GENOCCHI_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace genocchi {

/// Arbitrary-precision rational, always canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. All operations are exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT(runtime/explicit)
  Rational(int n) : q_(static_cast<signed long>(n)) {}   // NOLINT(runtime/explicit)
  explicit Rational(const mpz_class& z) : q_(z) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q".
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
    return Rational(num, den);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  double to_double() const { return q_.get_d(); }

  /// Canonical text form: "p" when integral, otherwise "p/q".
  std::string to_string() const { return q_.get_str(); }

  const mpq_class& raw() const { return q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
  }

 private:
  mpq_class q_;
};

/// C(n, k), exact; 0 when k > n.
inline Rational binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

/// n! / (a! b! c!); requires a + b + c = n, else returns 0.
inline Rational multinomial(unsigned long n, unsigned long a, unsigned long b,
                            unsigned long c) {
  if (a + b + c != n) return Rational(0);
  mpz_class num, d1, d2, d3;
  mpz_fac_ui(num.get_mpz_t(), n);
  mpz_fac_ui(d1.get_mpz_t(), a);
  mpz_fac_ui(d2.get_mpz_t(), b);
  mpz_fac_ui(d3.get_mpz_t(), c);
  return Rational(num, d1 * d2 * d3);
}

/// n! as an exact rational.
inline Rational factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

/// Exact integer power m^e for rational m.
inline Rational pow_rational(const Rational& base, unsigned long e) {
  return base.pow(e);
}

}  // namespace genocchi

#endif  // GENOCCHI_RATIONAL_HPP
