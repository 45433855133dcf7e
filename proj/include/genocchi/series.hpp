// SPDX-License-Identifier: Apache-2.0
//
// Truncated power series in t with MPoly coefficients. This is the
// expansion oracle: 2t / (b^t + a^t) and its powers are expanded by exact
// series division and Cauchy products, and every closed-form value in the
// library is re-derived from these coefficients.

#ifndef GENOCCHI_SERIES_HPP
#define GENOCCHI_SERIES_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "genocchi/mpoly.hpp"

namespace genocchi {

/// Truncation of sum_n c[n] t^n at a fixed order. Coefficients are plain
/// (the 1/n! of an exponential series is folded into c[n]); egf_coeff
/// rescales by n! on extraction.
class SeriesTrunc {
 public:
  explicit SeriesTrunc(int order)
      : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::domain_error("SeriesTrunc: negative order");
  }

  SeriesTrunc(int order, std::vector<MPoly> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
      throw std::domain_error("SeriesTrunc: coefficient count != order + 1");
  }

  int order() const { return order_; }

  const MPoly& coeff(int n) const {
    check_index(n);
    return coeffs_[static_cast<std::size_t>(n)];
  }

  MPoly& coeff(int n) {
    check_index(n);
    return coeffs_[static_cast<std::size_t>(n)];
  }

  /// n! * c[n]: the exponential-generating-function coefficient.
  MPoly egf_coeff(int n) const {
    check_index(n);
    return coeffs_[static_cast<std::size_t>(n)] * factorial(static_cast<unsigned long>(n));
  }

  /// exp(rate * t) truncated: c[n] = rate^n / n!.
  static SeriesTrunc exp_series(const MPoly& rate, int order) {
    SeriesTrunc s(order);
    MPoly p(Rational(1));
    s.coeff(0) = p;
    for (int n = 1; n <= order; ++n) {
      p = p * rate;
      s.coeff(n) = p * (Rational(1) / factorial(static_cast<unsigned long>(n)));
    }
    return s;
  }

  /// c * t^k as a truncated series.
  static SeriesTrunc monomial(const Rational& c, int k, int order) {
    SeriesTrunc s(order);
    if (k <= order) s.coeff(k) = MPoly(c);
    return s;
  }

  friend SeriesTrunc operator+(const SeriesTrunc& p, const SeriesTrunc& q) {
    require_same_order(p, q);
    SeriesTrunc r(p.order_);
    for (int n = 0; n <= p.order_; ++n) r.coeff(n) = p.coeff(n) + q.coeff(n);
    return r;
  }

  friend SeriesTrunc operator-(const SeriesTrunc& p, const SeriesTrunc& q) {
    require_same_order(p, q);
    SeriesTrunc r(p.order_);
    for (int n = 0; n <= p.order_; ++n) r.coeff(n) = p.coeff(n) - q.coeff(n);
    return r;
  }

  /// Cauchy product, truncated at the common order.
  friend SeriesTrunc operator*(const SeriesTrunc& p, const SeriesTrunc& q) {
    require_same_order(p, q);
    SeriesTrunc r(p.order_);
    for (int n = 0; n <= p.order_; ++n) {
      MPoly acc;
      for (int i = 0; i <= n; ++i) acc += p.coeff(i) * q.coeff(n - i);
      r.coeff(n) = acc;
    }
    return r;
  }

  /// Unique q with q * den = num up to the truncation order, by forward
  /// substitution. The divisor's constant term must be a nonzero rational
  /// constant.
  static SeriesTrunc div(const SeriesTrunc& num, const SeriesTrunc& den) {
    require_same_order(num, den);
    const MPoly& d0 = den.coeff(0);
    if (!d0.is_constant() || d0.is_zero())
      throw std::domain_error("SeriesTrunc: non-invertible leading coefficient");
    Rational inv_d0 = Rational(1) / d0.constant_value();
    SeriesTrunc q(num.order_);
    for (int n = 0; n <= num.order_; ++n) {
      MPoly acc = num.coeff(n);
      for (int i = 0; i < n; ++i) acc -= q.coeff(i) * den.coeff(n - i);
      q.coeff(n) = acc * inv_d0;
    }
    return q;
  }

  friend bool operator==(const SeriesTrunc& p, const SeriesTrunc& q) {
    return p.order_ == q.order_ && p.coeffs_ == q.coeffs_;
  }

 private:
  static void require_same_order(const SeriesTrunc& p, const SeriesTrunc& q) {
    if (p.order_ != q.order_)
      throw std::domain_error("SeriesTrunc: order mismatch");
  }

  void check_index(int n) const {
    if (n < 0 || n > order_)
      throw std::domain_error("SeriesTrunc: index " + std::to_string(n) +
                              " out of range for order " + std::to_string(order_));
  }

  int order_;
  std::vector<MPoly> coeffs_;
};

/// 2t / (b^t + a^t): the base expansion. Its EGF coefficients are the
/// parameterized Genocchi-type numbers.
inline SeriesTrunc expand_base(int order) {
  SeriesTrunc den = SeriesTrunc::exp_series(MPoly::var(Var::Lb), order) +
                    SeriesTrunc::exp_series(MPoly::var(Var::La), order);
  SeriesTrunc num = SeriesTrunc::monomial(Rational(2), 1, order);
  return SeriesTrunc::div(num, den);
}

/// (2t / (b^t + a^t))^k * c^{x t}: EGF coefficients are the order-k
/// polynomials in x.
inline SeriesTrunc expand_power(int order, int k) {
  if (k < 1) throw std::domain_error("expand_power: k must be positive");
  SeriesTrunc base = expand_base(order);
  SeriesTrunc acc = base;
  for (int i = 1; i < k; ++i) acc = acc * base;
  SeriesTrunc cxt =
      SeriesTrunc::exp_series(MPoly::var(Var::X) * MPoly::var(Var::Lc), order);
  return acc * cxt;
}

}  // namespace genocchi

#endif  // GENOCCHI_SERIES_HPP
