// SPDX-License-Identifier: Apache-2.0
//
// Classical sequences: Genocchi numbers G_n (EGF 2t/(e^t + 1)), Euler
// numbers/polynomials in the 2/(e^t + 1) convention, and Bernoulli
// numbers, each from its own recurrence so the inter-sequence relations
// are genuine cross-checks rather than restatements.
//
// Note on conventions: E_n here means the EGF coefficients of
// 2/(e^t + 1), so E_0 = 1, E_1 = -1/2, E_2 = 0, ... These are the values
// E_n(0) of the Euler polynomials, NOT the integer secant numbers
// (1, 0, -1, 0, 5, ...). Equivalently E_n = G_{n+1}/(n+1).

#ifndef GENOCCHI_CLASSICAL_HPP
#define GENOCCHI_CLASSICAL_HPP

#include <vector>

#include "genocchi/mpoly.hpp"
#include "genocchi/rational.hpp"
#include "genocchi/report.hpp"

namespace genocchi {

/// Exact tables of G_n, E_n, B_n filled once per instance. Immutable
/// after construction; safe to share across threads.
class ClassicalTable {
 public:
  explicit ClassicalTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::domain_error("ClassicalTable: negative max_n");
    fill_genocchi();
    fill_euler();
    fill_bernoulli();
  }

  int max_n() const { return max_n_; }

  /// G_n from the umbral recurrence
  ///   sum_{k=0}^{n} C(n,k) G_k + G_n = 2 [n = 1],  G_0 = 0.
  const Rational& genocchi(int n) const { return genocchi_.at(n); }

  /// E_n from the umbral recurrence of 2/(e^t + 1):
  ///   sum_{k=0}^{n} C(n,k) E_k + E_n = 2 [n = 0].
  const Rational& euler(int n) const { return euler_.at(n); }

  /// B_n (B_1 = -1/2 convention) from
  ///   sum_{k=0}^{n} C(n+1,k) B_k = [n = 0].
  const Rational& bernoulli(int n) const { return bernoulli_.at(n); }

  /// G_n(x) = sum_k C(n,k) G_k x^{n-k}, as a polynomial in X.
  MPoly genocchi_poly(int n) const {
    MPoly p;
    for (int k = 0; k <= n; ++k) {
      p += MPoly(binomial(n, k) * genocchi(k)) *
           MPoly::var(Var::X, static_cast<std::uint32_t>(n - k));
    }
    return p;
  }

  /// E_n(x) = sum_k C(n,k) E_k x^{n-k}; E_n(0) = E_n.
  MPoly euler_poly(int n) const {
    MPoly p;
    for (int k = 0; k <= n; ++k) {
      p += MPoly(binomial(n, k) * euler(k)) *
           MPoly::var(Var::X, static_cast<std::uint32_t>(n - k));
    }
    return p;
  }

 private:
  void fill_genocchi() {
    genocchi_.assign(max_n_ + 1, Rational(0));
    for (int n = 1; n <= max_n_; ++n) {
      Rational acc(0);
      for (int k = 0; k < n; ++k) acc += binomial(n, k) * genocchi_[k];
      Rational rhs = (n == 1) ? Rational(2) : Rational(0);
      genocchi_[n] = (rhs - acc) / Rational(2);
    }
  }

  void fill_euler() {
    euler_.assign(max_n_ + 1, Rational(0));
    if (max_n_ >= 0) euler_[0] = Rational(1);
    for (int n = 1; n <= max_n_; ++n) {
      Rational acc(0);
      for (int k = 0; k < n; ++k) acc += binomial(n, k) * euler_[k];
      euler_[n] = -acc / Rational(2);
    }
  }

  void fill_bernoulli() {
    bernoulli_.assign(max_n_ + 1, Rational(0));
    for (int n = 0; n <= max_n_; ++n) {
      Rational acc(0);
      for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * bernoulli_[k];
      Rational rhs = (n == 0) ? Rational(1) : Rational(0);
      bernoulli_[n] = (rhs - acc) / Rational(n + 1);
    }
  }

  int max_n_;
  std::vector<Rational> genocchi_;
  std::vector<Rational> euler_;
  std::vector<Rational> bernoulli_;
};

inline Rational genocchi_number(int n) { return ClassicalTable(n).genocchi(n); }

inline Rational euler_number(int n) { return ClassicalTable(n).euler(n); }

inline Rational bernoulli_number(int n) { return ClassicalTable(n).bernoulli(n); }

inline MPoly genocchi_poly(int n) { return ClassicalTable(n).genocchi_poly(n); }

inline MPoly euler_poly(int n) { return ClassicalTable(n).euler_poly(n); }

/// Exact verification of the three classical inter-sequence relations
/// for all n <= max_n:
///   E_n = G_{n+1}/(n+1),
///   G_{2n} = 2 (1 - 2^{2n}) B_{2n},
///   G_{2n} = 2n E_{2n-1}(0).
inline std::vector<IdentityReport> classical_relations_check(int max_n) {
  if (max_n < 2) throw std::domain_error("classical_relations_check: max_n must be >= 2");
  ClassicalTable t(max_n + 1);
  std::vector<IdentityReport> out;

  for (int n = 0; n <= max_n; ++n) {
    MPoly lhs(t.euler(n));
    MPoly rhs(t.genocchi(n + 1) / Rational(n + 1));
    out.push_back(symbolic_report("classical-euler-genocchi",
                                  {{"n", std::to_string(n)}}, lhs, rhs));
  }
  for (int n = 1; 2 * n <= max_n; ++n) {
    Rational pow4 = Rational(2).pow(static_cast<unsigned long>(2 * n));
    MPoly lhs(t.genocchi(2 * n));
    MPoly rhs(Rational(2) * (Rational(1) - pow4) * t.bernoulli(2 * n));
    out.push_back(symbolic_report("classical-genocchi-bernoulli",
                                  {{"n", std::to_string(2 * n)}}, lhs, rhs));
  }
  for (int n = 1; 2 * n <= max_n; ++n) {
    Rational e_at_0 = t.euler_poly(2 * n - 1).eval({{Var::X, Rational(0)}});
    MPoly lhs(t.genocchi(2 * n));
    MPoly rhs(Rational(2 * n) * e_at_0);
    out.push_back(symbolic_report("classical-genocchi-euler-poly",
                                  {{"n", std::to_string(2 * n)}}, lhs, rhs));
  }
  return out;
}

}  // namespace genocchi

#endif  // GENOCCHI_CLASSICAL_HPP
