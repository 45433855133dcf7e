// SPDX-License-Identifier: Apache-2.0
//
// Alternating power sums sum_{k=0}^{m-1} (-1)^k k^n, three ways:
//   * direct exact summation,
//   * through GT_{n+1}(1,b) - (-1)^m GT_{n+1}(m;1,b,b), which equals
//     2(n+1) (ln b)^n * sum  -- the formula path is computed symbolically
//     in Lb so that b-independence (a constant quotient after dividing by
//     Lb^n) is itself an asserted property, not an assumption,
//   * through the Euler-polynomial form (E_n - (-1)^m E_n(m)) / 2.
//
// The variant commonly printed with GT_n over 2n (ln b)^n in place of
// GT_{n+1} over 2(n+1) (ln b)^n has a numerator of Lb-degree n-1 and can
// never be divisible by Lb^n; it is kept as an audit item.

#ifndef GENOCCHI_ALT_SUMS_HPP
#define GENOCCHI_ALT_SUMS_HPP

#include <string>

#include "genocchi/classical.hpp"
#include "genocchi/param_genocchi.hpp"
#include "genocchi/report.hpp"

namespace genocchi {

/// Both routes for one (n, m) cell.
struct AltSumWitness {
  int n = 0;
  int m = 0;
  Rational direct;
  Rational via_formula;
};

/// sum_{k=0}^{m-1} (-1)^k k^n by direct exact summation. 0^n = 0 for n >= 1.
inline Rational alt_power_sum_direct(int n, int m) {
  if (n < 1 || m < 1)
    throw std::domain_error("alt_power_sum_direct: n and m must be positive");
  Rational acc(0);
  for (int k = 1; k < m; ++k) {
    Rational term = Rational(k).pow(static_cast<unsigned long>(n));
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

namespace detail {

/// GT_j(1,b) - (-1)^m GT_j(m;1,b,b) as a polynomial in Lb alone.
inline MPoly alt_sum_numerator(int j, int m) {
  MPoly number_at_1b = g_number(j).value.substitute({{Var::La, MPoly()}});
  MPoly poly_at_m = g_poly(j).value.substitute({{Var::La, MPoly()},
                                                {Var::Lc, MPoly::var(Var::Lb)},
                                                {Var::X, MPoly(Rational(m))}});
  return (m % 2 == 0) ? number_at_1b - poly_at_m : number_at_1b + poly_at_m;
}

}  // namespace detail

/// Formula route: numerator GT_{n+1}(1,b) - (-1)^m GT_{n+1}(m;1,b,b) must
/// be exactly divisible by Lb^n with a constant quotient (that is the
/// b-independence claim); returns quotient / (2(n+1)). Throws
/// IdentityViolation when divisibility or constancy fails.
inline Rational alt_power_sum_formula(int n, int m) {
  if (n < 1 || m < 1)
    throw std::domain_error("alt_power_sum_formula: n and m must be positive");
  MPoly num = detail::alt_sum_numerator(n + 1, m);
  if (num.is_zero()) return Rational(0);
  MPoly quotient;
  try {
    quotient = num.divide_by_power(Var::Lb, static_cast<std::uint32_t>(n));
  } catch (const std::domain_error&) {
    throw IdentityViolation("alt_power_sum_formula: numerator " + num.to_string() +
                            " not divisible by Lb^" + std::to_string(n));
  }
  if (!quotient.is_constant())
    throw IdentityViolation("alt_power_sum_formula: quotient " +
                            quotient.to_string() + " is not constant");
  return quotient.constant_value() / Rational(2 * (n + 1));
}

inline AltSumWitness alt_sum_witness(int n, int m) {
  return AltSumWitness{n, m, alt_power_sum_direct(n, m), alt_power_sum_formula(n, m)};
}

/// Audits the formula route against the direct sum for one cell.
inline IdentityReport alt_formula_check(int n, int m) {
  std::map<std::string, std::string> params = {{"n", std::to_string(n)},
                                               {"m", std::to_string(m)}};
  try {
    Rational direct = alt_power_sum_direct(n, m);
    Rational formula = alt_power_sum_formula(n, m);
    return symbolic_report("altsum-formula", std::move(params), MPoly(direct),
                           MPoly(formula));
  } catch (const IdentityViolation& e) {
    IdentityReport r;
    r.identity_id = "altsum-formula";
    r.parameters = std::move(params);
    r.status = IdentityStatus::Failed;
    r.witness = e.what();
    return r;
  }
}

/// The formula with index n instead of n+1 (and divisor 2n (ln b)^n), as
/// commonly printed. Reported as an audit item; the numerator's
/// Lb-degree is n-1, so divisibility by Lb^n fails whenever the direct
/// sum is nonzero.
inline IdentityReport alt_formula_printed_check(int n, int m) {
  if (n < 1 || m < 1)
    throw std::domain_error("alt_formula_printed_check: n and m must be positive");
  std::map<std::string, std::string> params = {{"n", std::to_string(n)},
                                               {"m", std::to_string(m)}};
  MPoly num = detail::alt_sum_numerator(n, m);
  Rational direct = alt_power_sum_direct(n, m);
  IdentityReport r;
  r.identity_id = "thm-consecutive-printed";
  r.parameters = std::move(params);
  MPoly remainder;
  bool divisible = true;
  MPoly quotient;
  if (num.is_zero()) {
    quotient = MPoly();
  } else if (num.min_degree(Var::Lb) >= n) {
    quotient = num.divide_by_power(Var::Lb, static_cast<std::uint32_t>(n));
    divisible = quotient.is_constant();
  } else {
    divisible = false;
  }
  if (!divisible) {
    r.status = IdentityStatus::Failed;
    r.witness = "numerator " + num.to_string() + " not divisible by Lb^" +
                std::to_string(n) + " with constant quotient";
    return r;
  }
  Rational value = quotient.constant_value() / Rational(2 * n);
  return symbolic_report("thm-consecutive-printed", std::move(r.parameters),
                         MPoly(direct), MPoly(value));
}

/// Verifies sum_{k=0}^{m-1} (-1)^k k^n = (E_n - (-1)^m E_n(m)) / 2 exactly.
inline IdentityReport euler_variant_check(int n, int m) {
  if (n < 1 || m < 1)
    throw std::domain_error("euler_variant_check: n and m must be positive");
  ClassicalTable t(n);
  Rational en = t.euler(n);
  Rational en_at_m = t.euler_poly(n).eval({{Var::X, Rational(m)}});
  Rational rhs = (m % 2 == 0) ? (en - en_at_m) / Rational(2)
                              : (en + en_at_m) / Rational(2);
  return symbolic_report(
      "altsum-euler-variant",
      {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
      MPoly(alt_power_sum_direct(n, m)), MPoly(rhs));
}

}  // namespace genocchi

#endif  // GENOCCHI_ALT_SUMS_HPP
