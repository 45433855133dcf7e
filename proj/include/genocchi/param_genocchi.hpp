// SPDX-License-Identifier: Apache-2.0
//
// Parameterized Genocchi-type numbers GT_n(a,b) and polynomials
// GT_n(x;a,b,c), exact in Q[La,Lb,Lc,X,Y] where La/Lb/Lc stand for
// ln a / ln b / ln c. Defining generating functions:
//
//   F(t;a,b)          = 2t / (b^t + a^t)         -> GT_n(a,b)
//   F(t;a,b) c^{xt}   -> GT_n(x;a,b,c)
//   F(t;a,b)^k c^{xt} -> order-k GT_n^{(k)}(x;a,b,c)
//
// Each quantity is computed by several independent routes (closed sum,
// reflected-argument expansion, recurrence, series oracle) and the audit
// checks them against one another. Variants labelled "printed" reproduce
// defective forms found in the literature; they are evaluated and
// reported, never silently corrected.

#ifndef GENOCCHI_PARAM_GENOCCHI_HPP
#define GENOCCHI_PARAM_GENOCCHI_HPP

#include <string>
#include <vector>

#include "genocchi/classical.hpp"
#include "genocchi/mpoly.hpp"
#include "genocchi/report.hpp"
#include "genocchi/series.hpp"

namespace genocchi {

/// GT_n(a,b) as an exact polynomial in {La, Lb}.
struct GNumber {
  int n = 0;
  MPoly value;
};

/// GT_n^{(order)}(x;a,b,c) as an exact polynomial in {La, Lb, Lc, X}.
struct GPoly {
  int n = 0;
  int order = 1;
  MPoly value;
};

/// Closed form: GT_n(a,b) = sum_{k=1}^{n} C(n,k) (-1)^{n-k} La^{n-k}
/// (Lb - La)^{k-1} G_k. The k = 0 term vanishes with G_0 = 0, so the
/// (Lb - La)^{-1} power never materializes.
inline GNumber g_number(int n) {
  if (n < 0) throw std::domain_error("g_number: negative index");
  ClassicalTable t(n);
  MPoly la = MPoly::var(Var::La);
  MPoly lb_minus_la = MPoly::var(Var::Lb) - la;
  MPoly acc;
  for (int k = 1; k <= n; ++k) {
    if (t.genocchi(k).is_zero()) continue;
    Rational sign = ((n - k) % 2 == 0) ? Rational(1) : Rational(-1);
    MPoly term(binomial(n, k) * sign * t.genocchi(k));
    term *= la.pow(static_cast<std::uint32_t>(n - k));
    term *= lb_minus_la.pow(static_cast<std::uint32_t>(k - 1));
    acc += term;
  }
  return GNumber{n, acc};
}

/// Reflected-argument route: GT_n(a,b) = (Lb - La)^{n-1} G_n(z) with
/// z = La / (La - Lb), expanded termwise using deg G_n(x) <= n-1 so the
/// rational argument never leaves the polynomial ring:
///   GT_n = sum_i g_i (-1)^i La^i (Lb - La)^{n-1-i},  G_n(x) = sum_i g_i x^i.
inline GNumber g_number_alt(int n) {
  if (n < 1) throw std::domain_error("g_number_alt: index must be >= 1");
  MPoly gnx = genocchi_poly(n);
  MPoly la = MPoly::var(Var::La);
  MPoly lb_minus_la = MPoly::var(Var::Lb) - la;
  MPoly acc;
  for (const auto& [mono, coeff] : gnx.terms()) {
    int i = static_cast<int>(mono[Var::X]);
    if (i > n - 1)
      throw IdentityViolation("g_number_alt: deg G_n(x) exceeds n-1");
    Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
    MPoly term(coeff * sign);
    term *= la.pow(static_cast<std::uint32_t>(i));
    term *= lb_minus_la.pow(static_cast<std::uint32_t>(n - 1 - i));
    acc += term;
  }
  return GNumber{n, acc};
}

/// Fills GT_0..GT_max_n by the recurrence obtained from
/// (b^t + a^t) F(t;a,b) = 2t:
///   sum_{k=0}^{n} C(n,k) (La^{n-k} + Lb^{n-k}) GT_k = 2 [n = 1],
/// solving for GT_n at each step (the k = n term contributes 2 GT_n).
inline std::vector<GNumber> g_recurrence_table(int max_n) {
  if (max_n < 0) throw std::domain_error("g_recurrence_table: negative max_n");
  MPoly la = MPoly::var(Var::La);
  MPoly lb = MPoly::var(Var::Lb);
  std::vector<GNumber> table;
  table.reserve(static_cast<std::size_t>(max_n) + 1);
  table.push_back(GNumber{0, MPoly()});
  for (int n = 1; n <= max_n; ++n) {
    MPoly acc;
    for (int k = 0; k < n; ++k) {
      MPoly weight = la.pow(static_cast<std::uint32_t>(n - k)) +
                     lb.pow(static_cast<std::uint32_t>(n - k));
      acc += MPoly(binomial(n, k)) * weight * table[static_cast<std::size_t>(k)].value;
    }
    MPoly rhs = (n == 1) ? MPoly(Rational(2)) : MPoly();
    table.push_back(GNumber{n, (rhs - acc) * Rational(1, 2)});
  }
  return table;
}

/// GT_n(x;a,b,c) = sum_{k=0}^{n} C(n,k) (X Lc)^{n-k} GT_k(a,b).
inline GPoly g_poly(int n) {
  if (n < 0) throw std::domain_error("g_poly: negative index");
  MPoly xlc = MPoly::var(Var::X) * MPoly::var(Var::Lc);
  MPoly acc;
  for (int k = 0; k <= n; ++k) {
    MPoly gk = g_number(k).value;
    if (gk.is_zero()) continue;
    acc += MPoly(binomial(n, k)) * xlc.pow(static_cast<std::uint32_t>(n - k)) * gk;
  }
  return GPoly{n, 1, acc};
}

/// Double-sum form obtained by expanding GT_k(a,b) inside g_poly:
///   sum_{k=0}^{n} sum_{j=1}^{k} (n; j, n-k, k-j) (-1)^{k-j}
///     X^{n-k} Lc^{n-k} La^{k-j} (Lb - La)^{j-1} G_j.
/// The exponent on (Lb - La) is j-1; commonly printed forms carry
/// n+j-k-1 instead and fail the oracle (see g_poly_multinomial_printed).
/// j = 0 terms are dropped (G_0 = 0 guards the negative exponent).
inline GPoly g_poly_multinomial(int n) {
  if (n < 0) throw std::domain_error("g_poly_multinomial: negative index");
  ClassicalTable t(n);
  MPoly la = MPoly::var(Var::La);
  MPoly lb_minus_la = MPoly::var(Var::Lb) - la;
  MPoly xlc = MPoly::var(Var::X) * MPoly::var(Var::Lc);
  MPoly acc;
  for (int k = 0; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      if (t.genocchi(j).is_zero()) continue;
      Rational coeff = multinomial(n, j, n - k, k - j) * t.genocchi(j);
      if ((k - j) % 2 != 0) coeff = -coeff;
      MPoly term(coeff);
      term *= xlc.pow(static_cast<std::uint32_t>(n - k));
      term *= la.pow(static_cast<std::uint32_t>(k - j));
      term *= lb_minus_la.pow(static_cast<std::uint32_t>(j - 1));
      acc += term;
    }
  }
  return GPoly{n, 1, acc};
}

/// The same double sum with the (Lb - La) exponent as commonly printed,
/// n+j-k-1. Kept for the audit; does not equal g_poly in general.
inline GPoly g_poly_multinomial_printed(int n) {
  if (n < 0) throw std::domain_error("g_poly_multinomial_printed: negative index");
  ClassicalTable t(n);
  MPoly la = MPoly::var(Var::La);
  MPoly lb_minus_la = MPoly::var(Var::Lb) - la;
  MPoly xlc = MPoly::var(Var::X) * MPoly::var(Var::Lc);
  MPoly acc;
  for (int k = 0; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      if (t.genocchi(j).is_zero()) continue;
      int ee = n + j - k - 1;
      if (ee < 0) continue;  // only reachable at j = 0, kept for safety
      Rational coeff = multinomial(n, j, n - k, k - j) * t.genocchi(j);
      if ((k - j) % 2 != 0) coeff = -coeff;
      MPoly term(coeff);
      term *= xlc.pow(static_cast<std::uint32_t>(n - k));
      term *= la.pow(static_cast<std::uint32_t>(k - j));
      term *= lb_minus_la.pow(static_cast<std::uint32_t>(ee));
      acc += term;
    }
  }
  return GPoly{n, 1, acc};
}

/// GT_n^{(k)}(x;a,b,c) = n! [t^n] F(t;a,b)^k c^{xt}, extracted from the
/// series oracle. The generating function is the definition; no closed
/// sum is assumed for k > 1.
inline GPoly g_poly_higher(int n, int k) {
  if (n < 0) throw std::domain_error("g_poly_higher: negative index");
  if (k < 1) throw std::domain_error("g_poly_higher: order must be positive");
  return GPoly{n, k, expand_power(n, k).egf_coeff(n)};
}

namespace detail {

/// Substitutes the product X*Lc |-> image in a polynomial where X and Lc
/// only occur as equal powers (true for every GT_n(x;a,b,c)): replace X
/// by the image and Lc by 1.
inline MPoly substitute_xlc(const MPoly& p, const MPoly& image) {
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono[Var::X] != mono[Var::Lc])
      throw std::domain_error("substitute_xlc: X and Lc powers differ");
  }
  return p.substitute({{Var::X, image}, {Var::Lc, MPoly(Rational(1))}});
}

inline std::map<std::string, std::string> params_n(int n) {
  return {{"n", std::to_string(n)}};
}

/// Joint verdict over several labelled sub-identities; verified iff every
/// difference is the zero polynomial. Witnesses of failing parts are
/// reported individually so one defect cannot cancel another.
inline IdentityReport multi_part_report(
    std::string id, std::map<std::string, std::string> params,
    const std::vector<std::pair<std::string, MPoly>>& diffs) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  std::string witness;
  bool ok = true;
  for (const auto& [label, diff] : diffs) {
    if (diff.is_zero()) continue;
    ok = false;
    if (!witness.empty()) witness += "; ";
    witness += label + ": " + diff.to_string();
  }
  r.status = ok ? IdentityStatus::Verified : IdentityStatus::Failed;
  r.witness = ok ? "0" : witness;
  r.tolerance = 0.0;
  return r;
}

}  // namespace detail

/// Verifies GT_n^{(l+k)}(x+y;...) = sum_j C(n,j) GT_j^{(l)}(x;...)
/// GT_{n-j}^{(k)}(y;...) exactly in Q[La,Lb,Lc,X,Y]. The second factor
/// uses Y in place of X.
inline IdentityReport convolution_check(int n, int l, int k) {
  if (n < 1 || l < 1 || k < 1)
    throw std::domain_error("convolution_check: n, l, k must be positive");
  MPoly lhs = g_poly_higher(n, l + k).value.substitute(
      {{Var::X, MPoly::var(Var::X) + MPoly::var(Var::Y)}});
  MPoly rhs;
  for (int j = 0; j <= n; ++j) {
    MPoly left = g_poly_higher(j, l).value;
    MPoly right = g_poly_higher(n - j, k).value.swap_vars(Var::X, Var::Y);
    rhs += MPoly(binomial(n, j)) * left * right;
  }
  return symbolic_report(
      "convolution",
      {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"k", std::to_string(k)}},
      lhs, rhs);
}

/// Verifies the x -> x+1 shift in all four forms:
///  (i)   GT_n(x+1;a,b,c) = sum_k C(n,k) GT_k(x;a,b,c) Lc^{n-k},
///  (ii)  GT_n(x+1;a,b,c) = GT_n(x; a/c, b/c, c)   (La,Lb -> La-Lc, Lb-Lc),
///  (iii) at a=1, b=c:  GT_n(x+1;1,b,b) = 2n Lb^{n-1} X^{n-1} - GT_n(x;1,b,b),
///  (iv)  additionally at b=e: G_n(x+1) = 2n x^{n-1} - G_n(x).
inline IdentityReport shift_check(int n) {
  if (n < 1) throw std::domain_error("shift_check: n must be >= 1");
  MPoly p = g_poly(n).value;
  MPoly shifted = p.substitute({{Var::X, MPoly::var(Var::X) + MPoly(Rational(1))}});

  MPoly rhs_i;
  for (int k = 0; k <= n; ++k) {
    rhs_i += MPoly(binomial(n, k)) * g_poly(k).value *
             MPoly::var(Var::Lc, static_cast<std::uint32_t>(n - k));
  }

  MPoly lc = MPoly::var(Var::Lc);
  MPoly rhs_ii = p.substitute({{Var::La, MPoly::var(Var::La) - lc},
                               {Var::Lb, MPoly::var(Var::Lb) - lc}});

  // (iii): substitute a = 1 (La -> 0), c = b (Lc -> Lb).
  std::map<Var, MPoly> at_1bb = {{Var::La, MPoly()}, {Var::Lc, MPoly::var(Var::Lb)}};
  MPoly lhs_iii = shifted.substitute(at_1bb);
  MPoly rhs_iii = MPoly(Rational(2 * n)) *
                      MPoly::var(Var::Lb, static_cast<std::uint32_t>(n - 1)) *
                      MPoly::var(Var::X, static_cast<std::uint32_t>(n - 1)) -
                  p.substitute(at_1bb);

  // (iv): additionally b = e (Lb -> 1); compare with the classical table.
  std::map<Var, MPoly> at_e = {{Var::Lb, MPoly(Rational(1))}};
  MPoly lhs_iv = lhs_iii.substitute(at_e);
  MPoly rhs_iv = MPoly(Rational(2 * n)) *
                     MPoly::var(Var::X, static_cast<std::uint32_t>(n - 1)) -
                 genocchi_poly(n);

  return detail::multi_part_report("shift-x-plus-1", detail::params_n(n),
                                   {{"binomial-shift", shifted - rhs_i},
                                    {"param-ratio", shifted - rhs_ii},
                                    {"reflection-1bb", lhs_iii - rhs_iii},
                                    {"reflection-classical", lhs_iv - rhs_iv}});
}

/// Verifies GT_n(x+y;...) = sum_k C(n,k) GT_k(x;...) (Lc Y)^{n-k} and its
/// X <-> Y mirror, exactly in Q[La,Lb,Lc,X,Y].
inline IdentityReport addition_check(int n) {
  if (n < 1) throw std::domain_error("addition_check: n must be >= 1");
  MPoly p = g_poly(n).value;
  MPoly lhs = p.substitute({{Var::X, MPoly::var(Var::X) + MPoly::var(Var::Y)}});
  MPoly rhs_x, rhs_y;
  for (int k = 0; k <= n; ++k) {
    MPoly w = (MPoly::var(Var::Lc) * MPoly::var(Var::Y))
                  .pow(static_cast<std::uint32_t>(n - k));
    rhs_x += MPoly(binomial(n, k)) * g_poly(k).value * w;
    MPoly wv = (MPoly::var(Var::Lc) * MPoly::var(Var::X))
                   .pow(static_cast<std::uint32_t>(n - k));
    rhs_y += MPoly(binomial(n, k)) * g_poly(k).value.swap_vars(Var::X, Var::Y) * wv;
  }
  return detail::multi_part_report("addition-corollary", detail::params_n(n),
                                   {{"shift-by-y", lhs - rhs_x},
                                    {"shift-by-x", lhs - rhs_y}});
}

/// Distribution formula for odd y, derived from the telescoping
/// factorization (b^t + a^t) sum_j (-1)^j a^{(y-1-j)t} b^{jt} = a^{yt} + b^{yt}:
///   GT_n(x;a,b,c) = y^{n-1} sum_{j=0}^{y-1} (-1)^j GT_n(1;a,b,c_j),
///   ln c_j = (X Lc + j Lb + (y-1-j) La) / y.
/// GT_n depends on x and c only through X*Lc, so "evaluate at 1 with
/// parameter c_j" is the linear substitution X Lc -> ln c_j.
inline IdentityReport multiplication_check(int n, int y) {
  if (n < 1) throw std::domain_error("multiplication_check: n must be >= 1");
  if (y < 1 || y % 2 == 0)
    throw std::domain_error("multiplication_check: y must be odd and positive");
  MPoly p = g_poly(n).value;
  Rational inv_y = Rational(1, y);
  MPoly rhs;
  for (int j = 0; j < y; ++j) {
    MPoly image = (MPoly::var(Var::X) * MPoly::var(Var::Lc) +
                   MPoly(Rational(j)) * MPoly::var(Var::Lb) +
                   MPoly(Rational(y - 1 - j)) * MPoly::var(Var::La)) *
                  inv_y;
    MPoly term = detail::substitute_xlc(p, image);
    rhs += (j % 2 == 0) ? term : -term;
  }
  rhs *= Rational(y).pow(static_cast<unsigned long>(n - 1));
  IdentityReport r = symbolic_report("thm-mult-derived", detail::params_n(n), p, rhs);
  r.parameters["y"] = std::to_string(y);
  return r;
}

/// The multiplication statement as commonly printed: inner argument j/y
/// with parameter c^{x/y} b^{j/y} / a^{(j+1)/y}, i.e.
///   X Lc -> (j/y) * (X Lc + j Lb - (j+1) La) / y.
/// Evaluated verbatim for the audit; fails for n >= 2.
inline IdentityReport multiplication_check_printed(int n, int y) {
  if (n < 0) throw std::domain_error("multiplication_check_printed: negative n");
  if (y < 1 || y % 2 == 0)
    throw std::domain_error("multiplication_check_printed: y must be odd and positive");
  MPoly p = g_poly(n).value;
  MPoly rhs;
  for (int j = 0; j < y; ++j) {
    MPoly inner_lc = (MPoly::var(Var::X) * MPoly::var(Var::Lc) +
                      MPoly(Rational(j)) * MPoly::var(Var::Lb) -
                      MPoly(Rational(j + 1)) * MPoly::var(Var::La)) *
                     Rational(1, y);
    MPoly image = inner_lc * Rational(j, y);
    MPoly term = detail::substitute_xlc(p, image);
    rhs += (j % 2 == 0) ? term : -term;
  }
  if (n >= 1) rhs *= Rational(y).pow(static_cast<unsigned long>(n - 1));
  IdentityReport r = symbolic_report("thm-mult-printed", detail::params_n(n), p, rhs);
  r.parameters["y"] = std::to_string(y);
  return r;
}

/// Verifies the four reductions:
///   GT_n(x;1,e,e) = G_n(x);  GT_n(x;a,b,1) = GT_n(a,b);
///   GT_n(0;a,b,c) = GT_n(a,b);  GT_n(0;1,e,e) = G_n.
inline IdentityReport reduce_check(int n) {
  if (n < 0) throw std::domain_error("reduce_check: negative index");
  MPoly p = g_poly(n).value;
  MPoly gn = g_number(n).value;

  MPoly to_classical = p.substitute({{Var::La, MPoly()},
                                     {Var::Lb, MPoly(Rational(1))},
                                     {Var::Lc, MPoly(Rational(1))}}) -
                       genocchi_poly(n);
  MPoly c_equals_1 = p.substitute({{Var::Lc, MPoly()}}) - gn;
  MPoly x_equals_0 = p.substitute({{Var::X, MPoly()}}) - gn;
  MPoly to_number = p.substitute({{Var::X, MPoly()},
                                  {Var::La, MPoly()},
                                  {Var::Lb, MPoly(Rational(1))},
                                  {Var::Lc, MPoly(Rational(1))}}) -
                    MPoly(genocchi_number(n));
  return detail::multi_part_report("reduce-remark", detail::params_n(n),
                                   {{"x-1-e-e", to_classical},
                                    {"c-equals-1", c_equals_1},
                                    {"x-equals-0", x_equals_0},
                                    {"number-at-1-e-e", to_number}});
}

/// GT_3(a,b) as commonly printed: -6 (ln a)^2 + 3 ln a ln b. The series
/// oracle gives 3 ln a ln b; the printed value is an audit item.
inline IdentityReport g3_printed_check() {
  MPoly printed = MPoly(Rational(-6)) * MPoly::var(Var::La, 2) +
                  MPoly(Rational(3)) * MPoly::var(Var::La) * MPoly::var(Var::Lb);
  return symbolic_report("g3-printed", {{"n", "3"}}, printed, g_number(3).value);
}

/// The printed recurrence
///   GT_n + sum_{k=0}^{n} C(n,k) (Lb-La)^{k-n} GT_k = 2n (-La)^{n-1}
/// carries negative powers of (Lb - La); it is audited after clearing
/// denominators by (Lb - La)^n, with the oracle-verified GT_k substituted.
inline IdentityReport recurrence_printed_check(int n) {
  if (n < 2) throw std::domain_error("recurrence_printed_check: n must be >= 2");
  std::vector<GNumber> g = g_recurrence_table(n);
  MPoly lb_minus_la = MPoly::var(Var::Lb) - MPoly::var(Var::La);
  MPoly cleared = lb_minus_la.pow(static_cast<std::uint32_t>(n));

  MPoly lhs = cleared * g[static_cast<std::size_t>(n)].value;
  for (int k = 0; k <= n; ++k) {
    lhs += MPoly(binomial(n, k)) * lb_minus_la.pow(static_cast<std::uint32_t>(k)) *
           g[static_cast<std::size_t>(k)].value;
  }
  MPoly rhs = MPoly(Rational(2 * n)) *
              (-MPoly::var(Var::La)).pow(static_cast<std::uint32_t>(n - 1)) * cleared;
  return symbolic_report("recurrence-2bBb-printed", detail::params_n(n), lhs, rhs);
}

}  // namespace genocchi

#endif  // GENOCCHI_PARAM_GENOCCHI_HPP
