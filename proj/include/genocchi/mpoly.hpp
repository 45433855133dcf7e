// SPDX-License-Identifier: Apache-2.0
//
// Sparse multivariate polynomial ring over Rational in five fixed
// indeterminates La, Lb, Lc, X, Y (read: ln a, ln b, ln c, x, y). The
// term map is kept canonical (no zero coefficients, graded-lex order),
// so polynomial equality is structural equality and identity checks
// reduce to "difference is the zero polynomial".

#ifndef GENOCCHI_MPOLY_HPP
#define GENOCCHI_MPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "genocchi/rational.hpp"

namespace genocchi {

enum class Var : int { La = 0, Lb = 1, Lc = 2, X = 3, Y = 4 };

inline constexpr int kNumVars = 5;

inline const char* var_name(Var v) {
  switch (v) {
    case Var::La: return "La";
    case Var::Lb: return "Lb";
    case Var::Lc: return "Lc";
    case Var::X:  return "X";
    case Var::Y:  return "Y";
  }
  return "?";
}

/// Exponent vector of one monomial.
struct Monomial {
  std::array<std::uint32_t, kNumVars> e{};

  std::uint32_t operator[](Var v) const { return e[static_cast<int>(v)]; }
  std::uint32_t& operator[](Var v) { return e[static_cast<int>(v)]; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Graded lexicographic order with La > Lb > Lc > X > Y, highest first.
/// Storing terms in this order makes map iteration the canonical
/// rendering order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.e > b.e;  // lexicographic on (La,...,Y)
  }
};

class MPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  MPoly() = default;
  MPoly(const Rational& c) { if (!c.is_zero()) terms_[Monomial{}] = c; }  // NOLINT
  MPoly(long n) : MPoly(Rational(n)) {}                                   // NOLINT
  MPoly(int n) : MPoly(Rational(n)) {}                                    // NOLINT

  static MPoly constant(const Rational& c) { return MPoly(c); }

  static MPoly var(Var v, std::uint32_t power = 1) {
    MPoly p;
    if (power == 0) return MPoly(Rational(1));
    Monomial m;
    m[v] = power;
    p.terms_[m] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
  }

  /// Value of a constant polynomial; throws if non-constant.
  Rational constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw std::domain_error("MPoly: not a constant");
    return terms_.begin()->second;
  }

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Degree in one indeterminate; -1 for the zero polynomial.
  int degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[v]));
    return d;
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total_degree());
  }

  /// Total degree counting only the given indeterminates; -1 for zero.
  /// The Genocchi-type polynomials are homogeneous of degree n-1 in the
  /// logarithmic indeterminates {La, Lb, Lc} (x carries no log weight).
  int degree_over(std::initializer_list<Var> vars) const {
    if (terms_.empty()) return -1;
    int best = 0;
    for (const auto& [m, c] : terms_) {
      int d = 0;
      for (Var v : vars) d += static_cast<int>(m[v]);
      best = std::max(best, d);
    }
    return best;
  }

  /// Lowest exponent of v over all terms; -1 for the zero polynomial.
  int min_degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int ev = static_cast<int>(m[v]);
      d = (d < 0) ? ev : std::min(d, ev);
    }
    return d;
  }

  MPoly operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = ma.e[i] + mb.e[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly& operator*=(const Rational& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [m, cf] : terms_) cf *= c;
    return *this;
  }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  MPoly pow(std::uint32_t e) const {
    MPoly r(Rational(1));
    MPoly base = *this;
    while (e > 0) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e > 0) base *= base;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Simultaneous exact substitution; indeterminates absent from the map
  /// stay untouched. Ring homomorphism.
  MPoly substitute(const std::map<Var, MPoly>& bindings) const {
    MPoly r;
    // Powers of each bound image are reused across terms.
    std::array<std::map<std::uint32_t, MPoly>, kNumVars> power_cache;
    for (const auto& [m, c] : terms_) {
      MPoly term(c);
      for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        Var v = static_cast<Var>(i);
        auto it = bindings.find(v);
        if (it == bindings.end()) {
          term *= MPoly::var(v, m.e[i]);
        } else {
          auto& cache = power_cache[i];
          auto pit = cache.find(m.e[i]);
          if (pit == cache.end())
            pit = cache.emplace(m.e[i], it->second.pow(m.e[i])).first;
          term *= pit->second;
        }
      }
      r += term;
    }
    return r;
  }

  /// Exact evaluation at a rational point. Every indeterminate occurring
  /// in the polynomial must be bound.
  Rational eval(const std::map<Var, Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        Var v = static_cast<Var>(i);
        auto it = point.find(v);
        if (it == point.end())
          throw std::domain_error(std::string("MPoly: unbound indeterminate ") +
                                  var_name(v));
        term *= it->second.pow(m.e[i]);
      }
      acc += term;
    }
    return acc;
  }

  /// Evaluation into an arbitrary commutative ring T. `lift` maps a
  /// Rational coefficient into T; T needs *, +=, and copy.
  template <class T, class LiftFn>
  T eval_as(const std::map<Var, T>& point, LiftFn lift) const {
    T acc = lift(Rational(0));
    for (const auto& [m, c] : terms_) {
      T term = lift(c);
      for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        Var v = static_cast<Var>(i);
        auto it = point.find(v);
        if (it == point.end())
          throw std::domain_error(std::string("MPoly: unbound indeterminate ") +
                                  var_name(v));
        for (std::uint32_t k = 0; k < m.e[i]; ++k) term = term * it->second;
      }
      acc += term;
    }
    return acc;
  }

  /// Exchanges two indeterminates.
  MPoly swap_vars(Var a, Var b) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      std::swap(mm[a], mm[b]);
      r.terms_[mm] = c;
    }
    return r;
  }

  /// Exact division by v^k: every term must carry v at least to power k.
  /// Throws std::domain_error otherwise.
  MPoly divide_by_power(Var v, std::uint32_t k) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      if (m[v] < k)
        throw std::domain_error(std::string("MPoly: not divisible by ") +
                                var_name(v) + "^" + std::to_string(k));
      Monomial mm = m;
      mm[v] -= k;
      r.terms_[mm] = c;
    }
    return r;
  }

  /// Canonical rendering: terms in graded-lex order (La > Lb > Lc > X > Y),
  /// exact coefficients as "p/q", e.g. "2*X*Lc - La - Lb".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c.abs();
      if (first) {
        if (c.sign() < 0) out += "-";
        first = false;
      } else {
        out += (c.sign() < 0) ? " - " : " + ";
      }
      std::string factors;
      for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += var_name(static_cast<Var>(i));
        if (m.e[i] > 1) factors += "^" + std::to_string(m.e[i]);
      }
      if (factors.empty()) {
        out += a.to_string();
      } else {
        if (!a.is_one()) out += a.to_string() + "*";
        out += factors;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) {
    return os << p.to_string();
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

}  // namespace genocchi

#endif  // GENOCCHI_MPOLY_HPP
