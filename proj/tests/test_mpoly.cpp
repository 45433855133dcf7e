// SPDX-License-Identifier: Apache-2.0

#include "genocchi/mpoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace genocchi;

namespace {

MPoly La() { return MPoly::var(Var::La); }
MPoly Lb() { return MPoly::var(Var::Lb); }
MPoly Lc() { return MPoly::var(Var::Lc); }
MPoly X() { return MPoly::var(Var::X); }
MPoly Y() { return MPoly::var(Var::Y); }

/// Deterministic random polynomial: up to five small terms.
MPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_terms(0, 5);
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 10);
  MPoly p;
  int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    MPoly mono(Rational(num(rng), den(rng)));
    for (int v = 0; v < kNumVars; ++v)
      mono *= MPoly::var(static_cast<Var>(v), static_cast<std::uint32_t>(expo(rng)));
    p += mono;
  }
  return p;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("mpoly basic arithmetic") {
  // (La + X)(La - X) = La^2 - X^2
  MPoly prod = (La() + X()) * (La() - X());
  CHECK(prod == MPoly::var(Var::La, 2) - MPoly::var(Var::X, 2));

  MPoly p = Rational(2) * X() * Lc() - La() - Lb();
  CHECK(p * MPoly() == MPoly());          // absorbing element
  CHECK(p + MPoly() == p);                // identity element
  CHECK(p - p == MPoly());
  CHECK((p.pow(2)) == p * p);
  CHECK(MPoly(Rational(5)).pow(0) == MPoly(Rational(1)));
}

TEST_CASE("mpoly degrees and term queries") {
  MPoly p = Rational(2) * X() * Lc() - La() - Lb();
  CHECK(p.degree(Var::X) == 1);
  CHECK(p.degree(Var::Y) == 0);
  CHECK(p.total_degree() == 2);
  CHECK(p.term_count() == 3);
  CHECK(MPoly().total_degree() == -1);
  CHECK(MPoly().degree(Var::La) == -1);
  CHECK((La().pow(3) * Lb() + La().pow(2)).min_degree(Var::La) == 2);
}

TEST_CASE("mpoly substitution") {
  MPoly p = Rational(2) * X() * Lc() - La() - Lb();
  // worked value at (La,Lb,Lc) = (0,1,1): 2X - 1
  MPoly reduced = p.substitute({{Var::La, MPoly()},
                                {Var::Lb, MPoly(Rational(1))},
                                {Var::Lc, MPoly(Rational(1))}});
  CHECK(reduced == Rational(2) * X() - MPoly(Rational(1)));

  CHECK(La().substitute({{Var::La, La() - Lc()}}) == La() - Lc());

  MPoly sq = MPoly::var(Var::X, 2).substitute({{Var::X, X() + Y()}});
  CHECK(sq == MPoly::var(Var::X, 2) + Rational(2) * X() * Y() + MPoly::var(Var::Y, 2));
}

TEST_CASE("mpoly exact evaluation") {
  MPoly p = Rational(2) * X() * Lc() - La() - Lb();
  std::map<Var, Rational> point = {{Var::X, Rational(1)},
                                   {Var::La, Rational(0)},
                                   {Var::Lb, Rational(1)},
                                   {Var::Lc, Rational(1)}};
  CHECK(p.eval(point) == Rational(1));

  CHECK((La() * Lb()).eval({{Var::La, Rational(0)}, {Var::Lb, Rational(1)}}) ==
        Rational(0));

  CHECK_THROWS_MATCHES(X().eval({{Var::La, Rational(5)}}), std::domain_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("X")));
}

TEST_CASE("mpoly rendering is canonical") {
  CHECK((-La() - Lb()).to_string() == "-La - Lb");
  CHECK((Rational(2) * X() * Lc() - La() - Lb()).to_string() == "2*Lc*X - La - Lb");
  CHECK(MPoly().to_string() == "0");
  CHECK(MPoly(Rational(-7, 2)).to_string() == "-7/2");
  CHECK((MPoly::var(Var::La, 2) * Rational(1, 3)).to_string() == "1/3*La^2");
}

TEST_CASE("mpoly divide_by_power") {
  MPoly p = MPoly::var(Var::Lb, 3) * Rational(4) + MPoly::var(Var::Lb, 2) * La();
  CHECK(p.divide_by_power(Var::Lb, 2) ==
        Rational(4) * Lb() + La());
  CHECK_THROWS_AS(p.divide_by_power(Var::Lb, 3), std::domain_error);
}

TEST_CASE("mpoly ring axioms on random instances") {
  std::mt19937 rng(20260810);
  for (int i = 0; i < 1200; ++i) {
    MPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(987654);
  for (int i = 0; i < 400; ++i) {
    MPoly p = random_poly(rng), q = random_poly(rng);
    std::map<Var, MPoly> bindings = {{Var::X, random_poly(rng)},
                                     {Var::La, random_poly(rng)}};
    CHECK((p * q).substitute(bindings) ==
          p.substitute(bindings) * q.substitute(bindings));
    CHECK((p + q).substitute(bindings) ==
          p.substitute(bindings) + q.substitute(bindings));
  }
}

TEST_CASE("evaluation composes with substitution") {
  std::mt19937 rng(5551212);
  for (int i = 0; i < 400; ++i) {
    MPoly p = random_poly(rng);
    MPoly image = random_poly(rng);
    std::map<Var, Rational> point;
    for (int v = 0; v < kNumVars; ++v)
      point[static_cast<Var>(v)] = random_rational(rng);
    std::map<Var, Rational> composed = point;
    composed[Var::X] = image.eval(point);
    CHECK(p.substitute({{Var::X, image}}).eval(point) == p.eval(composed));
  }
}

TEST_CASE("swap_vars exchanges indeterminates") {
  MPoly p = La() * La() * Lb() + X();
  MPoly swapped = p.swap_vars(Var::La, Var::Lb);
  CHECK(swapped == Lb() * Lb() * La() + X());
  CHECK(swapped.swap_vars(Var::La, Var::Lb) == p);
}
