#include <doctest.h>

#include "detmom/errors.hpp"
#include "detmom/polynomial.hpp"

using namespace detmom;

TEST_CASE("arithmetic and evaluation") {
  const Polynomial p{Rational(1), Rational(2), Rational(3)};  // 1 + 2k + 3k^2
  const Polynomial q = Polynomial::linear(Rational(1), Rational(-1));
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == Rational(17));
  CHECK((p * q)(Rational(5)) == p(Rational(5)) * q(Rational(5)));
  CHECK((p - p).is_zero());
  CHECK(Polynomial::from_descending({Rational(3), Rational(2), Rational(1)}) == p);
}

TEST_CASE("divmod reconstructs the dividend") {
  const Polynomial a{Rational(-4), Rational(0), Rational(7, 2), Rational(1), Rational(5)};
  const Polynomial b{Rational(1), Rational(-3), Rational(2)};
  const auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
}

TEST_CASE("gcd and reduction of rational functions") {
  const Polynomial x1 = Polynomial::linear(Rational(1), Rational(1));
  const Polynomial x2 = Polynomial::linear(Rational(2), Rational(-3));
  const Polynomial x3 = Polynomial::linear(Rational(4), Rational(1));
  CHECK(gcd(x1 * x2, x2 * x3) == Polynomial::linear(Rational(1), Rational(-3, 2)));
  const RationalFunction f(x1 * x2 * Rational(6), x2 * x3 * Rational(-3));
  // reduced, denominator primitive with positive leading coefficient
  CHECK(f.denominator() == x3);
  CHECK(f.numerator() == x1 * Rational(-2));
  CHECK(f(Rational(2)) == Rational(-6, 9));
  CHECK_THROWS_AS(RationalFunction(x1, x2)(Rational(3, 2)), DegenerateDenominator);
}

TEST_CASE("shift and sum") {
  const RationalFunction f(Polynomial{Rational(1)}, Polynomial::linear(Rational(1), Rational(0)));
  const RationalFunction g = f.shifted(Rational(1));
  CHECK(g(Rational(3)) == Rational(1, 4));
  const RationalFunction h = f + g;
  CHECK(h(Rational(2)) == Rational(1, 2) + Rational(1, 3));
  CHECK((f * g)(Rational(2)) == Rational(1, 6));
  CHECK(compose_shift(Polynomial{Rational(0), Rational(0), Rational(1)}, Rational(2))(Rational(1)) == Rational(9));
}
