#include <doctest.h>

#include <algorithm>

#include "detmom/errors.hpp"
#include "detmom/hypergeom.hpp"

using namespace detmom;

namespace {

Rational signed_binomial_sum(unsigned n, unsigned from, unsigned to) {
  Rational s(0);
  for (unsigned j = from; j <= to; ++j) s += Rational(mpz_class((j % 2 ? -1 : 1) * binomial(n, j)));
  return s;
}

}  // namespace

TEST_CASE("Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (const Rational& b : {Rational(1, 2), Rational(3), Rational(-7, 3)}) {
      for (const Rational& c : {Rational(5, 2), Rational(7), Rational(11, 3)}) {
        const Rational lhs = pfq_unit({{Rational(-static_cast<long>(n)), b}, {c}});
        CHECK(lhs == pochhammer(c - b, n) / pochhammer(c, n));
      }
    }
  }
}

TEST_CASE("Pfaff-Saalschutz for balanced 3F2") {
  const Rational a(1, 3), b(5, 4), c(7, 2);
  for (unsigned n = 0; n <= 8; ++n) {
    const Rational mn(-static_cast<long>(n));
    const Rational d = Rational(1) + a + b - c + mn;
    const Rational lhs = pfq_unit({{mn, a, b}, {c, d}});
    CHECK(lhs == pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n)));
  }
}

TEST_CASE("upper and lower parameters may be reordered") {
  std::vector<Rational> up{Rational(-5), Rational(3, 2), Rational(2, 7), Rational(9)};
  std::vector<Rational> lo{Rational(5, 2), Rational(13, 3), Rational(1, 5)};
  const Rational ref = pfq_unit({up, lo});
  std::sort(up.begin(), up.end());
  do {
    CHECK(pfq_unit({up, lo}) == ref);
  } while (std::next_permutation(up.begin(), up.end()));
  std::reverse(lo.begin(), lo.end());
  CHECK(pfq_unit({up, lo}) == ref);
}

TEST_CASE("contiguous relation in the terminating parameter") {
  // F(-n-1, b; c) - F(-n, b; c) = -(b/c) F(-n, b+1; c+1)
  const Rational b(2, 3), c(9, 4);
  for (unsigned n = 0; n <= 8; ++n) {
    const Rational mn(-static_cast<long>(n));
    const Rational lhs = pfq_unit({{mn - Rational(1), b}, {c}}) - pfq_unit({{mn, b}, {c}});
    CHECK(lhs == -(b / c) * pfq_unit({{mn, b + Rational(1)}, {c + Rational(1)}}));
  }
}

TEST_CASE("non-terminating and degenerate series are rejected") {
  CHECK_THROWS_AS(pfq_unit({{Rational(1, 2), Rational(1)}, {Rational(3)}}), std::invalid_argument);
  // lower -2 is reached before upper -4 terminates
  CHECK_THROWS_AS(pfq_unit({{Rational(-4), Rational(1)}, {Rational(-2)}}), DegenerateDenominator);
  // simultaneous zero: 0/0
  CHECK_THROWS_AS(pfq_unit({{Rational(-2), Rational(1)}, {Rational(-2)}}), DegenerateDenominator);
  CHECK(pfq_unit({{Rational(-2), Rational(1)}, {Rational(-2)}, true}) == Rational(1));
}

TEST_CASE("limit evaluator agrees with the plain series away from poles") {
  const std::vector<AffineParam> up{{Rational(-6), 0}, {Rational(1, 3), Rational(2)}, {Rational(5, 2), Rational(-1)}};
  const std::vector<AffineParam> lo{{Rational(7, 3), Rational(1)}, {Rational(9, 5), 0}};
  const Rational plain = pfq_unit({{Rational(-6), Rational(1, 3), Rational(5, 2)}, {Rational(7, 3), Rational(9, 5)}});
  CHECK(pfq_unit_limit(up, lo) == plain);
}

TEST_CASE("limit evaluator resolves cancelling zeros") {
  for (unsigned n = 1; n <= 7; ++n) {
    for (unsigned m = 0; m < n; ++m) {
      const Rational mn(-static_cast<long>(n)), mm(-static_cast<long>(m));
      // (a)_j / (c)_j = 1 identically, so the sum is (1 - 1)^n
      const std::vector<AffineParam> up1{{mn, 0}, {mm, 1}};
      const std::vector<AffineParam> lo1{{mm, 1}};
      CHECK(pfq_unit_limit(up1, lo1) == Rational(0));
      // the ratio of the vanishing factors is 2 past j = m
      const std::vector<AffineParam> up2{{mn, 0}, {mm, 2}};
      CHECK(pfq_unit_limit(up2, lo1) == signed_binomial_sum(n, 0, m) + Rational(2) * signed_binomial_sum(n, m + 1, n));
      // an uncancelled zero in the lower list is a genuine pole
      const std::vector<AffineParam> up3{{mn, 0}, {Rational(1), 0}};
      CHECK_THROWS_AS(pfq_unit_limit(up3, lo1), DegenerateDenominator);
    }
  }
}
