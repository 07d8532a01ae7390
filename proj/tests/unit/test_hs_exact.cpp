#include <doctest.h>

#include "detmom/errors.hpp"
#include "detmom/hs_exact.hpp"

using namespace detmom;

namespace {
const Rational kHalf(1, 2);
const Rational kOne(1);
}  // namespace

TEST_CASE("printed first moments") {
  CHECK(hs_pt_moment(1, kOne) == Rational(-7, 3876));
  CHECK(hs_pt_moment(1, kHalf) == Rational(-1, 858));
  CHECK(hs_balanced_moment(1, kHalf) == Rational(0));
  CHECK(hs_balanced_moment(1, kOne) == Rational(-1, 4576264));
  CHECK(hs_pt_moment(0, kOne) == Rational(1));
  CHECK(hs_det_moment(0, kHalf) == Rational(1));
}

TEST_CASE("bivariate formula reduces to the univariate ones") {
  for (const Rational& a : {kHalf, kOne, Rational(2)}) {
    for (unsigned n = 0; n <= 5; ++n) {
      CHECK(hs_bivariate_moment({n, 0}, a) == hs_pt_moment(n, a));
      CHECK(hs_bivariate_moment({n, n}, a) == hs_balanced_moment(n, a));
      CHECK(hs_bivariate_moment({0, n}, a) == hs_det_moment(n, a));
    }
  }
}

// The moments are not symmetric in n and k: even powers of |rho^PT| times
// powers of |rho| are positive, while (1, 2) is negative (also seen in
// sampling).
TEST_CASE("bivariate moments are not symmetric in n and k") {
  for (const Rational& a : {kHalf, kOne, Rational(2)}) {
    for (unsigned n = 2; n <= 6; n += 2) {
      for (unsigned k = 0; k <= 6; ++k) CHECK(hs_bivariate_moment({n, k}, a) > Rational(0));
    }
  }
  CHECK(hs_bivariate_moment({1, 2}, kOne) == Rational(-1, 40156716600));
  CHECK(hs_bivariate_moment({2, 1}, kOne) == Rational(1, 743642900));
}

TEST_CASE("closed-form first-moment ratios match the hypergeometric formula") {
  for (unsigned k = 0; k <= 10; ++k) {
    CHECK(hs_ratio_qubit(k) == hs_bivariate_ratio({1, k}, kOne));
    CHECK(hs_ratio_rebit(k) == hs_bivariate_ratio({1, k}, kHalf));
  }
}

TEST_CASE("simplex oracle reproduces the determinant moments") {
  for (const Rational& a : {kHalf, kOne}) {
    for (unsigned k = 0; k <= 2; ++k) CHECK(hs_monomial_exact({k, k, k, k}, a) == hs_det_moment(k, a));
  }
  CHECK(hs_normalization_constant(kOne) == Rational(378378000));
  CHECK(hs_normalization_constant(kHalf) == Rational(80640));
  CHECK_THROWS_AS(hs_monomial_exact({1, 1, 1, 1}, Rational(2)), UnsupportedAlpha);
}

TEST_CASE("oracle monomials of unordered eigenvalues") {
  for (const Rational& a : {kHalf, kOne}) {
    CHECK(hs_monomial_exact({1, 0, 0, 0}, a) == Rational(1, 4));
    // 4 <l1^2> + 12 <l1 l2> = <(sum l)^2> = 1
    CHECK(Rational(4) * hs_monomial_exact({2, 0, 0, 0}, a) + Rational(12) * hs_monomial_exact({1, 1, 0, 0}, a) ==
          Rational(1));
    CHECK(hs_monomial_exact({3, 1, 0, 0}, a) == hs_monomial_exact({0, 0, 1, 3}, a));
  }
}

TEST_CASE("printed l1^5 l2^2 l3 ratio agrees with the oracle") {
  CHECK(hs_monomial_qubit_ratio(0) == Rational(3257, 82372752));
  for (unsigned k = 0; k <= 1; ++k) {
    CHECK(hs_monomial_qubit_ratio(k) == hs_monomial_exact({5 + k, 2 + k, 1 + k, k}, kOne) / hs_det_moment(k, kOne));
  }
  CHECK(hs_monomial_qubit_function() == hs_monomial_qubit_function_factored());
}
