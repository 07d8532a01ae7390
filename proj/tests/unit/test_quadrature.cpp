#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "detmom/bures_exact.hpp"
#include "detmom/errors.hpp"
#include "detmom/hs_exact.hpp"
#include "detmom/quadrature.hpp"

using namespace detmom;

namespace {

double rel(double got, double want) { return std::abs(got / want - 1); }

double quad(Measure m, Ensemble v, std::initializer_list<unsigned> e, double tol = 1e-9) {
  const std::vector<unsigned> x(e);
  return monomial_expectation(x, eigen_density_spec(m, v), tol).value;
}

}  // namespace

TEST_CASE("density values and argument checks") {
  const auto hs = eigen_density_spec(Measure::hilbert_schmidt, Ensemble::two_qubit);
  const std::array<double, 4> flat{0.25, 0.25, 0.25, 0.25};
  CHECK(eigen_density(flat, hs) == 0.0);
  const auto bures = eigen_density_spec(Measure::bures, Ensemble::two_qubit);
  const std::array<double, 4> edge{0.5, 0.3, 0.2, 0.0};
  CHECK_THROWS_AS(eigen_density(edge, bures), BoundaryPoint);
  const std::array<double, 3> three{0.5, 0.3, 0.2};
  CHECK_THROWS_AS(eigen_density(three, bures), DimensionMismatch);
  CHECK(eigen_density(three, eigen_density_spec(Measure::bures, Ensemble::retrit)) > 0);
  CHECK_THROWS_AS(eigen_density_spec(Measure::hilbert_schmidt, Ensemble::retrit), std::invalid_argument);
  CHECK(bures.normalization.value() == doctest::Approx(71680 / (std::numbers::pi * std::numbers::pi)));
}

TEST_CASE("HS monomials agree with the exact simplex oracle up to degree 4") {
  const std::vector<std::array<unsigned, 4>> patterns{{1, 0, 0, 0}, {2, 0, 0, 0}, {1, 1, 0, 0}, {3, 0, 0, 0},
                                                      {2, 1, 0, 0}, {1, 1, 1, 0}, {4, 0, 0, 0}, {3, 1, 0, 0},
                                                      {2, 2, 0, 0}, {2, 1, 1, 0}, {1, 1, 1, 1}};
  for (auto v : {Ensemble::two_qubit, Ensemble::two_rebit}) {
    const auto spec = eigen_density_spec(Measure::hilbert_schmidt, v);
    for (const auto& p : patterns) {
      const auto r = monomial_expectation(p, spec, 1e-9);
      const double exact = hs_monomial_exact(p, dyson_alpha(v)).to_double();
      CHECK(rel(r.value, exact) < 1e-8);
      CHECK(r.error_bound <= 1e-9 * r.value);
    }
  }
}

TEST_CASE("Bures monomial constants") {
  CHECK(rel(quad(Measure::bures, Ensemble::two_qubit, {4, 0, 0, 0}), 1127.0 / 16896) < 1e-7);
  CHECK(rel(quad(Measure::bures, Ensemble::two_rebit, {2, 1, 1, 0}), 41.0 / 40960) < 1e-7);
  CHECK(rel(quad(Measure::bures, Ensemble::two_rebit, {1, 1, 1, 1}), bures_det_moment(1, Ensemble::two_rebit).to_double()) < 1e-7);
}

TEST_CASE("normalization constants") {
  const auto q = normalization_constant(Measure::bures, Ensemble::two_qubit, 1e-9);
  CHECK(q.constant.pi_power == -2);
  CHECK(rel(q.constant.coefficient, 71680) < 1e-8);
  const auto r = normalization_constant(Measure::bures, Ensemble::two_rebit, 1e-9);
  CHECK(r.constant.pi_power == -1);
  CHECK(rel(r.constant.coefficient, 128) < 1e-8);
  const auto h = normalization_constant(Measure::hilbert_schmidt, Ensemble::two_qubit, 1e-9);
  CHECK(rel(h.constant.coefficient, 378378000) < 1e-8);
}

TEST_CASE("stored retrit constant reproduces the determinant moments") {
  const auto n = normalization_constant(Measure::bures, Ensemble::retrit, 1e-10);
  const auto spec = eigen_density_spec(Measure::bures, Ensemble::retrit);
  CHECK(rel(n.constant.coefficient, spec.normalization.coefficient) < 1e-10);
  // <|rho|^k> from the self-normalized ratio and from the stored constant
  for (unsigned k = 1; k <= 2; ++k) {
    const std::vector<unsigned> e(3, k);
    CHECK(rel(monomial_expectation(e, spec, 1e-10).value, bures_det_moment(k, Ensemble::retrit).to_double()) < 1e-9);
  }
}

TEST_CASE("family ratios") {
  const int uuu[] = {3, 2, 2, 1};
  const auto r = family_ratio_estimate(Measure::bures, Ensemble::two_rebit, uuu, 0, 1e-9);
  CHECK(rel(r.value, 87.0 / 27) < 1e-8);
  const auto m = missing_rebit_family_estimate(MissingRebitFamily::l1p8, 0, 1e-8);
  CHECK(m.value > 0);
  CHECK(m.value < 1 / bures_det_moment(2, Ensemble::two_rebit).to_double());
  CHECK_THROWS_AS(missing_rebit_family_estimate(MissingRebitFamily::l1p8, 4, 1e-8), std::invalid_argument);
  CHECK(parse_missing_family("6,2,0,0") == MissingRebitFamily::l1p6_l2p2);
  CHECK_THROWS_AS(parse_missing_family("6,2"), UnknownFamily);
}

TEST_CASE("symmetrized degree-4 sum is one for both measures") {
  for (auto m : {Measure::hilbert_schmidt, Measure::bures}) {
    const auto v = Ensemble::two_qubit;
    const double s = 4 * quad(m, v, {4, 0, 0, 0}) + 48 * quad(m, v, {3, 1, 0, 0}) + 36 * quad(m, v, {2, 2, 0, 0}) +
                     144 * quad(m, v, {2, 1, 1, 0}) + 24 * quad(m, v, {1, 1, 1, 1});
    CHECK(s == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("sorted convention") {
  const auto spec = eigen_density_spec(Measure::bures, Ensemble::two_qubit);
  double total = 0;
  for (int i = 0; i < 4; ++i) {
    std::vector<unsigned> e(4, 0);
    e[i] = 1;
    total += monomial_expectation(e, spec, 1e-9, EigenConvention::sorted).value;
    if (i == 0) CHECK(monomial_expectation(e, spec, 1e-9, EigenConvention::sorted).value > 0.25);
    if (i == 0) CHECK(monomial_expectation(e, spec, 1e-9).value == doctest::Approx(0.25).epsilon(1e-10));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tolerance control") {
  const auto spec = eigen_density_spec(Measure::bures, Ensemble::two_qubit);
  const std::vector<unsigned> e{4, 0, 0, 0};
  CHECK_THROWS_AS(monomial_expectation(e, spec, 1e-10, EigenConvention::symmetric, {2, 3}), ToleranceNotMet);
  CHECK_THROWS_AS(monomial_expectation(e, spec, 1e-12), std::invalid_argument);
  const auto loose = monomial_expectation(e, spec, 1e-4);
  const auto tight = monomial_expectation(e, spec, 1e-9);
  CHECK(tight.error_bound <= loose.error_bound);
}
