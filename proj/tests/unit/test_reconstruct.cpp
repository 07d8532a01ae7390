#include <doctest.h>

#include <cmath>
#include <sstream>

#include "detmom/reconstruct.hpp"

using namespace detmom;

namespace {

// Beta(2, 3) on [0, 1]: f = 12 x (1 - x)^2, m_j = 24 / ((j + 2)(j + 3)(j + 4))
MomentSequence<Rational> beta23(unsigned order) {
  MomentSequence<Rational> ms{Rational(0), Rational(1), {}};
  for (long j = 0; j <= static_cast<long>(order); ++j) ms.values.push_back(Rational(24, (j + 2) * (j + 3) * (j + 4)));
  return ms;
}

double beta_density(double x) { return 12 * x * (1 - x) * (1 - x); }
double beta_tail(double x) { return 1 - (6 * x * x - 8 * x * x * x + 3 * x * x * x * x); }

}  // namespace

TEST_CASE("uniform moments give a single coefficient") {
  const Rational a(-1, 16), b(1, 256);
  MomentSequence<Rational> ms{a, b, {}};
  for (unsigned j = 0; j <= 12; ++j) {
    ms.values.push_back((pow(b, j + 1) - pow(a, j + 1)) / ((b - a) * Rational(static_cast<long>(j + 1))));
  }
  const auto d = legendre_coefficients(ms, 12);
  CHECK(d.coeffs[0] == Rational(1));
  for (unsigned i = 1; i <= 12; ++i) CHECK(d.coeffs[i] == Rational(0));
  CHECK_THROWS_AS(legendre_coefficients(ms, 13), std::invalid_argument);
}

TEST_CASE("Beta(2,3) oracle") {
  const auto d = legendre_coefficients(beta23(10), 10);
  double worst = 0;
  for (double x = 0.05; x <= 0.95; x += 0.01) worst = std::max(worst, std::abs(static_cast<double>(density(d, x)) - beta_density(x)));
  CHECK(worst < 1e-3);
  const auto d64 = legendre_coefficients(beta23(64), 64);
  CHECK(std::abs(static_cast<double>(tail_probability(d64, 0.3L)) - beta_tail(0.3)) < 1e-4);
  CHECK(static_cast<double>(tail_probability(d64, 0.0L)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(static_cast<double>(tail_probability(d64, 1.0L)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(tail_probability(d64, 1.5L), std::invalid_argument);
}

TEST_CASE("tail error does not grow with the order") {
  // a threshold where the density's polynomial part is not captured at low order
  const double x0 = 0.37;
  double previous = 1;
  for (unsigned m : {1u, 2u, 3u, 4u, 8u, 16u, 32u, 64u}) {
    const double err = std::abs(static_cast<double>(tail_probability(legendre_coefficients(beta23(m), m), x0)) - beta_tail(x0));
    CHECK(err <= 1.1 * previous + 1e-15);
    previous = err;
  }
}

TEST_CASE("moments round trip exactly") {
  const auto ms = hs_pt_moment_sequence(Rational(1), 40);
  CHECK(ms.values[0] == Rational(1));
  const auto d = legendre_coefficients(ms, 40);
  CHECK(moments_from_expansion(d, 41) == ms.values);

  MomentSequence<long double> approx{0.0L, 1.0L, {}};
  for (const auto& v : beta23(12).values) approx.values.push_back(v.to_long_double());
  const auto back = moments_from_expansion(legendre_coefficients(approx, 12), 13);
  for (unsigned j = 0; j <= 12; ++j) {
    CHECK(static_cast<double>(back[j]) == doctest::Approx(static_cast<double>(approx.values[j])).epsilon(1e-10));
  }
}

TEST_CASE("HS expansion integrates to one and dumps a grid") {
  const auto d = legendre_coefficients(hs_pt_moment_sequence(Rational(1, 2), 32), 32);
  CHECK(static_cast<double>(tail_probability(d, -1.0L / 16)) == doctest::Approx(1.0).epsilon(1e-15));
  std::ostringstream os;
  write_density_csv(os, d, 11, {true});
  const std::string csv = os.str();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
  const auto g = jackson_factors(8);
  CHECK(g[0] == doctest::Approx(1.0));
  CHECK(g[8] < g[1]);
}
