#include <doctest.h>

#include <cmath>
#include <sstream>

#include "detmom/errors.hpp"
#include "detmom/estimator.hpp"

using namespace detmom;

TEST_CASE("power sums") {
  MomentAccumulator acc(2, 3);
  const long double xs[][2] = {{-0.01L, 0.002L}, {0.003L, 0.001L}, {-0.02L, 0.0005L}};
  for (const auto& x : xs) acc.add(x[0], x[1]);
  CHECK(acc.count() == 3);
  for (unsigned n = 0; n <= 2; ++n) {
    for (unsigned k = 0; k <= 3; ++k) {
      long double s = 0;
      for (const auto& x : xs) s += std::pow(x[0], n) * std::pow(x[1], k);
      CHECK(static_cast<double>(acc.sum(n, k).value()) == doctest::Approx(static_cast<double>(s)).epsilon(1e-15));
    }
  }
}

TEST_CASE("merge matches sequential accumulation") {
  MomentAccumulator all(3, 3), a(3, 3), b(3, 3);
  RandomStream rng(3, 0);
  for (int i = 0; i < 1000; ++i) {
    const long double p = rng.gaussian() * 0.01, d = std::abs(rng.gaussian()) * 0.001;
    all.add(p, d);
    (i < 400 ? a : b).add(p, d);
  }
  const auto m = merge(a, b);
  CHECK(m.count() == all.count());
  for (unsigned n = 0; n <= 3; ++n) {
    for (unsigned k = 0; k <= 3; ++k) {
      CHECK(static_cast<double>(m.sum(n, k).value()) ==
            doctest::Approx(static_cast<double>(all.sum(n, k).value())).epsilon(1e-15));
    }
  }
  MomentAccumulator other(2, 3);
  CHECK_THROWS_AS(a.merge(other), ShapeMismatch);
}

TEST_CASE("standard error of the mean") {
  MomentAccumulator acc(1, 0);
  CHECK_THROWS_AS(estimates(acc), InsufficientData);
  acc.add(1, 1);
  CHECK_THROWS_AS(estimates(acc), InsufficientData);
  for (long double x : {2.0L, 4.0L, 7.0L}) acc.add(x, 1);
  const auto g = estimates(acc);
  // values 1, 2, 4, 7: mean 3.5, sample variance 7, SE sqrt(7/4)
  CHECK(static_cast<double>(g(1, 0).mean) == doctest::Approx(3.5));
  CHECK(static_cast<double>(g(1, 0).standard_error) == doctest::Approx(std::sqrt(7.0 / 4)));
  CHECK(static_cast<double>(g(0, 0).standard_error) == 0.0);
}

TEST_CASE("ratio table and CSV") {
  MomentAccumulator acc(1, 1);
  acc.add(-0.01L, 0.001L);
  acc.add(0.002L, 0.002L);
  const auto g = estimates(acc);
  ExactProvider exact = [](unsigned n, unsigned k) -> std::optional<Rational> {
    if (n == 1 && k == 1) return Rational(0);
    if (n == 1) return Rational(-1, 256);
    return std::nullopt;
  };
  const auto rows = ratio_table(g, exact, GridMode::bivariate);
  REQUIRE(rows.size() == 4);
  CHECK(!rows[0].exact);
  CHECK(rows[2].ratio);
  CHECK(!rows[3].ratio);  // exact zero
  std::ostringstream os;
  write_ratio_csv(os, rows, {"bures", "two-qubit", "", 2}, {"seed=1"});
  const std::string s = os.str();
  CHECK(s.rfind("# seed=1\nn,k,mc,exact,ratio,se,count,measure,variant,alpha\n", 0) == 0);
  CHECK(s.find("1,1,") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), '\n') == 6);
}

TEST_CASE("Monte Carlo results do not depend on the worker count") {
  MonteCarloConfig cfg;
  cfg.max_n = 2;
  cfg.max_k = 2;
  cfg.samples = 5000;
  cfg.chunk_size = 700;
  cfg.seed = 99;
  cfg.workers = 1;
  const auto one = run_monte_carlo(cfg);
  cfg.workers = 3;
  const auto three = run_monte_carlo(cfg);
  CHECK(one.accumulator.count() == 5000);
  for (unsigned n = 0; n <= 2; ++n) {
    for (unsigned k = 0; k <= 2; ++k) CHECK(one.accumulator.sum(n, k).value() == three.accumulator.sum(n, k).value());
  }
  CHECK(one.range.violations == 0);
  cfg.seed = 100;
  CHECK(run_monte_carlo(cfg).accumulator.sum(1, 0).value() != one.accumulator.sum(1, 0).value());
}

TEST_CASE("Monte Carlo configuration errors") {
  MonteCarloConfig cfg;
  cfg.samples = 10;
  cfg.variant = Ensemble::retrit;
  cfg.max_n = 1;
  CHECK_THROWS_AS(run_monte_carlo(cfg), std::invalid_argument);
  cfg.variant = Ensemble::two_qubit;
  cfg.mode = GridMode::balanced;
  cfg.max_k = 2;
  CHECK_THROWS_AS(run_monte_carlo(cfg), std::invalid_argument);
  cfg.max_k = 0;
  const auto bal = run_monte_carlo(cfg);
  CHECK(bal.accumulator.count() == 10);
}
