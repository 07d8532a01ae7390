#include <doctest.h>

#include <sstream>

#include "detmom/bures_exact.hpp"
#include "detmom/hs_exact.hpp"
#include "detmom/sampler.hpp"

using namespace detmom;
using Cd = std::complex<double>;

TEST_CASE("Philox known answer and stream independence") {
  // Random123 philox4x32-10 with zero counter and key
  PhiloxStream zero(0, 0);
  CHECK(zero() == 0xe169c58d6627e8d5ULL);
  CHECK(zero() == 0x9b00dbd8bc57ac4cULL);

  PhiloxStream a(42, 7), b(42, 7), c(42, 8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs |= x != c();
  }
  CHECK(differs);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform_open();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("Haar unitaries: unitary and E|tr U|^2 = 1") {
  RandomStream rng(5, 0);
  constexpr int kDraws = 20000;
  double complex_sum = 0, real_sum = 0;
  for (int i = 0; i < kDraws; ++i) {
    const auto u = sample_haar<Cd, 4>(rng);
    if (i < 50) CHECK((u * u.adjoint() - SquareMatrix<Cd, 4>::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    complex_sum += std::norm(u.trace());
    const auto o = sample_haar<double, 4>(rng);
    real_sum += o.trace() * o.trace();
  }
  // both second moments equal 1 with unit-order variance; 5 SE ~ 0.035
  CHECK(complex_sum / kDraws == doctest::Approx(1.0).epsilon(0.05));
  CHECK(real_sum / kDraws == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("sampled states are density matrices with determinants in range") {
  RandomStream rng(11, 3);
  for (auto m : {Measure::hilbert_schmidt, Measure::bures}) {
    for (int i = 0; i < 500; ++i) {
      const auto q = sample_density<Cd, 4>(m, rng);
      CHECK(check_density<Cd, 4>(q.rho).ok());
      const long double pt = determinant(partial_transpose<Cd>(q.rho), Precision::extended);
      CHECK(pt >= -1.0L / 16 - 1e-12L);
      CHECK(pt <= 1.0L / 256 + 1e-12L);
      const auto r = sample_density<double, 4>(m, rng);
      CHECK(check_density<double, 4>(r.rho).ok());
      const auto t = sample_density<double, 3>(m, rng);
      CHECK(check_density<double, 3>(t.rho).ok());
    }
  }
}

// sample mean of det within 5 SE of the exact value
template <typename Scalar, int Dim>
void check_det_mean(Measure m, double exact, bool pt, std::uint64_t stream) {
  RandomStream rng(5, stream);
  constexpr int kDraws = 20000;
  double sum = 0, sq = 0;
  for (int i = 0; i < kDraws; ++i) {
    const auto s = sample_density<Scalar, Dim>(m, rng).rho;
    double d;
    if constexpr (Dim == 4) {
      d = static_cast<double>(pt ? determinant(partial_transpose<Scalar>(s)) : determinant(s));
    } else {
      d = static_cast<double>(determinant(s));
    }
    sum += d;
    sq += d * d;
  }
  const double mean = sum / kDraws;
  const double se = std::sqrt((sq / kDraws - mean * mean) / kDraws);
  CHECK(std::abs(mean - exact) < 5 * se);
}

TEST_CASE("real and complex ensembles reproduce exact determinant moments") {
  const Rational half(1, 2);
  check_det_mean<double, 4>(Measure::hilbert_schmidt, hs_det_moment(1, half).to_double(), false, 1);
  check_det_mean<double, 4>(Measure::hilbert_schmidt, -1.0 / 858, true, 2);
  check_det_mean<Cd, 4>(Measure::hilbert_schmidt, hs_det_moment(1, Rational(1)).to_double(), false, 3);
  check_det_mean<Cd, 4>(Measure::bures, bures_det_moment(1, Ensemble::two_qubit).to_double(), false, 4);
  check_det_mean<double, 4>(Measure::bures, bures_det_moment(1, Ensemble::two_rebit).to_double(), false, 5);
  check_det_mean<double, 4>(Measure::bures, -2663.0 / 860160, true, 6);
  check_det_mean<double, 3>(Measure::bures, bures_det_moment(1, Ensemble::retrit).to_double(), false, 7);
}

TEST_CASE("partial transpose") {
  // Bell state (|00> + |11>)/sqrt2: rho^PT is the swap / 2
  SquareMatrix<double, 4> bell = SquareMatrix<double, 4>::Zero();
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(static_cast<double>(determinant(partial_transpose<double>(bell))) == doctest::Approx(-1.0 / 16));
  CHECK(static_cast<double>(determinant(bell)) == doctest::Approx(0.0));

  RandomStream rng(2, 2);
  const auto s = sample_density<Cd, 4>(Measure::hilbert_schmidt, rng).rho;
  CHECK((partial_transpose<Cd>(partial_transpose<Cd>(s)) - s).cwiseAbs().maxCoeff() == 0.0);

  // product states: (A (x) B)^PT = A (x) B^T
  const auto a = sample_density<Cd, 2>(Measure::hilbert_schmidt, rng).rho;
  const auto b = sample_density<Cd, 2>(Measure::hilbert_schmidt, rng).rho;
  SquareMatrix<Cd, 4> ab, abt;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          ab(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
          abt(2 * i + k, 2 * j + l) = a(i, j) * b(l, k);
        }
  CHECK((partial_transpose<Cd>(ab) - abt).cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::MatrixXd three = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(partial_transpose<double>(three), DimensionMismatch);
}

TEST_CASE("eigenvalues and determinants") {
  const SquareMatrix<double, 4> mixed = SquareMatrix<double, 4>::Identity() / 4;
  const auto ev = eigenvalues<double, 4>(mixed);
  for (int i = 0; i < 4; ++i) CHECK(ev(i) == doctest::Approx(0.25));
  SquareMatrix<double, 4> pure = SquareMatrix<double, 4>::Zero();
  pure(2, 2) = 1;
  const auto pv = eigenvalues<double, 4>(pure);
  CHECK(pv(0) == doctest::Approx(1.0));
  CHECK(pv(3) == doctest::Approx(0.0));

  RandomStream rng(9, 1);
  const auto s = sample_density<Cd, 4>(Measure::bures, rng).rho;
  const auto e = eigenvalues<Cd, 4>(s);
  CHECK(e(0) >= e(1));
  CHECK(e.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(static_cast<double>(determinant(s, Precision::extended)) ==
        doctest::Approx(e.prod()).epsilon(1e-9));
  CHECK(static_cast<double>(determinant(s, Precision::standard)) ==
        doctest::Approx(static_cast<double>(determinant(s, Precision::extended))).epsilon(1e-9));
}

TEST_CASE("raw draws are written as doubles") {
  RandomStream rng(1, 0);
  std::ostringstream os;
  write_draw<Cd, 4>(os, sample_density<Cd, 4>(Measure::hilbert_schmidt, rng).rho);
  write_draw<double, 3>(os, sample_density<double, 3>(Measure::bures, rng).rho);
  CHECK(os.str().size() == (32 + 9) * sizeof(double));
}
