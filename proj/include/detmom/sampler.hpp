#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <random>
#include <type_traits>

#include "detmom/ensemble.hpp"
#include "detmom/errors.hpp"
#include "detmom/rng.hpp"

namespace detmom {

template <typename Scalar, int Dim>
using SquareMatrix = Eigen::Matrix<Scalar, Dim, Dim>;

template <typename Scalar>
inline constexpr bool is_complex_v = !std::is_same_v<Scalar, typename Eigen::NumTraits<Scalar>::Real>;

/// Reproducible Gaussian source on top of one Philox stream.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id) : engine_(seed, stream_id) {}

  double gaussian() { return normal_(engine_); }
  PhiloxStream& engine() { return engine_; }

 private:
  PhiloxStream engine_;
  std::normal_distribution<double> normal_;
};

/// Which random-state construction and ensemble, plus the stream coordinates.
struct EnsembleSpec {
  Measure measure = Measure::hilbert_schmidt;
  Ensemble variant = Ensemble::two_qubit;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// I.i.d. standard normal entries; complex entries have unit total variance.
template <typename Scalar, int Rows, int Cols = Rows>
Eigen::Matrix<Scalar, Rows, Cols> sample_ginibre(RandomStream& rng) {
  Eigen::Matrix<Scalar, Rows, Cols> g;
  for (int j = 0; j < Cols; ++j) {
    for (int i = 0; i < Rows; ++i) {
      if constexpr (is_complex_v<Scalar>) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        g(i, j) = Scalar(re, im) * M_SQRT1_2;
      } else {
        g(i, j) = rng.gaussian();
      }
    }
  }
  return g;
}

/// Haar-distributed unitary (orthogonal for real Scalar): QR of a Ginibre
/// matrix with Q's columns rephased so that R has a positive diagonal.
template <typename Scalar, int Dim>
SquareMatrix<Scalar, Dim> sample_haar(RandomStream& rng) {
  const Eigen::HouseholderQR<SquareMatrix<Scalar, Dim>> qr(sample_ginibre<Scalar, Dim>(rng));
  SquareMatrix<Scalar, Dim> q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (int j = 0; j < Dim; ++j) {
    const Scalar d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return q;
}

/// A sampled state: Hermitian, unit trace, positive semidefinite.
template <typename Scalar, int Dim>
struct DensityMatrix {
  SquareMatrix<Scalar, Dim> rho;
};

/// Real Bures states. The (1 + O) G construction does not give the Bures
/// measure over the reals (its moments miss the exact ones by tens of percent),
/// so the eigenvalues are drawn by rejection and rotated by a Haar orthogonal O.
/// Proposal: Dirichlet(1/2, ..., 1/2) from squared normals, which carries the
/// prod l^{-1/2} factor. Weight: prod_{i<j} |li - lj| / sqrt(li + lj), bounded by
/// prod_i l(i)^{(Dim - i) / 2} over sorted l(1) >= l(2) >= ..., whose maximum on
/// the simplex is prod (e_i / E)^{e_i}.
template <int Dim>
DensityMatrix<double, Dim> sample_real_bures(RandomStream& rng) {
  static const double bound = [] {
    const double total = Dim * (Dim - 1) / 4.0;
    double b = 1;
    for (int i = 1; i < Dim; ++i) {
      const double e = (Dim - i) / 2.0;
      b *= std::pow(e / total, e);
    }
    return b;
  }();
  Eigen::Matrix<double, Dim, 1> l;
  for (;;) {
    for (int i = 0; i < Dim; ++i) {
      const double z = rng.gaussian();
      l(i) = z * z;
    }
    const double s = l.sum();
    if (!(s > 0.0)) continue;
    l /= s;
    double w = 1;
    for (int i = 0; i < Dim; ++i)
      for (int j = i + 1; j < Dim; ++j) w *= std::abs(l(i) - l(j)) / std::sqrt(l(i) + l(j));
    if (rng.engine().uniform_open() * bound < w) break;
  }
  const SquareMatrix<double, Dim> o = sample_haar<double, Dim>(rng);
  SquareMatrix<double, Dim> rho = o * l.asDiagonal() * o.transpose();
  rho = (rho + rho.transpose()).eval() * 0.5;
  return {rho};
}

/// HS: rho = G G^dag / tr, with G square for complex entries and Dim x (Dim + 1)
/// for real ones (a square real G leaves a det^{-1/2} weight).
/// Bures: complex rho = (1 + U) G G^dag (1 + U)^dag / tr; real as above.
template <typename Scalar, int Dim>
DensityMatrix<Scalar, Dim> sample_density(Measure measure, RandomStream& rng) {
  using Mat = SquareMatrix<Scalar, Dim>;
  if constexpr (!is_complex_v<Scalar>) {
    if (measure == Measure::bures) return sample_real_bures<Dim>(rng);
  }
  constexpr int cols = is_complex_v<Scalar> ? Dim : Dim + 1;
  for (;;) {
    const Eigen::Matrix<Scalar, Dim, cols> g = sample_ginibre<Scalar, Dim, cols>(rng);
    Mat rho = g * g.adjoint();
    if constexpr (is_complex_v<Scalar>) {
      if (measure == Measure::bures) {
        const Mat u = sample_haar<Scalar, Dim>(rng);
        const Mat a = (Mat::Identity() + u) * g;
        rho = a * a.adjoint();
      }
    }
    const double tr = std::real(rho.trace());
    if (!(tr > 0.0)) continue;
    rho /= tr;
    rho = (rho + rho.adjoint()).eval() * 0.5;
    return {rho};
  }
}

/// Transpose on the second factor of C^2 (x) C^2; basis index 2i + j.
template <typename Scalar>
SquareMatrix<Scalar, 4> partial_transpose(const SquareMatrix<Scalar, 4>& rho) {
  SquareMatrix<Scalar, 4> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
  return out;
}

/// Runtime-dimension overload; throws DimensionMismatch unless 4x4.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_transpose(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw DimensionMismatch("partial_transpose: needs a 4x4 matrix");
  }
  return partial_transpose<Scalar>(SquareMatrix<Scalar, 4>(rho));
}

enum class Precision { standard, extended };

/// Real part of the determinant. The extended path factors in long double.
template <typename Derived>
long double determinant(const Eigen::MatrixBase<Derived>& m, Precision precision = Precision::standard) {
  using Scalar = typename Derived::Scalar;
  if (precision == Precision::standard) return static_cast<long double>(std::real(m.determinant()));
  if constexpr (is_complex_v<Scalar>) {
    using Wide = std::complex<long double>;
    return std::real(m.template cast<Wide>().partialPivLu().determinant());
  } else {
    return m.template cast<long double>().partialPivLu().determinant();
  }
}

/// Eigenvalues sorted descending.
template <typename Scalar, int Dim>
Eigen::Matrix<double, Dim, 1> eigenvalues(const SquareMatrix<Scalar, Dim>& rho) {
  Eigen::SelfAdjointEigenSolver<SquareMatrix<Scalar, Dim>> es(rho, Eigen::EigenvaluesOnly);
  Eigen::Matrix<double, Dim, 1> ev = es.eigenvalues().reverse();
  return ev;
}

/// Deviation of a sample from the density-matrix invariants.
struct DensityCheck {
  double hermiticity = 0;  // max |rho - rho^dag|
  double trace_error = 0;  // |tr rho - 1|
  double min_eigenvalue = 0;

  bool ok() const { return hermiticity <= 1e-13 && trace_error <= 1e-13 && min_eigenvalue >= -1e-12; }
};

template <typename Scalar, int Dim>
DensityCheck check_density(const SquareMatrix<Scalar, Dim>& rho) {
  DensityCheck c;
  c.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  c.trace_error = std::abs(std::real(rho.trace()) - 1.0) + std::abs(std::imag(rho.trace()));
  c.min_eigenvalue = eigenvalues<Scalar, Dim>(rho).minCoeff();
  return c;
}

/// Appends one draw as row-major doubles; complex entries as (re, im) pairs.
template <typename Scalar, int Dim>
void write_draw(std::ostream& os, const SquareMatrix<Scalar, Dim>& rho) {
  for (int i = 0; i < Dim; ++i) {
    for (int j = 0; j < Dim; ++j) {
      const double re = std::real(rho(i, j));
      os.write(reinterpret_cast<const char*>(&re), sizeof re);
      if constexpr (is_complex_v<Scalar>) {
        const double im = std::imag(rho(i, j));
        os.write(reinterpret_cast<const char*>(&im), sizeof im);
      }
    }
  }
}

/// Calls f.template operator()<Scalar, Dim>() for the ensemble's matrix type.
template <typename F>
decltype(auto) visit_ensemble(Ensemble e, F&& f) {
  switch (e) {
    case Ensemble::two_qubit: return f.template operator()<std::complex<double>, 4>();
    case Ensemble::two_rebit: return f.template operator()<double, 4>();
    case Ensemble::retrit: break;
  }
  return f.template operator()<double, 3>();
}

}  // namespace detmom
