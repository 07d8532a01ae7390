#pragma once

#include <iosfwd>
#include <vector>

#include "detmom/rational.hpp"

namespace detmom {

/// Power moments m_j = E[X^j], j = 0..M, of a variable supported on [a, b].
/// T is Rational (exact inputs) or long double (estimated inputs).
template <typename T>
struct MomentSequence {
  T a;
  T b;
  std::vector<T> values;
};

/// f(x) = sum_i c_i (2i + 1) / (b - a) P_i(u), u = (2x - a - b) / (b - a),
/// so that c_i = E[P_i(u)] and c_0 = m_0.
template <typename T>
struct DensityExpansion {
  T a;
  T b;
  std::vector<T> coeffs;
};

/// c_0..c_order by exact binomial expansion of the Legendre polynomials in the
/// power moments. Throws std::invalid_argument if order >= values.size().
template <typename T>
DensityExpansion<T> legendre_coefficients(const MomentSequence<T>& ms, unsigned order);

/// Moments m_0..m_count-1 of the expansion; with Rational coefficients this
/// inverts legendre_coefficients exactly up to the expansion's order.
template <typename T>
std::vector<T> moments_from_expansion(const DensityExpansion<T>& d, unsigned count);

/// Jackson kernel factors for an expansion of the given order.
std::vector<long double> jackson_factors(unsigned order);

struct EvalOptions {
  bool jackson = false;  // off by default; tail integrals converge without it
};

/// Pointwise density in long double.
template <typename T>
long double density(const DensityExpansion<T>& d, long double x, const EvalOptions& options = {});

/// Integral of f from threshold to b, using int_{u0}^1 P_i = (P_{i-1}(u0) - P_{i+1}(u0)) / (2i + 1).
/// Throws std::invalid_argument for a threshold outside [a, b].
template <typename T>
long double tail_probability(const DensityExpansion<T>& d, long double threshold, const EvalOptions& options = {});

/// Writes `x,f` rows on an equispaced grid of `points` nodes over [a, b].
template <typename T>
void write_density_csv(std::ostream& os, const DensityExpansion<T>& d, unsigned points,
                       const EvalOptions& options = {});

/// Exact moments of |rho^PT| under HS with Dyson index alpha, m_0..m_order, on
/// the support [-1/16, 1/256].
MomentSequence<Rational> hs_pt_moment_sequence(const Rational& alpha, unsigned order);

}  // namespace detmom
