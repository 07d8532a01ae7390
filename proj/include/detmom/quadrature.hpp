#pragma once

#include <span>
#include <string>
#include <vector>

#include "detmom/ensemble.hpp"

namespace detmom {

/// A value coefficient * pi^pi_power.
struct PiTagged {
  double coefficient = 0;
  int pi_power = 0;

  double value() const;
};

/// Eigenvalue density on the simplex for one (measure, ensemble) pair together
/// with its normalization constant.
///   HS:    prod_{i<j} |li - lj|^{2 alpha}
///   Bures: prod_{i<j} (|li - lj|^2 / (li + lj))^alpha / sqrt(prod_i li)
struct EigenDensitySpec {
  Measure measure = Measure::bures;
  Ensemble variant = Ensemble::two_qubit;
  PiTagged normalization;
};

/// Spec with the stored normalization constant. The retrit Bures constant was
/// computed with normalization_constant() and is checked against the retrit
/// <|rho|^k> closed form in the tests. Throws std::invalid_argument for
/// HS retrit.
EigenDensitySpec eigen_density_spec(Measure measure, Ensemble variant);

/// Normalized density at a simplex point (any eigenvalue order). Throws
/// BoundaryPoint for the Bures density when some eigenvalue is zero.
double eigen_density(std::span<const double> lambda, const EigenDensitySpec& spec);

/// Monomial interpretation: symmetric treats eigenvalues as exchangeable (the
/// convention of the printed monomial constants); sorted assigns l1 >= l2 >= ...
enum class EigenConvention { symmetric, sorted };

struct QuadratureResult {
  double value = 0;
  double error_bound = 0;
  int level = 0;             // tanh-sinh level reached (step 2^-level)
  long long evaluations = 0;
};

/// Options for the tensor tanh-sinh integrator.
struct QuadratureOptions {
  int min_level = 2;
  int max_level = 5;
};

/// E[prod_i l_i^{e_i}] under the density. The ordered sector is mapped to the
/// unit cube through gap coordinates and nested scalings, so that every
/// singular or vanishing factor becomes a power of one cube coordinate or its
/// complement; tanh-sinh in each coordinate then handles the 1/sqrt(l)
/// singularities. Throws ToleranceNotMet if error_bound > rel_tol * |value| at
/// the maximum level.
QuadratureResult monomial_expectation(std::span<const unsigned> exponents, const EigenDensitySpec& spec,
                                      double rel_tol, EigenConvention convention = EigenConvention::symmetric,
                                      const QuadratureOptions& options = {});

struct NormalizationEstimate {
  PiTagged constant;   // 1 / integral of the unnormalized density
  double error_bound;  // on constant.coefficient
};

/// Integrates the unnormalized density; the pi power is fixed by the analytic
/// form (HS 0; Bures two-rebit and retrit -1, two-qubit -2).
NormalizationEstimate normalization_constant(Measure measure, Ensemble variant, double rel_tol,
                                             const QuadratureOptions& options = {});

/// <prod l_i^{k + c_i}> / <|rho|^{k + sum(c)/d}> with the numerator by
/// quadrature and the denominator exact.
QuadratureResult family_ratio_estimate(Measure measure, Ensemble variant, std::span<const int> pattern,
                                       unsigned k, double rel_tol, const QuadratureOptions& options = {});

/// The two-rebit families with no known closed form, over <|rho|^{k+2}>.
enum class MissingRebitFamily { l1p5_l2p3, l1p6_l2p2, l1p7_l2, l1p8 };

std::vector<int> missing_family_pattern(MissingRebitFamily family);
std::string to_string(MissingRebitFamily family);
MissingRebitFamily parse_missing_family(const std::string& s);

/// Numerical estimate for 0 <= k <= 3.
QuadratureResult missing_rebit_family_estimate(MissingRebitFamily family, unsigned k, double rel_tol,
                                               const QuadratureOptions& options = {});

}  // namespace detmom
