#pragma once

#include <span>
#include <string>
#include <vector>

#include "detmom/ensemble.hpp"
#include "detmom/polynomial.hpp"
#include "detmom/rational.hpp"

namespace detmom {

/// <|rho|^k> under the Bures measure. Every sqrt(pi) factor must cancel;
/// throws PiResidue otherwise.
Rational bures_det_moment(unsigned k, Ensemble v);
/// The same product of Gamma factors before cancellation is enforced.
PiScaled bures_det_moment_scaled(unsigned k, Ensemble v);

/// The printed two-qubit ratio R(k). It satisfies
/// R(k + 1) = <|rho^PT| |rho|^k> / <|rho|^k>.
RationalFunction bures_explanatory_qubit();
RationalFunction bures_explanatory_qubit_factored();
/// The printed two-rebit ratio S(k). It satisfies
/// S(k) = <|rho^PT| |rho|^{k-1}> / <|rho|^k>.
RationalFunction bures_explanatory_rebit();
RationalFunction bures_explanatory_rebit_factored();

/// <|rho^PT| |rho|^k> under the Bures measure (two_qubit or two_rebit).
Rational bures_pt_det_moment(unsigned k, Ensemble v);

/// <|rho^PT|^2> for two rebits.
Rational bures_pt_squared_moment_rebit();

/// One term c / (a k + b) of a printed partial-fraction expansion.
struct PartialFraction {
  Rational coeff;
  Rational a;
  Rational b;
};

/// Sum of terms plus a constant, recombined over a common denominator.
RationalFunction recombine_partial_fractions(std::span<const PartialFraction> terms,
                                             const Rational& constant);

/// A printed family <prod_i l_i^{k + c_i}> / <|rho|^{k + sum(c)/d}> as a
/// rational function of k. Eigenvalues are exchangeable: the expectation is
/// that of the monomial in unordered eigenvalues.
struct MonomialFamily {
  Ensemble ensemble;
  std::vector<int> pattern;  // c_i
  RationalFunction ratio;
  std::vector<PartialFraction> partial_fractions;  // empty when none printed
  Rational partial_constant{0};
  std::string label;

  /// Power of |rho| in the denominator at the family's k.
  int det_shift() const;
  /// Smallest k with all exponents non-negative.
  int min_k() const;
  /// Exponents k + c_i.
  std::vector<unsigned> exponents(unsigned k) const;
};

const std::vector<MonomialFamily>& bures_monomial_families();

/// Throws UnknownFamily for patterns that were not printed.
const MonomialFamily& find_bures_family(Ensemble v, std::span<const int> pattern);

/// The family's ratio at k; throws std::domain_error when some exponent would
/// be negative.
Rational bures_monomial_ratio(Ensemble v, std::span<const int> pattern, unsigned k);

/// The family's expectation at k: ratio(k) * <|rho|^{k + det_shift}>.
Rational bures_monomial_moment(Ensemble v, std::span<const int> pattern, unsigned k);

/// Discrepancy report for a family whose partial-fraction form was printed:
/// empty when the recombined form equals the polynomial ratio, else a message.
std::string partial_fraction_discrepancy(const MonomialFamily& family);

/// The printed degree-4 (and determinant) monomial constants, keyed by sorted
/// exponents {4,0,0,0}, {3,1,0,0}, {2,2,0,0}, {2,1,1,0}, {1,1,1,1}.
Rational bures_monomial_constant(Ensemble v, std::span<const unsigned> exponents);

/// Evaluates the printed linear combination of rebit monomial constants that
/// gives <|rho^PT|>; throws IdentityViolation unless it equals -2663/860160.
Rational rebit_first_moment_identity();

}  // namespace detmom
