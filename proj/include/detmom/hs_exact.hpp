#pragma once

#include <array>

#include "detmom/polynomial.hpp"
#include "detmom/rational.hpp"

namespace detmom {

/// Powers (n, k) in <|rho^PT|^n |rho|^k>.
struct MomentIndex {
  unsigned n = 0;
  unsigned k = 0;
};

// Hilbert-Schmidt determinantal moments of 4x4 density matrices as exact
// functions of the Dyson-like index alpha (1/2 real, 1 complex, 2 quaternionic).

/// <|rho|^k>.
Rational hs_det_moment(unsigned k, const Rational& alpha);

/// <|rho^PT|^n>. The 5F4 is replaced by 1 at n = 1 (its literal series is 0/0
/// there); n = 0 returns the normalization.
Rational hs_pt_moment(unsigned n, const Rational& alpha);

/// <(|rho| |rho^PT|)^n>.
Rational hs_balanced_moment(unsigned n, const Rational& alpha);

/// <|rho^PT|^n |rho|^k> / <|rho|^k>. The 5F4 is continued in k, which makes
/// k = 0 (a 0/0 of the literal series) agree with hs_pt_moment.
Rational hs_bivariate_ratio(MomentIndex idx, const Rational& alpha);

/// <|rho^PT|^n |rho|^k>.
Rational hs_bivariate_moment(MomentIndex idx, const Rational& alpha);

/// Printed closed form of <|rho^PT| |rho|^k> / <|rho|^k> at alpha = 1.
RationalFunction hs_ratio_qubit_function();
Rational hs_ratio_qubit(unsigned k);
/// Same ratio at alpha = 1/2.
RationalFunction hs_ratio_rebit_function();
Rational hs_ratio_rebit(unsigned k);

/// Printed (expanded) form of <l1^5 l2^2 l3 |rho|^k> / <|rho|^k> at alpha = 1.
RationalFunction hs_monomial_qubit_function();
/// Same quantity from the printed factored form.
RationalFunction hs_monomial_qubit_function_factored();
/// Evaluates the expanded form and checks it against the factored one.
Rational hs_monomial_qubit_ratio(unsigned k);

/// Exact E[l1^a l2^b l3^c l4^d] under the density proportional to
/// prod_{i<j} |li - lj|^{2 alpha} on the eigenvalue simplex (eigenvalues
/// exchangeable). alpha = 1 expands the squared Vandermonde into Dirichlet
/// integrals; alpha = 1/2 splits the simplex into its 24 order sectors and
/// integrates each in gap coordinates. Throws UnsupportedAlpha otherwise.
Rational hs_monomial_exact(const std::array<unsigned, 4>& exponents, const Rational& alpha);

/// 1 / integral of the unnormalized density over the simplex (d l1 d l2 d l3).
Rational hs_normalization_constant(const Rational& alpha);

}  // namespace detmom
