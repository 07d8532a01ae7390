#pragma once

#include <span>
#include <vector>

#include "detmom/rational.hpp"

namespace detmom {

/// Parameters of a terminating pFq(upper; lower; 1).
struct HypergeometricSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  // Documented bypass for closed forms whose literal series is 0/0 at a
  // known parameter value; evaluation is skipped and the sum taken as 1.
  bool treat_sum_as_one = false;
};

/// Exact value of a terminating pFq at unit argument, accumulated as a running
/// product of term ratios.
///
/// Throws std::invalid_argument when no upper parameter is a non-positive
/// integer, and DegenerateDenominator when a lower factor vanishes before the
/// series has terminated (including the 0/0 case where an upper factor vanishes
/// at the same step).
Rational pfq_unit(const HypergeometricSpec& spec);

/// A parameter of the form value + slope * eps.
struct AffineParam {
  Rational value;
  Rational slope;
};

/// lim_{eps -> 0} of pFq(upper(eps); lower(eps); 1) for parameters affine in eps.
///
/// Factors that vanish at eps = 0 are tracked by order of vanishing: a term
/// contributes to the limit only while its net order is zero. A factor that is
/// identically zero (zero value and zero slope) in the upper list terminates
/// the series. Throws DegenerateDenominator if the limit is infinite.
Rational pfq_unit_limit(std::span<const AffineParam> upper, std::span<const AffineParam> lower);

}  // namespace detmom
