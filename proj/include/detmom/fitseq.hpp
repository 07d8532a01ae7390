#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "detmom/bures_exact.hpp"
#include "detmom/polynomial.hpp"
#include "detmom/rational.hpp"

namespace detmom {

struct SequencePoint {
  long k = 0;
  Rational value;
};

/// Exact p/q with deg p <= deg_num, deg q <= deg_den through the points. The
/// homogeneous system value(k) q(k) - p(k) = 0 on the first
/// deg_num + deg_den + 1 points is solved by fraction-free elimination; the
/// remaining points are held out and checked.
/// Throws std::invalid_argument with fewer than deg_num + deg_den + 2 points,
/// NoSolution if no solution with q != 0 reproduces the fitted points, and
/// HoldoutMismatch if a held-out point disagrees.
RationalFunction fit_rational_function(std::span<const SequencePoint> points, unsigned deg_num, unsigned deg_den);

/// Points read from CSV rows `k,numerator,denominator` (an optional header
/// line and '#' comments are skipped). Rows with a zero denominator are
/// dropped with a warning.
struct ParsedPoints {
  std::vector<SequencePoint> points;
  std::vector<std::string> warnings;
};

ParsedPoints parse_points_csv(std::istream& is);

}  // namespace detmom
