#pragma once

#include <stdexcept>
#include <string>

namespace detmom {

// Each failure mode named by the library gets its own type so callers can
// react to the specific condition (e.g. fall back to a documented special case
// on DegenerateDenominator).

struct DegenerateDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

// A sqrt(pi) power survived evaluation of an expression that must be rational.
struct PiResidue : std::logic_error {
  using std::logic_error::logic_error;
};

struct UnknownFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IdentityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct UnsupportedAlpha : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ToleranceNotMet : std::runtime_error {
  ToleranceNotMet(const std::string& what, double value, double error_bound)
      : std::runtime_error(what), value(value), error_bound(error_bound) {}
  double value;
  double error_bound;
};

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BoundaryPoint : std::domain_error {
  using std::domain_error::domain_error;
};

struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HoldoutMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace detmom
