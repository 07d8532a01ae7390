#include "detmom/hypergeom.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "detmom/errors.hpp"

namespace detmom {
namespace {

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

// Index j at which (a)_{j+1} first vanishes, i.e. a + j = 0.
std::optional<unsigned long> vanishing_index(const Rational& a) {
  if (!is_nonpositive_integer(a)) return std::nullopt;
  return (-a).numerator().get_ui();
}

}  // namespace

Rational pfq_unit(const HypergeometricSpec& spec) {
  if (spec.treat_sum_as_one) return Rational(1);

  std::optional<unsigned long> stop;
  for (const auto& u : spec.upper) {
    if (auto j = vanishing_index(u)) stop = stop ? std::min(*stop, *j) : *j;
  }
  if (!stop) throw std::invalid_argument("pfq_unit: series does not terminate");

  Rational sum(1);
  Rational term(1);
  for (unsigned long j = 0; j < *stop; ++j) {
    Rational num(1);
    for (const auto& u : spec.upper) num *= u + Rational(static_cast<long>(j));
    Rational den(static_cast<long>(j + 1));
    for (const auto& l : spec.lower) {
      const Rational f = l + Rational(static_cast<long>(j));
      if (f.is_zero()) {
        throw DegenerateDenominator("pfq_unit: lower parameter " + l.str() +
                                    " vanishes at term " + std::to_string(j + 1));
      }
      den *= f;
    }
    term *= num / den;
    sum += term;
  }
  // The step that terminates the series may still hit a vanishing lower factor;
  // that is a 0/0 and must not be silently treated as termination.
  for (const auto& l : spec.lower) {
    if ((l + Rational(static_cast<long>(*stop))).is_zero()) {
      throw DegenerateDenominator("pfq_unit: 0/0 at term " + std::to_string(*stop + 1) +
                                  " (lower parameter " + l.str() + ")");
    }
  }
  return sum;
}

Rational pfq_unit_limit(std::span<const AffineParam> upper, std::span<const AffineParam> lower) {
  std::optional<unsigned long> stop;
  for (const auto& u : upper) {
    if (!u.slope.is_zero()) continue;
    if (auto j = vanishing_index(u.value)) stop = stop ? std::min(*stop, *j) : *j;
  }
  if (!stop) throw std::invalid_argument("pfq_unit_limit: series does not terminate");

  Rational sum(1);
  Rational term(1);  // coefficient of eps^order in the current term
  long order = 0;
  for (unsigned long j = 0; j < *stop; ++j) {
    const Rational shift(static_cast<long>(j));
    Rational num(1);
    for (const auto& u : upper) {
      const Rational f = u.value + shift;
      if (f.is_zero()) {
        num *= u.slope;
        ++order;
      } else {
        num *= f;
      }
    }
    Rational den(static_cast<long>(j + 1));
    for (const auto& l : lower) {
      const Rational f = l.value + shift;
      if (f.is_zero()) {
        if (l.slope.is_zero()) {
          throw DegenerateDenominator("pfq_unit_limit: identically vanishing lower parameter " +
                                      l.value.str());
        }
        den *= l.slope;
        --order;
      } else {
        den *= f;
      }
    }
    term *= num / den;
    if (order < 0) {
      throw DegenerateDenominator("pfq_unit_limit: term " + std::to_string(j + 1) +
                                  " diverges as eps -> 0");
    }
    if (order == 0) sum += term;
  }
  return sum;
}

}  // namespace detmom
