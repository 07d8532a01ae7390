#pragma once

#include <string>
#include <string_view>

#include "detmom/rational.hpp"

namespace detmom {

enum class Measure { hilbert_schmidt, bures };

/// two_qubit: complex 4x4; two_rebit: real 4x4; retrit: real 3x3.
enum class Ensemble { two_qubit, two_rebit, retrit };

constexpr int dimension(Ensemble e) { return e == Ensemble::retrit ? 3 : 4; }
constexpr bool is_complex(Ensemble e) { return e == Ensemble::two_qubit; }

/// Dyson-like index: 1/2 for real, 1 for complex entries.
inline Rational dyson_alpha(Ensemble e) {
  return is_complex(e) ? Rational(1) : Rational(1, 2);
}

std::string to_string(Measure m);
std::string to_string(Ensemble e);

/// Accepts "hs"/"hilbert-schmidt" and "bures".
Measure parse_measure(std::string_view s);
/// Accepts "two-qubit", "two_qubit", "qubit", "two-rebit", "rebit", "retrit".
Ensemble parse_ensemble(std::string_view s);

}  // namespace detmom
