#include "detmom/ensemble.hpp"

#include <stdexcept>

namespace detmom {

std::string to_string(Measure m) { return m == Measure::bures ? "bures" : "hs"; }

std::string to_string(Ensemble e) {
  switch (e) {
    case Ensemble::two_qubit: return "two-qubit";
    case Ensemble::two_rebit: return "two-rebit";
    case Ensemble::retrit: return "retrit";
  }
  return "?";
}

Measure parse_measure(std::string_view s) {
  if (s == "hs" || s == "HS" || s == "hilbert-schmidt") return Measure::hilbert_schmidt;
  if (s == "bures" || s == "Bures") return Measure::bures;
  throw std::invalid_argument("unknown measure '" + std::string(s) + "'");
}

Ensemble parse_ensemble(std::string_view s) {
  if (s == "two-qubit" || s == "two_qubit" || s == "qubit") return Ensemble::two_qubit;
  if (s == "two-rebit" || s == "two_rebit" || s == "rebit") return Ensemble::two_rebit;
  if (s == "retrit") return Ensemble::retrit;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

}  // namespace detmom
