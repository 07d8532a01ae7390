#include "detmom/bures_exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detmom/errors.hpp"

namespace detmom {
namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }
Rational two_pow(long e) { return e >= 0 ? pow(Rational(2), static_cast<unsigned>(e)) : Rational(1) / pow(Rational(2), static_cast<unsigned>(-e)); }
Rational half_integer(long twice) { return Rational(twice, 2); }

Polynomial lin(long a, long b) { return Polynomial::linear(a, b); }
Polynomial desc(std::vector<Rational> c) { return Polynomial::from_descending(std::move(c)); }

}  // namespace

PiScaled bures_det_moment_scaled(unsigned k, Ensemble v) {
  const long kk = static_cast<long>(k);
  switch (v) {
    case Ensemble::two_qubit: {
      PiScaled num = PiScaled(r(315) * two_pow(-8 * kk - 1)) * gamma_of(half_integer(2 * kk + 1)) *
                     gamma_of(half_integer(2 * kk + 3)) * gamma_of(Rational(2 * kk + 2));
      PiScaled den = kSqrtPi * gamma_of(Rational(kk + 3)) * gamma_of(Rational(kk + 4)) *
                     gamma_of(half_integer(4 * kk + 9));
      return num / den;
    }
    case Ensemble::two_rebit: {
      PiScaled num = PiScaled(r(3) * two_pow(2 - 8 * kk)) * gamma_of(half_integer(4 * kk + 3));
      PiScaled den = kSqrtPi * PiScaled(Rational(2 * kk * kk + 3 * kk + 1)) *
                     gamma_of(Rational(2 * kk + 4));
      return num / den;
    }
    case Ensemble::retrit: {
      PiScaled num = PiScaled(two_pow(1 - 8 * kk)) * gamma_of(Rational(4 * kk + 2));
      PiScaled den = gamma_of(Rational(3 * kk + 3)) * gamma_of(Rational(kk + 2));
      return num / den;
    }
  }
  throw std::invalid_argument("bures_det_moment: unknown ensemble");
}

Rational bures_det_moment(unsigned k, Ensemble v) { return bures_det_moment_scaled(k, v).to_rational(); }

RationalFunction bures_explanatory_qubit() {
  return {desc({8, 36, -82, -681, -1366, -885}),
          desc({16, 192, 883, 1947, 2062, 840}) * Rational(128)};
}

RationalFunction bures_explanatory_qubit_factored() {
  // k(k(2k(2k(2k+9)-41)-681)-1366)-885 over 128(k+2)(k+3)(k+4)(4k+5)(4k+7)
  const Polynomial k = lin(1, 0);
  Polynomial inner = lin(2, 9);
  inner = k * Rational(2) * inner - Polynomial({r(41)});
  inner = k * Rational(2) * inner - Polynomial({r(681)});
  inner = k * inner - Polynomial({r(1366)});
  inner = k * inner - Polynomial({r(885)});
  return {inner, Polynomial({r(128)}) * lin(1, 2) * lin(1, 3) * lin(1, 4) * lin(4, 5) * lin(4, 7)};
}

RationalFunction bures_explanatory_rebit() {
  // (64k^5+128k^4-340k^3-1032k^2-1099k-384) / (k (8k^2-2k-1)(8k^2+18k-5))
  return {desc({64, 128, -340, -1032, -1099, -384}),
          lin(1, 0) * desc({8, -2, -1}) * desc({8, 18, -5})};
}

RationalFunction bures_explanatory_rebit_factored() {
  // k(4k(k(16k(k+2)-85)-258)-1099)-384 over k(2k-1)(2k+5)(4k-1)(4k+1)
  const Polynomial k = lin(1, 0);
  Polynomial inner = k * Rational(16) * lin(1, 2) - Polynomial({r(85)});
  inner = k * inner - Polynomial({r(258)});
  inner = k * Rational(4) * inner - Polynomial({r(1099)});
  inner = k * inner - Polynomial({r(384)});
  return {inner, k * lin(2, -1) * lin(2, 5) * lin(4, -1) * lin(4, 1)};
}

Rational bures_pt_det_moment(unsigned k, Ensemble v) {
  const Rational next(static_cast<long>(k) + 1);
  switch (v) {
    case Ensemble::two_qubit:
      return bures_explanatory_qubit()(next) * bures_det_moment(k, v);
    case Ensemble::two_rebit:
      return bures_explanatory_rebit()(next) * bures_det_moment(k + 1, v);
    case Ensemble::retrit:
      break;
  }
  throw std::invalid_argument("bures_pt_det_moment: partial transpose needs a 2x2 system");
}

Rational bures_pt_squared_moment_rebit() { return Rational(50654227, 1307993702400L); }

RationalFunction recombine_partial_fractions(std::span<const PartialFraction> terms,
                                             const Rational& constant) {
  RationalFunction sum(Polynomial({constant}), Polynomial({Rational(1)}));
  for (const auto& t : terms) {
    sum = sum + RationalFunction(Polynomial({t.coeff}), Polynomial::linear(t.a, t.b));
  }
  return sum;
}

int MonomialFamily::det_shift() const {
  const int total = std::accumulate(pattern.begin(), pattern.end(), 0);
  return total / static_cast<int>(pattern.size());
}

int MonomialFamily::min_k() const { return -*std::min_element(pattern.begin(), pattern.end()); }

std::vector<unsigned> MonomialFamily::exponents(unsigned k) const {
  std::vector<unsigned> e;
  for (int c : pattern) {
    const int v = static_cast<int>(k) + c;
    if (v < 0) throw std::domain_error("monomial family " + label + ": negative exponent");
    e.push_back(static_cast<unsigned>(v));
  }
  return e;
}

const std::vector<MonomialFamily>& bures_monomial_families() {
  static const std::vector<MonomialFamily> families = [] {
    const Polynomial k = lin(1, 0);
    std::vector<MonomialFamily> f;
    const auto add = [&](Ensemble e, std::vector<int> pattern, RationalFunction ratio,
                         std::vector<PartialFraction> pf, Rational pc, std::string label) {
      f.push_back({e, std::move(pattern), std::move(ratio), std::move(pf), std::move(pc),
                   std::move(label)});
    };

    // Two qubits, over <|rho|^k>.
    const Polynomial q_den = k * lin(1, 4) * lin(2, -1) * lin(2, 1);
    add(Ensemble::two_qubit, {1, 0, 0, -1},
        {k * Rational(4) * lin(1, 5) + Polynomial({r(19)}), desc({4, 0, -1})}, {}, 0,
        "l1^(k+1) l2^k l3^k l4^(k-1)");
    add(Ensemble::two_qubit, {1, 1, -1, -1}, {desc({4, 56, 279, 556, 350}), q_den}, {}, 0,
        "l1^(k+1) l2^(k+1) l3^(k-1) l4^(k-1)");
    add(Ensemble::two_qubit, {2, 0, -1, -1}, {desc({4, 76, 439, 996, 770}), q_den}, {}, 0,
        "l1^(k+2) l2^k l3^(k-1) l4^(k-1)");
    add(Ensemble::two_qubit, {3, -1, -1, -1},
        {lin(2, 5) * desc({4, 128, 1067, 3148, 2898}), q_den * lin(2, 1)}, {}, 0,
        "l1^(k+3) l2^(k-1) l3^(k-1) l4^(k-1)");

    // Two rebits, over <|rho|^k>.
    const Polynomial r_den = lin(2, -1) * lin(2, 5) * lin(4, -1) * lin(4, 1);
    add(Ensemble::two_rebit, {1, 0, 0, -1}, {desc({8, 22, 11}), desc({8, -2, -1})},
        {{-4, 4, 1}, {8, 2, -1}}, 1, "l1^(k+1) l2^k l3^k l4^(k-1)");
    add(Ensemble::two_rebit, {1, 1, -1, -1}, {desc({64, 512, 1452, 1624, 545}), r_den}, {}, 0,
        "l1^(k+1) l2^(k+1) l3^(k-1) l4^(k-1)");
    add(Ensemble::two_rebit, {2, 0, -1, -1}, {desc({64, 704, 2364, 3064, 1325}), r_den}, {}, 0,
        "l1^(k+2) l2^k l3^(k-1) l4^(k-1)");
    add(Ensemble::two_rebit, {3, -1, -1, -1}, {desc({64, 1280, 7596, 18712, 20057, 7680}), k * r_den},
        {}, 0, "l1^(k+3) l2^(k-1) l3^(k-1) l4^(k-1)");

    // Two rebits, over <|rho|^(k+2)>.
    const Polynomial d5 = desc({128, 1344, 5080, 8700, 6642, 1701});
    add(Ensemble::two_rebit, {3, 2, 2, 1}, {desc({8, 54, 87}), desc({8, 30, 27})}, {}, 0,
        "l1^3 l2^2 l3^2 l4 |rho|^k");
    add(Ensemble::two_rebit, {3, 3, 2, 0},
        {desc({128, 2496, 19000, 70284, 125922, 87213}), d5},
        {{r(176, 63), 4, 9}, {-334, 6, 9}, {495, 14, 7}, {1260, 44, 77}, {r(-5, 99), 2, 9}}, 1,
        "l1^3 l2^3 l3^2 |rho|^k");
    add(Ensemble::two_rebit, {4, 3, 1, 0},
        {desc({512, 13696, 143008, 751304, 2096676, 2936118, 1596285}), lin(4, 5) * d5},
        {{r(5, 858), 2, 9},
         {675, 4, 2},
         {r(-184, 3), 4, 9},
         {6480, 44, 77},
         {-14700, 52, 65},
         {-6, 2, 3}},
        1, "l1^4 l2^3 l3 |rho|^k");
    add(Ensemble::two_rebit, {5, 2, 1, 0},
        {desc({512, 17792, 234144, 1576840, 5978260, 12867318, 14589933, 6699810}),
         lin(1, 2) * lin(4, 5) * d5},
        {{r(-175, 2574), 2, 9},
         {r(-122500, 39), 4, 5},
         {r(17492, 63), 4, 9},
         {-1936, 6, 9},
         {55740, 44, 77},
         {32765, 84, 42},
         {r(-1792, 3), 1, 2}},
        1, "l1^5 l2^2 l3 |rho|^k");

    // Real 3x3, over <|rho|^k>.
    add(Ensemble::retrit, {1, 0, -1}, {desc({16, 36, 13}), desc({16, -4, -2})},
        {{-5, 12, 3}, {r(35, 6), 2, -1}}, 1, "l1^(k+1) l2^k l3^(k-1)");
    add(Ensemble::retrit, {2, -1, -1}, {desc({32, 224, 308, 101}), desc({32, -16, -2, 1})}, {}, 0,
        "l1^(k+2) l2^(k-1) l3^(k-1)");
    return f;
  }();
  return families;
}

const MonomialFamily& find_bures_family(Ensemble v, std::span<const int> pattern) {
  for (const auto& f : bures_monomial_families()) {
    if (f.ensemble == v && std::ranges::equal(f.pattern, pattern)) return f;
  }
  std::string p;
  for (int c : pattern) p += (p.empty() ? "" : ",") + std::to_string(c);
  throw UnknownFamily("no printed " + to_string(v) + " monomial family with pattern {" + p + "}");
}

Rational bures_monomial_ratio(Ensemble v, std::span<const int> pattern, unsigned k) {
  const auto& f = find_bures_family(v, pattern);
  if (static_cast<int>(k) < f.min_k()) {
    throw std::domain_error("monomial family " + f.label + " needs k >= " + std::to_string(f.min_k()));
  }
  return f.ratio(Rational(static_cast<long>(k)));
}

Rational bures_monomial_moment(Ensemble v, std::span<const int> pattern, unsigned k) {
  const auto& f = find_bures_family(v, pattern);
  return bures_monomial_ratio(v, pattern, k) *
         bures_det_moment(k + static_cast<unsigned>(f.det_shift()), v);
}

std::string partial_fraction_discrepancy(const MonomialFamily& family) {
  if (family.partial_fractions.empty()) return {};
  const RationalFunction recombined =
      recombine_partial_fractions(family.partial_fractions, family.partial_constant);
  if (recombined == family.ratio) return {};
  return family.label + ": partial fractions recombine to " + recombined.str() +
         ", printed ratio is " + family.ratio.str();
}

Rational bures_monomial_constant(Ensemble v, std::span<const unsigned> exponents) {
  std::vector<unsigned> e(exponents.begin(), exponents.end());
  std::sort(e.begin(), e.end(), std::greater<>());
  e.resize(4, 0);
  const auto is = [&](std::initializer_list<unsigned> x) { return std::ranges::equal(e, x); };
  if (v == Ensemble::two_qubit) {
    if (is({1, 1, 1, 1})) return r(1, 16896);
    if (is({2, 1, 1, 0})) return r(43, 50688);
    if (is({2, 2, 0, 0})) return r(83, 16896);
    if (is({3, 1, 0, 0})) return r(457, 50688);
    if (is({4, 0, 0, 0})) return r(1127, 16896);
  } else if (v == Ensemble::two_rebit) {
    if (is({1, 1, 1, 1})) return r(1, 8192);
    if (is({2, 1, 1, 0})) return r(41, 40960);
    if (is({2, 2, 0, 0})) return r(1399, 286720);
    if (is({3, 1, 0, 0})) return r(2507, 286720);
    if (is({4, 0, 0, 0})) return r(18463, 286720);
  }
  throw UnknownFamily("no printed " + to_string(v) + " monomial constant for these exponents");
}

Rational rebit_first_moment_identity() {
  const auto c = [](std::initializer_list<unsigned> e) {
    return bures_monomial_constant(Ensemble::two_rebit, std::vector<unsigned>(e));
  };
  const Rational constant_term = r(33, 50) * c({1, 1, 1, 1});
  const Rational value = r(26, 75) * c({2, 1, 1, 0}) + r(53, 300) * c({2, 2, 0, 0}) -
                         r(2, 15) * c({3, 1, 0, 0}) - r(1, 20) * c({4, 0, 0, 0}) + constant_term;
  const Rational expected(-2663, 860160);
  if (value != expected || constant_term != r(33, 409600)) {
    throw IdentityViolation("rebit first-moment identity gives " + value.str() + ", expected " +
                            expected.str());
  }
  return value;
}

}  // namespace detmom
