#include "detmom/hs_exact.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "detmom/errors.hpp"
#include "detmom/hypergeom.hpp"

namespace detmom {
namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

Rational two_pow(unsigned e) { return pow(Rational(2), e); }

// Common Pochhammer denominator 2^{c n} (3a + 3/2)_m (6a + 5/2)_{2m}.
Rational hs_denominator(const Rational& alpha, unsigned m, unsigned shift_power) {
  return two_pow(shift_power) * pochhammer(alpha * 3 + r(3, 2), m) *
         pochhammer(alpha * 6 + r(5, 2), 2 * m);
}

}  // namespace

Rational hs_det_moment(unsigned k, const Rational& alpha) {
  return factorial(k) * pochhammer(alpha + 1, k) * pochhammer(alpha * 2 + 1, k) /
         hs_denominator(alpha, k, 6 * k);
}

Rational hs_pt_moment(unsigned n, const Rational& alpha) {
  if (n == 0) return Rational(1);
  const Rational nn(static_cast<long>(n));
  const Rational first = factorial(n) * pochhammer(alpha + 1, n) * pochhammer(alpha * 2 + 1, n) /
                         hs_denominator(alpha, n, 6 * n);
  const Rational second_prefactor = pochhammer(-nn * 2 - 1 - alpha * 5, n) *
                                    pochhammer(alpha, n) * pochhammer(alpha + r(1, 2), n) /
                                    hs_denominator(alpha, n, 4 * n);
  if (second_prefactor.is_zero()) return first;
  HypergeometricSpec spec;
  spec.upper = {-(nn - 2) / 2, -(nn - 1) / 2, -nn, alpha + 1, alpha * 2 + 1};
  spec.lower = {1 - nn, nn + 2 + alpha * 5, 1 - nn - alpha, r(1, 2) - nn - alpha};
  spec.treat_sum_as_one = (n == 1);
  return first + second_prefactor * pfq_unit(spec);
}

Rational hs_balanced_moment(unsigned n, const Rational& alpha) {
  const Rational nn(static_cast<long>(n));
  const Rational prefactor = factorial(2 * n) * pochhammer(alpha + 1, 2 * n) *
                             pochhammer(alpha * 2 + 1, 2 * n) / hs_denominator(alpha, 2 * n, 12 * n);
  HypergeometricSpec spec;
  spec.upper = {-nn, alpha, alpha + r(1, 2), -nn * 4 - 1 - alpha * 5};
  spec.lower = {-nn * 2 - alpha, -nn * 2 - alpha * 2, r(1, 2) - nn};
  return prefactor * pfq_unit(spec);
}

Rational hs_bivariate_ratio(MomentIndex idx, const Rational& alpha) {
  const Rational n(static_cast<long>(idx.n));
  const Rational k(static_cast<long>(idx.k));
  const Rational prefactor =
      pochhammer(k + 1, idx.n) * pochhammer(k + 1 + alpha, idx.n) *
      pochhammer(k + 1 + alpha * 2, idx.n) /
      (two_pow(6 * idx.n) * pochhammer(k + alpha * 3 + r(3, 2), idx.n) *
       pochhammer(k * 2 + alpha * 6 + r(5, 2), 2 * idx.n));
  // k -> k + eps; only parameters that depend on k carry a slope.
  const std::vector<AffineParam> upper = {
      {-n, r(0)}, {-k, r(-1)}, {alpha, r(0)}, {alpha + r(1, 2), r(0)},
      {-k * 2 - n * 2 - 1 - alpha * 5, r(-2)}};
  const std::vector<AffineParam> lower = {{-k - n - alpha, r(-1)},
                                          {-k - n - alpha * 2, r(-1)},
                                          {-(k + n) / 2, r(-1, 2)},
                                          {-(k + n - 1) / 2, r(-1, 2)}};
  return prefactor * pfq_unit_limit(upper, lower);
}

Rational hs_bivariate_moment(MomentIndex idx, const Rational& alpha) {
  return hs_bivariate_ratio(idx, alpha) * hs_det_moment(idx.k, alpha);
}

RationalFunction hs_ratio_qubit_function() {
  return {Polynomial::from_descending({1, 6, -1, -42}),
          Polynomial::from_descending({256, 3456, 15536, 23256})};
}

Rational hs_ratio_qubit(unsigned k) { return hs_ratio_qubit_function()(Rational(static_cast<long>(k))); }

RationalFunction hs_ratio_rebit_function() {
  // (k - 1)(k(2k + 11) + 16) / (32 (k + 3)(4k + 11)(4k + 13))
  const Polynomial num = Polynomial::linear(1, -1) * Polynomial::from_descending({2, 11, 16});
  const Polynomial den = Polynomial({r(32)}) * Polynomial::linear(1, 3) *
                         Polynomial::linear(4, 11) * Polynomial::linear(4, 13);
  return {num, den};
}

Rational hs_ratio_rebit(unsigned k) { return hs_ratio_rebit_function()(Rational(static_cast<long>(k))); }

RationalFunction hs_monomial_qubit_function() {
  return {Polynomial::from_descending({1, 50, 851, 6770, 27234, 52970, 39084}),
          Polynomial::from_descending({1024, 30720, 383104, 2542080, 9465796, 18753960, 15444891}) *
              Rational(64)};
}

RationalFunction hs_monomial_qubit_function_factored() {
  // (k+2)(k+3)(k(k(k(k+45)+620)+3400)+6514) / (64 (2k+9)(2k+11)(4k+17)(4k+19)(4k+21)(4k+23))
  const Polynomial num = Polynomial::linear(1, 2) * Polynomial::linear(1, 3) *
                         Polynomial::from_descending({1, 45, 620, 3400, 6514});
  const Polynomial den = Polynomial({r(64)}) * Polynomial::linear(2, 9) * Polynomial::linear(2, 11) *
                         Polynomial::linear(4, 17) * Polynomial::linear(4, 19) *
                         Polynomial::linear(4, 21) * Polynomial::linear(4, 23);
  return {num, den};
}

Rational hs_monomial_qubit_ratio(unsigned k) {
  const Rational kk(static_cast<long>(k));
  const Rational expanded = hs_monomial_qubit_function()(kk);
  if (expanded != hs_monomial_qubit_function_factored()(kk)) {
    throw IdentityViolation("hs_monomial_qubit_ratio: printed forms disagree at k = " + kk.str());
  }
  return expanded;
}

// ---------------------------------------------------------------------------
// Exact simplex oracle.

namespace {

using Exponents = std::array<unsigned, 4>;

// Sparse polynomial in four variables.
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly constant(const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_[{0, 0, 0, 0}] = c;
    return p;
  }
  // sum_i coeffs[i] * x_i
  static MultiPoly linear(const std::array<Rational, 4>& coeffs) {
    MultiPoly p;
    for (std::size_t i = 0; i < 4; ++i) {
      if (coeffs[i].is_zero()) continue;
      Exponents e{};
      e[i] = 1;
      p.terms_[e] = coeffs[i];
    }
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
      }
    }
    return out;
  }

  MultiPoly scaled(const Rational& s) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.add(e, c * s);
    return out;
  }

  // Integral over the standard simplex sum x = 1 (measure dx1 dx2 dx3).
  Rational simplex_integral() const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      sum += c * factorial(e[0]) * factorial(e[1]) * factorial(e[2]) * factorial(e[3]) /
             factorial(e[0] + e[1] + e[2] + e[3] + 3);
    }
    return sum;
  }

 private:
  void add(const Exponents& e, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
  }

  std::map<Exponents, Rational> terms_;
};

MultiPoly vandermonde(const std::array<MultiPoly, 4>& lambda) {
  MultiPoly v = MultiPoly::constant(1);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      v = v * (lambda[i] + lambda[j].scaled(-1));
    }
  }
  return v;
}

std::vector<MultiPoly> powers(const MultiPoly& base, unsigned max_power) {
  std::vector<MultiPoly> out{MultiPoly::constant(1)};
  for (unsigned p = 1; p <= max_power; ++p) out.push_back(out.back() * base);
  return out;
}

// integral over the full simplex of lambda^e * Delta^2
Rational squared_vandermonde_integral(const Exponents& e) {
  std::array<MultiPoly, 4> lambda;
  for (std::size_t i = 0; i < 4; ++i) {
    std::array<Rational, 4> c{0, 0, 0, 0};
    c[i] = 1;
    lambda[i] = MultiPoly::linear(c);
  }
  const MultiPoly v = vandermonde(lambda);
  MultiPoly mono = MultiPoly::constant(1);
  for (std::size_t i = 0; i < 4; ++i) mono = mono * powers(lambda[i], e[i]).back();
  return (v * v * mono).simplex_integral();
}

// integral over the full simplex of lambda^e * |Delta|, by order sectors
Rational abs_vandermonde_integral(const Exponents& e) {
  // Gap coordinates on the sector l1 >= l2 >= l3 >= l4, rescaled to the
  // standard simplex: l4 = v1/4, l3 = l4 + v2/3, l2 = l3 + v3/2, l1 = l2 + v4.
  // The map has Jacobian 1/24 onto the standard simplex.
  std::array<MultiPoly, 4> lambda;
  std::array<Rational, 4> c{0, 0, 0, 0};
  const std::array<Rational, 4> step{r(1, 4), r(1, 3), r(1, 2), r(1)};
  for (int i = 3; i >= 0; --i) {
    c[static_cast<std::size_t>(3 - i)] = step[static_cast<std::size_t>(3 - i)];
    lambda[static_cast<std::size_t>(i)] = MultiPoly::linear(c);
  }
  const MultiPoly v = vandermonde(lambda);  // non-negative on the sector

  const unsigned max_e = *std::max_element(e.begin(), e.end());
  std::array<std::vector<MultiPoly>, 4> pw;
  for (std::size_t i = 0; i < 4; ++i) pw[i] = powers(lambda[i], max_e);

  // Sum of lambda_{sigma(i)}^{e_i} over all 24 permutations.
  Exponents perm = e;
  std::sort(perm.begin(), perm.end());
  long distinct = 0;
  MultiPoly sym;
  do {
    MultiPoly term = MultiPoly::constant(1);
    for (std::size_t i = 0; i < 4; ++i) term = term * pw[i][perm[i]];
    sym += term;
    ++distinct;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const Rational multiplicity(24 / distinct);

  return (sym * v).simplex_integral() * multiplicity / 24;
}

Rational unnormalized_integral(const Exponents& e, const Rational& alpha) {
  if (alpha == Rational(1)) return squared_vandermonde_integral(e);
  if (alpha == Rational(1, 2)) return abs_vandermonde_integral(e);
  throw UnsupportedAlpha("hs_monomial_exact: alpha " + alpha.str() + " not in {1/2, 1}");
}

}  // namespace

Rational hs_monomial_exact(const std::array<unsigned, 4>& exponents, const Rational& alpha) {
  return unnormalized_integral(exponents, alpha) / unnormalized_integral({0, 0, 0, 0}, alpha);
}

Rational hs_normalization_constant(const Rational& alpha) {
  return Rational(1) / unnormalized_integral({0, 0, 0, 0}, alpha);
}

}  // namespace detmom
