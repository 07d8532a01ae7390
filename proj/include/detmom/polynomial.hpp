#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "detmom/rational.hpp"

namespace detmom {

/// Univariate polynomial with exact coefficients, stored lowest degree first and
/// without trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending)
      : Polynomial(std::vector<Rational>(ascending)) {}

  /// Polynomial a*k + b.
  static Polynomial linear(const Rational& a, const Rational& b);
  /// Coefficients given highest degree first, as printed in formulas.
  static Polynomial from_descending(std::vector<Rational> descending);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int i) const;
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder of Euclidean division.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Scales to integer coefficients with gcd 1 and positive leading coefficient;
  /// returns the factor s with primitive = s * (*this).
  Rational make_primitive();

  std::string str(const char* var = "k") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor.
Polynomial gcd(Polynomial a, Polynomial b);

/// p(k)/q(k) in lowest terms, q primitive with positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_({Rational(0)}), den_({Rational(1)}) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Throws DegenerateDenominator at a pole.
  Rational operator()(const Rational& k) const;

  /// The function r(k + shift).
  RationalFunction shifted(const Rational& shift) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string str(const char* var = "k") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// p(k + shift).
Polynomial compose_shift(const Polynomial& p, const Rational& shift);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

}  // namespace detmom
