#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace detmom {

/// Exact fraction of arbitrary-precision integers, always in lowest terms with
/// a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& v) : v_(v) {}
  explicit Rational(mpq_class v);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }
  /// Correctly scaled for values far outside double range.
  long double to_long_double() const;
  std::string str() const;

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& r);

/// Rising factorial a(a+1)...(a+j-1); 1 when j = 0.
Rational pochhammer(const Rational& a, unsigned j);

Rational factorial(unsigned j);

/// Binomial coefficient C(n, r) as an exact integer.
mpz_class binomial(unsigned n, unsigned r);

/// Gamma(m/2) = coefficient * sqrt(pi)^sqrt_pi_power.
struct GammaHalfValue {
  Rational coefficient;
  int sqrt_pi_power = 0;
};

GammaHalfValue gamma_half(unsigned m);

/// A rational multiple of an integer power of sqrt(pi). Products of Gamma
/// values at half-integers live here until the sqrt(pi) powers cancel.
class PiScaled {
 public:
  PiScaled() = default;
  PiScaled(Rational coefficient, int sqrt_pi_power = 0)  // NOLINT(google-explicit-constructor)
      : coefficient_(std::move(coefficient)), sqrt_pi_power_(sqrt_pi_power) {}
  PiScaled(const GammaHalfValue& g)  // NOLINT(google-explicit-constructor)
      : coefficient_(g.coefficient), sqrt_pi_power_(g.sqrt_pi_power) {}

  const Rational& coefficient() const { return coefficient_; }
  int sqrt_pi_power() const { return sqrt_pi_power_; }

  /// Throws PiResidue unless the sqrt(pi) power is zero.
  Rational to_rational() const;
  double to_double() const;

  PiScaled& operator*=(const PiScaled& o) {
    coefficient_ *= o.coefficient_;
    sqrt_pi_power_ += o.sqrt_pi_power_;
    return *this;
  }
  PiScaled& operator/=(const PiScaled& o) {
    coefficient_ /= o.coefficient_;
    sqrt_pi_power_ -= o.sqrt_pi_power_;
    return *this;
  }
  friend PiScaled operator*(PiScaled a, const PiScaled& b) { return a *= b; }
  friend PiScaled operator/(PiScaled a, const PiScaled& b) { return a /= b; }
  friend bool operator==(const PiScaled&, const PiScaled&) = default;

 private:
  Rational coefficient_{1};
  int sqrt_pi_power_ = 0;
};

/// Gamma(x) for x a positive integer or half-integer.
PiScaled gamma_of(const Rational& x);

inline const PiScaled kSqrtPi{Rational(1), 1};

}  // namespace detmom
