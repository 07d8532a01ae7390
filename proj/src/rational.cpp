#include "detmom/rational.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "detmom/errors.hpp"

namespace detmom {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty input");
  const auto slash = text.find('/');
  const auto to_z = [&](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    mpz_class z;
    if (s.empty() || z.set_str(std::string(s), 10) != 0) {
      throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
    }
    return z;
  };
  if (slash == std::string_view::npos) return Rational(to_z(text));
  return Rational(to_z(text.substr(0, slash)), to_z(text.substr(slash + 1)));
}

long double Rational::to_long_double() const {
  if (is_zero()) return 0.0L;
  signed long num_exp = 0;
  signed long den_exp = 0;
  const double num_m = mpz_get_d_2exp(&num_exp, v_.get_num_mpz_t());
  const double den_m = mpz_get_d_2exp(&den_exp, v_.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(num_m) / den_m, static_cast<int>(num_exp - den_exp));
}

std::string Rational::str() const { return v_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pochhammer(const Rational& a, unsigned j) {
  Rational out(1);
  Rational factor = a;
  for (unsigned i = 0; i < j; ++i) {
    out *= factor;
    if (out.is_zero()) return out;
    factor += 1;
  }
  return out;
}

Rational factorial(unsigned j) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), j);
  return Rational(f);
}

mpz_class binomial(unsigned n, unsigned r) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, r);
  return b;
}

GammaHalfValue gamma_half(unsigned m) {
  if (m == 0) throw std::domain_error("gamma_half: pole at 0");
  // Gamma(1/2) = sqrt(pi), Gamma(1) = 1, Gamma(x + 1) = x Gamma(x).
  GammaHalfValue g;
  g.sqrt_pi_power = (m % 2 == 1) ? 1 : 0;
  g.coefficient = Rational(1);
  for (unsigned x2 = (m % 2 == 1) ? 1 : 2; x2 + 2 <= m; x2 += 2) {
    g.coefficient *= Rational(static_cast<long>(x2), 2L);
  }
  return g;
}

Rational PiScaled::to_rational() const {
  if (sqrt_pi_power_ != 0 && !coefficient_.is_zero()) {
    throw PiResidue("sqrt(pi) power " + std::to_string(sqrt_pi_power_) +
                    " did not cancel (coefficient " + coefficient_.str() + ")");
  }
  return coefficient_;
}

double PiScaled::to_double() const {
  return coefficient_.to_double() * std::pow(std::numbers::pi, 0.5 * sqrt_pi_power_);
}

PiScaled gamma_of(const Rational& x) {
  const Rational twice = x * 2;
  if (!twice.is_integer() || twice.sign() <= 0) {
    throw std::domain_error("gamma_of: argument " + x.str() + " is not a positive half-integer");
  }
  return gamma_half(static_cast<unsigned>(twice.numerator().get_ui()));
}

}  // namespace detmom
