#include "detmom/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "detmom/errors.hpp"

namespace detmom {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

Polynomial Polynomial::from_descending(std::vector<Rational> descending) {
  std::reverse(descending.begin(), descending.end());
  return Polynomial(std::move(descending));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& k) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero");
  Polynomial rem = *this;
  std::vector<Rational> quot(
      static_cast<std::size_t>(std::max(0, degree() - divisor.degree() + 1)), Rational(0));
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const Rational f = rem.leading() / divisor.leading();
    quot[static_cast<std::size_t>(shift)] = f;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    for (const auto& c : divisor.c_) sub.push_back(c * f);
    rem -= Polynomial(std::move(sub));
  }
  return {Polynomial(std::move(quot)), rem};
}

Rational Polynomial::make_primitive() {
  if (is_zero()) return Rational(1);
  mpz_class den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : c_) {
    const mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  if (leading().sign() < 0) s = -s;
  *this *= s;
  return s;
}

std::string Polynomial::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

Polynomial compose_shift(const Polynomial& p, const Rational& shift) {
  // Horner in the polynomial ring: p(k + s).
  const Polynomial x = Polynomial::linear(Rational(1), shift);
  Polynomial acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x;
    acc += Polynomial({p.coefficient(i)});
  }
  return acc;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational s = den_.make_primitive();
  num_ *= s;
}

Rational RationalFunction::operator()(const Rational& k) const {
  const Rational d = den_(k);
  if (d.is_zero()) throw DegenerateDenominator("RationalFunction: pole at k = " + k.str());
  return num_(k) / d;
}

RationalFunction RationalFunction::shifted(const Rational& shift) const {
  return {compose_shift(num_, shift), compose_shift(den_, shift)};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

std::string RationalFunction::str(const char* var) const {
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

}  // namespace detmom
