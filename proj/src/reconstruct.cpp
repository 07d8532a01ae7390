#include "detmom/reconstruct.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "detmom/hs_exact.hpp"

namespace detmom {

namespace {

long double to_ld(const Rational& r) { return r.to_long_double(); }
long double to_ld(long double x) { return x; }

template <typename T>
T from_mpz(const mpz_class& z) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(z);
  } else {
    return static_cast<long double>(z.get_d());
  }
}

// P_0(u)..P_{n}(u) by the three-term recurrence.
std::vector<long double> legendre_values(long double u, unsigned n) {
  std::vector<long double> p(n + 1);
  p[0] = 1;
  if (n >= 1) p[1] = u;
  for (unsigned i = 1; i < n; ++i) p[i + 1] = ((2 * i + 1) * u * p[i] - i * p[i - 1]) / (i + 1);
  return p;
}

template <typename T>
std::vector<long double> damped(const DensityExpansion<T>& d, const EvalOptions& options) {
  std::vector<long double> c;
  c.reserve(d.coeffs.size());
  for (const auto& x : d.coeffs) c.push_back(to_ld(x));
  if (options.jackson && !c.empty()) {
    const auto g = jackson_factors(static_cast<unsigned>(c.size() - 1));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= g[i];
  }
  return c;
}

}  // namespace

template <typename T>
DensityExpansion<T> legendre_coefficients(const MomentSequence<T>& ms, unsigned order) {
  if (order >= ms.values.size()) throw std::invalid_argument("legendre_coefficients: not enough moments");
  const T width = ms.b - ms.a;
  const T s = T(2) / width;
  const T t = -(ms.a + ms.b) / width;

  // moments of u = s x + t
  std::vector<T> sp(order + 1), tp(order + 1);
  sp[0] = T(1);
  tp[0] = T(1);
  for (unsigned i = 1; i <= order; ++i) {
    sp[i] = sp[i - 1] * s;
    tp[i] = tp[i - 1] * t;
  }
  std::vector<T> scaled(order + 1);
  for (unsigned i = 0; i <= order; ++i) scaled[i] = sp[i] * ms.values[i];
  std::vector<T> mu(order + 1, T(0));
  for (unsigned j = 0; j <= order; ++j) {
    T acc(0);
    for (unsigned i = 0; i <= j; ++i) acc += from_mpz<T>(binomial(j, i)) * tp[j - i] * scaled[i];
    mu[j] = acc;
  }

  // c_i = sum_j [u^j]P_i * E[u^j]; rows of the coefficient table come from
  // (i + 1) P_{i+1} = (2i + 1) u P_i - i P_{i-1}
  DensityExpansion<T> out{ms.a, ms.b, std::vector<T>(order + 1, T(0))};
  std::vector<T> prev{T(1)};  // P_0
  out.coeffs[0] = mu[0];
  if (order == 0) return out;
  std::vector<T> cur{T(0), T(1)};  // P_1
  out.coeffs[1] = mu[1];
  for (unsigned i = 1; i < order; ++i) {
    std::vector<T> next(i + 2, T(0));
    const T up = T(static_cast<long>(2 * i + 1)) / T(static_cast<long>(i + 1));
    const T down = T(static_cast<long>(i)) / T(static_cast<long>(i + 1));
    for (unsigned j = 0; j <= i; ++j) next[j + 1] += up * cur[j];
    for (unsigned j = 0; j < prev.size(); ++j) next[j] -= down * prev[j];
    T c(0);
    for (unsigned j = 0; j < next.size(); ++j) c += next[j] * mu[j];
    out.coeffs[i + 1] = c;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

template <typename T>
std::vector<T> moments_from_expansion(const DensityExpansion<T>& d, unsigned count) {
  const unsigned order = static_cast<unsigned>(d.coeffs.size()) - 1;
  // E[u^j] = sum_i a_ji c_i with u^j = sum_i a_ji P_i,
  // a_ji = (2i+1) j! / (2^{(j-i)/2} ((j-i)/2)! (j+i+1)!!) for j - i even
  const auto double_factorial = [](unsigned n) {
    mpz_class r = 1;
    for (unsigned m = n; m > 1; m -= 2) r *= m;
    return r;
  };
  std::vector<T> mu(count, T(0));
  for (unsigned j = 0; j < count; ++j) {
    T acc(0);
    for (unsigned i = j % 2; i <= std::min(j, order); i += 2) {
      const unsigned h = (j - i) / 2;
      mpz_class den = double_factorial(j + i + 1);
      den *= factorial(h).numerator();
      den <<= h;
      const mpz_class num = factorial(j).numerator() * (2 * i + 1);
      acc += from_mpz<T>(num) / from_mpz<T>(den) * d.coeffs[i];
    }
    mu[j] = acc;
  }
  // x = half u + mid
  const T half = (d.b - d.a) / T(2);
  const T mid = (d.a + d.b) / T(2);
  std::vector<T> out(count, T(0));
  for (unsigned j = 0; j < count; ++j) {
    T acc(0);
    T hp(1);
    for (unsigned l = 0; l <= j; ++l) {
      T mp(1);
      for (unsigned r = 0; r < j - l; ++r) mp = mp * mid;
      acc += from_mpz<T>(binomial(j, l)) * hp * mp * mu[l];
      hp = hp * half;
    }
    out[j] = acc;
  }
  return out;
}

std::vector<long double> jackson_factors(unsigned order) {
  const long double n1 = order + 1;
  const long double q = std::numbers::pi_v<long double> / n1;
  std::vector<long double> g(order + 1);
  for (unsigned i = 0; i <= order; ++i) {
    g[i] = ((n1 - i) * std::cos(q * i) + std::sin(q * i) / std::tan(q)) / n1;
  }
  return g;
}

template <typename T>
long double density(const DensityExpansion<T>& d, long double x, const EvalOptions& options) {
  const long double a = to_ld(d.a), b = to_ld(d.b);
  const long double u = (2 * x - a - b) / (b - a);
  const auto c = damped(d, options);
  const auto p = legendre_values(u, static_cast<unsigned>(c.size() - 1));
  long double f = 0;
  for (std::size_t i = 0; i < c.size(); ++i) f += c[i] * (2 * i + 1) * p[i];
  return f / (b - a);
}

template <typename T>
long double tail_probability(const DensityExpansion<T>& d, long double threshold, const EvalOptions& options) {
  const long double a = to_ld(d.a), b = to_ld(d.b);
  if (threshold < a || threshold > b) throw std::invalid_argument("tail_probability: threshold outside support");
  const long double u0 = (2 * threshold - a - b) / (b - a);
  const auto c = damped(d, options);
  const auto p = legendre_values(u0, static_cast<unsigned>(c.size()));
  long double tail = c[0] * (1 - u0) / 2;
  for (std::size_t i = 1; i < c.size(); ++i) tail += c[i] * (p[i - 1] - p[i + 1]) / 2;
  return tail;
}

template <typename T>
void write_density_csv(std::ostream& os, const DensityExpansion<T>& d, unsigned points, const EvalOptions& options) {
  const long double a = to_ld(d.a), b = to_ld(d.b);
  os << "x,f\n";
  os.precision(17);
  for (unsigned i = 0; i < points; ++i) {
    const long double x = points == 1 ? a : a + (b - a) * i / (points - 1);
    os << static_cast<double>(x) << ',' << static_cast<double>(density(d, x, options)) << '\n';
  }
}

MomentSequence<Rational> hs_pt_moment_sequence(const Rational& alpha, unsigned order) {
  MomentSequence<Rational> ms{Rational(-1, 16), Rational(1, 256), {}};
  ms.values.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n) ms.values.push_back(hs_pt_moment(n, alpha));
  return ms;
}

#define DETMOM_INSTANTIATE(T)                                                                             \
  template DensityExpansion<T> legendre_coefficients(const MomentSequence<T>&, unsigned);                 \
  template std::vector<T> moments_from_expansion(const DensityExpansion<T>&, unsigned);                   \
  template long double density(const DensityExpansion<T>&, long double, const EvalOptions&);              \
  template long double tail_probability(const DensityExpansion<T>&, long double, const EvalOptions&);     \
  template void write_density_csv(std::ostream&, const DensityExpansion<T>&, unsigned, const EvalOptions&);

DETMOM_INSTANTIATE(Rational)
DETMOM_INSTANTIATE(long double)

#undef DETMOM_INSTANTIATE

}  // namespace detmom
