#include "detmom/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "detmom/bures_exact.hpp"
#include "detmom/errors.hpp"
#include "detmom/hs_exact.hpp"

namespace detmom {

double PiTagged::value() const { return coefficient * std::pow(std::numbers::pi, pi_power); }

namespace {

constexpr double kPi = std::numbers::pi;

// Retrit Bures normalization is 16 / (3 pi): normalization_constant() gives
// 5.33333333333336 at level 5, and <|rho|> under it matches the closed form.
constexpr double kRetritBuresCoefficient = 16.0 / 3.0;

int pi_power_of(Measure m, Ensemble v) {
  if (m == Measure::hilbert_schmidt) return 0;
  return v == Ensemble::two_qubit ? -2 : -1;
}

void require_supported(Measure m, Ensemble v) {
  if (m == Measure::hilbert_schmidt && v == Ensemble::retrit) {
    throw std::invalid_argument("quadrature: HS retrit density is not provided");
  }
}

// Unnormalized density at eigenvalues lam (any order) with precomputed
// pairwise gaps. alpha is 1 for complex, 1/2 for real ensembles.
struct Kernel {
  Measure measure;
  bool complex;
  int d;

  double operator()(const double* lam, const double* gap) const {
    // gap[p] is |l_a - l_b| for the p-th pair a < b
    double f = 1;
    int p = 0;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b, ++p) {
        const double g = gap[p];
        if (measure == Measure::hilbert_schmidt) {
          f *= complex ? g * g : g;
        } else {
          const double s = lam[a] + lam[b];
          f *= complex ? g * g / s : g / std::sqrt(s);
        }
      }
    }
    if (measure == Measure::bures) {
      for (int a = 0; a < d; ++a) f /= std::sqrt(lam[a]);
    }
    return f;
  }
};

// Tanh-sinh nodes on [0, 1] with their complements kept separately.
struct Nodes {
  std::vector<double> x, xbar, w;
};

Nodes tanh_sinh_nodes(int level) {
  // Cut where the smallest node is ~1e-30; what lies beyond is below 1e-15
  // even against a 1/sqrt(x) singularity.
  constexpr double t_max = 3.8;
  const double h = std::ldexp(1.0, -level);
  const int n = static_cast<int>(std::floor(t_max / h));
  Nodes out;
  for (int j = -n; j <= n; ++j) {
    const double t = j * h;
    const double s = kPi * std::sinh(t);
    const double x = 1 / (1 + std::exp(-s));
    const double xbar = 1 / (1 + std::exp(s));
    out.x.push_back(x);
    out.xbar.push_back(xbar);
    out.w.push_back(h * kPi * std::cosh(t) * x * xbar);
  }
  return out;
}

// Monomial weight: either the average over the distinct placements of the
// exponents, or a fixed assignment to the descending eigenvalues.
struct Monomial {
  std::vector<std::vector<unsigned>> placements;
  unsigned max_exponent = 0;

  Monomial(std::span<const unsigned> e, EigenConvention c) {
    std::vector<unsigned> v(e.begin(), e.end());
    for (unsigned x : v) max_exponent = std::max(max_exponent, x);
    if (c == EigenConvention::sorted) {
      placements.push_back(v);
      return;
    }
    std::sort(v.begin(), v.end());
    do placements.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
  }

  double operator()(const double* lam, int d) const {
    std::array<std::array<double, 32>, 4> pw;
    for (int i = 0; i < d; ++i) {
      pw[i][0] = 1;
      for (unsigned p = 1; p <= max_exponent; ++p) pw[i][p] = pw[i][p - 1] * lam[i];
    }
    double total = 0;
    for (const auto& pl : placements) {
      double m = 1;
      for (int i = 0; i < d; ++i) m *= pw[i][pl[i]];
      total += m;
    }
    return total / static_cast<double>(placements.size());
  }
};

struct Sums {
  double weighted = 0;  // integral of f * m
  double plain = 0;     // integral of f
  long long evaluations = 0;
};

// Integrates over the cube, which covers the ordered sector l1 >= ... >= ld:
// S_{d-1} = y_{d-1}, S_j = y_j S_{j+1}; gaps nu_1 = S_1,
// nu_j = S_j (1 - y_{j-1}), nu_d = 1 - y_{d-1}; mu_j = nu_j / (d + 1 - j) and
// l_{d+1-j} = mu_1 + ... + mu_j. Jacobian S_2 ... S_{d-1}, and the d! from
// the sector volume cancels against the d! sectors of the full simplex.
Sums integrate(const Kernel& kernel, const Monomial* mono, int level) {
  const Nodes nodes = tanh_sinh_nodes(level);
  const int d = kernel.d;
  const int m = d - 1;
  const std::size_t n = nodes.x.size();
  Sums out;
  std::array<std::size_t, 3> idx{};
  std::array<double, 4> S{}, mu{}, lam{};
  std::array<double, 6> gap{};
  for (;;) {
    double w = 1;
    for (int j = 0; j < m; ++j) w *= nodes.w[idx[j]];
    // S[j] for j = 1..m (1-based), S[m] = y_m
    S[m] = nodes.x[idx[m - 1]];
    for (int j = m - 1; j >= 1; --j) S[j] = nodes.x[idx[j - 1]] * S[j + 1];
    double jac = 1;
    for (int j = 2; j <= m; ++j) jac *= S[j];
    mu[0] = S[1] / d;
    for (int j = 2; j <= m; ++j) mu[j - 1] = S[j] * nodes.xbar[idx[j - 2]] / (d + 1 - j);
    mu[d - 1] = nodes.xbar[idx[m - 1]];
    // lam descending: lam[d - j] = mu_1 + ... + mu_j
    double c = 0;
    for (int j = 1; j <= d; ++j) {
      c += mu[j - 1];
      lam[d - j] = c;
    }
    // lam[a] - lam[b] = mu_{d-b+1} + ... + mu_{d-a}, summed from positive parts
    int p = 0;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b, ++p) {
        double g = 0;
        for (int i = d - b + 1; i <= d - a; ++i) g += mu[i - 1];
        gap[p] = g;
      }
    }
    const double f = kernel(lam.data(), gap.data()) * jac * w;
    out.plain += f;
    if (mono) out.weighted += f * (*mono)(lam.data(), d);
    ++out.evaluations;

    int j = 0;
    while (j < m && ++idx[j] == n) idx[j++] = 0;
    if (j == m) break;
  }
  return out;
}

Kernel kernel_for(const EigenDensitySpec& spec) {
  return {spec.measure, is_complex(spec.variant), dimension(spec.variant)};
}

void check_tolerance(const char* what, const QuadratureResult& r, double rel_tol) {
  if (!(r.error_bound <= rel_tol * std::abs(r.value))) {
    throw ToleranceNotMet(std::string(what) + ": tolerance not met at the maximum level", r.value,
                          r.error_bound);
  }
}

double rounding_floor(double v) { return 16 * std::numeric_limits<double>::epsilon() * std::abs(v); }

}  // namespace

EigenDensitySpec eigen_density_spec(Measure measure, Ensemble variant) {
  require_supported(measure, variant);
  EigenDensitySpec spec{measure, variant, {}};
  spec.normalization.pi_power = pi_power_of(measure, variant);
  if (measure == Measure::hilbert_schmidt) {
    spec.normalization.coefficient = hs_normalization_constant(dyson_alpha(variant)).to_double();
  } else if (variant == Ensemble::two_qubit) {
    spec.normalization.coefficient = 71680;
  } else if (variant == Ensemble::two_rebit) {
    spec.normalization.coefficient = 128;
  } else {
    spec.normalization.coefficient = kRetritBuresCoefficient;
  }
  return spec;
}

double eigen_density(std::span<const double> lambda, const EigenDensitySpec& spec) {
  const int d = dimension(spec.variant);
  if (static_cast<int>(lambda.size()) != d) throw DimensionMismatch("eigen_density: wrong eigenvalue count");
  if (spec.measure == Measure::bures) {
    for (double l : lambda) {
      if (l == 0) throw BoundaryPoint("eigen_density: Bures density is singular at a zero eigenvalue");
    }
  }
  std::array<double, 6> gap{};
  int p = 0;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) gap[p++] = std::abs(lambda[a] - lambda[b]);
  return kernel_for(spec)(lambda.data(), gap.data()) * spec.normalization.value();
}

QuadratureResult monomial_expectation(std::span<const unsigned> exponents, const EigenDensitySpec& spec,
                                      double rel_tol, EigenConvention convention,
                                      const QuadratureOptions& options) {
  require_supported(spec.measure, spec.variant);
  if (static_cast<int>(exponents.size()) != dimension(spec.variant)) {
    throw DimensionMismatch("monomial_expectation: exponent count must equal the dimension");
  }
  if (!(rel_tol >= 1e-10)) throw std::invalid_argument("monomial_expectation: rel_tol must be at least 1e-10");
  for (unsigned e : exponents) {
    if (e > 31) throw std::invalid_argument("monomial_expectation: exponent too large");
  }
  const Kernel kernel = kernel_for(spec);
  const Monomial mono(exponents, convention);
  QuadratureResult r;
  double previous = 0;
  for (int level = options.min_level; level <= options.max_level; ++level) {
    const Sums s = integrate(kernel, &mono, level);
    r.evaluations += s.evaluations;
    r.value = s.weighted / s.plain;
    r.level = level;
    if (level > options.min_level) {
      r.error_bound = std::max(std::abs(r.value - previous), rounding_floor(r.value));
      if (r.error_bound <= rel_tol * std::abs(r.value)) return r;
    } else {
      r.error_bound = std::abs(r.value);
    }
    previous = r.value;
  }
  check_tolerance("monomial_expectation", r, rel_tol);
  return r;
}

NormalizationEstimate normalization_constant(Measure measure, Ensemble variant, double rel_tol,
                                             const QuadratureOptions& options) {
  require_supported(measure, variant);
  const EigenDensitySpec spec{measure, variant, {}};
  const Kernel kernel = kernel_for(spec);
  const double pi_scale = std::pow(kPi, -pi_power_of(measure, variant));
  QuadratureResult r;
  double previous = 0;
  for (int level = options.min_level; level <= options.max_level; ++level) {
    const Sums s = integrate(kernel, nullptr, level);
    r.value = pi_scale / s.plain;
    r.level = level;
    r.evaluations += s.evaluations;
    r.error_bound = level > options.min_level
                        ? std::max(std::abs(r.value - previous), rounding_floor(r.value))
                        : std::abs(r.value);
    if (level > options.min_level && r.error_bound <= rel_tol * std::abs(r.value)) break;
    previous = r.value;
  }
  check_tolerance("normalization_constant", r, rel_tol);
  return {{r.value, pi_power_of(measure, variant)}, r.error_bound};
}

QuadratureResult family_ratio_estimate(Measure measure, Ensemble variant, std::span<const int> pattern,
                                       unsigned k, double rel_tol, const QuadratureOptions& options) {
  const int d = dimension(variant);
  if (static_cast<int>(pattern.size()) != d) throw DimensionMismatch("family_ratio_estimate: pattern length");
  int total = 0;
  std::vector<unsigned> e;
  for (int c : pattern) {
    const int x = static_cast<int>(k) + c;
    if (x < 0) throw std::invalid_argument("family_ratio_estimate: negative exponent");
    e.push_back(static_cast<unsigned>(x));
    total += c;
  }
  if (total % d != 0 || static_cast<int>(k) * d + total < 0) {
    throw std::invalid_argument("family_ratio_estimate: pattern sum must be a multiple of the dimension");
  }
  const unsigned shifted = static_cast<unsigned>(static_cast<int>(k) + total / d);
  const double denom = measure == Measure::bures ? bures_det_moment(shifted, variant).to_double()
                                                 : hs_det_moment(shifted, dyson_alpha(variant)).to_double();
  QuadratureResult r = monomial_expectation(e, eigen_density_spec(measure, variant), rel_tol,
                                            EigenConvention::symmetric, options);
  r.value /= denom;
  r.error_bound /= denom;
  return r;
}

std::vector<int> missing_family_pattern(MissingRebitFamily family) {
  switch (family) {
    case MissingRebitFamily::l1p5_l2p3: return {5, 3, 0, 0};
    case MissingRebitFamily::l1p6_l2p2: return {6, 2, 0, 0};
    case MissingRebitFamily::l1p7_l2: return {7, 1, 0, 0};
    case MissingRebitFamily::l1p8: break;
  }
  return {8, 0, 0, 0};
}

std::string to_string(MissingRebitFamily family) {
  switch (family) {
    case MissingRebitFamily::l1p5_l2p3: return "5,3,0,0";
    case MissingRebitFamily::l1p6_l2p2: return "6,2,0,0";
    case MissingRebitFamily::l1p7_l2: return "7,1,0,0";
    case MissingRebitFamily::l1p8: break;
  }
  return "8,0,0,0";
}

MissingRebitFamily parse_missing_family(const std::string& s) {
  for (auto f : {MissingRebitFamily::l1p5_l2p3, MissingRebitFamily::l1p6_l2p2, MissingRebitFamily::l1p7_l2,
                 MissingRebitFamily::l1p8}) {
    if (to_string(f) == s) return f;
  }
  throw UnknownFamily("unknown missing family '" + s + "' (expected 5,3,0,0 6,2,0,0 7,1,0,0 or 8,0,0,0)");
}

QuadratureResult missing_rebit_family_estimate(MissingRebitFamily family, unsigned k, double rel_tol,
                                               const QuadratureOptions& options) {
  if (k > 3) throw std::invalid_argument("missing_rebit_family_estimate: k must be at most 3");
  const auto pattern = missing_family_pattern(family);
  return family_ratio_estimate(Measure::bures, Ensemble::two_rebit, pattern, k, rel_tol, options);
}

}  // namespace detmom
