#include "detmom/fitseq.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "detmom/errors.hpp"

namespace detmom {

namespace {

using Row = std::vector<mpz_class>;

// Bareiss elimination to row echelon form in place; returns pivot columns.
std::vector<std::size_t> bareiss(std::vector<Row>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

RationalFunction fit_rational_function(std::span<const SequencePoint> points, unsigned deg_num, unsigned deg_den) {
  const std::size_t fit_count = deg_num + deg_den + 1;
  if (points.size() < fit_count + 1) {
    throw std::invalid_argument("fit_rational_function: need at least deg_num + deg_den + 2 points");
  }
  // unknowns p_0..p_dn, q_0..q_dd; each row scaled by the value's denominator
  const std::size_t cols = deg_num + deg_den + 2;
  std::vector<Row> m;
  for (std::size_t r = 0; r < fit_count; ++r) {
    const mpz_class k = points[r].k;
    const mpz_class vn = points[r].value.numerator();
    const mpz_class vd = points[r].value.denominator();
    Row row(cols);
    mpz_class kp = 1;
    for (unsigned i = 0; i <= std::max(deg_num, deg_den); ++i) {
      if (i <= deg_num) row[i] = -vd * kp;
      if (i <= deg_den) row[deg_num + 1 + i] = vn * kp;
      kp *= k;
    }
    m.push_back(std::move(row));
  }
  const auto pivots = bareiss(m);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::optional<RationalFunction> found;
  for (std::size_t free = 0; free < cols && !found; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t i = pivots.size(); i-- > 0;) {
      Rational s(0);
      for (std::size_t j = pivots[i] + 1; j < cols; ++j) {
        if (!x[j].is_zero()) s += Rational(m[i][j]) * x[j];
      }
      x[pivots[i]] = -s / Rational(m[i][pivots[i]]);
    }
    Polynomial p(std::vector<Rational>(x.begin(), x.begin() + deg_num + 1));
    Polynomial q(std::vector<Rational>(x.begin() + deg_num + 1, x.end()));
    if (q.is_zero()) continue;
    const RationalFunction f(std::move(p), std::move(q));
    bool fits = true;
    for (std::size_t r = 0; r < fit_count && fits; ++r) {
      try {
        fits = f(Rational(points[r].k)) == points[r].value;
      } catch (const DegenerateDenominator&) {
        fits = false;
      }
    }
    if (fits) found = f;
  }
  if (!found) throw NoSolution("fit_rational_function: no rational function of these degrees fits the points");

  for (std::size_t r = fit_count; r < points.size(); ++r) {
    bool ok;
    try {
      ok = (*found)(Rational(points[r].k)) == points[r].value;
    } catch (const DegenerateDenominator&) {
      ok = false;
    }
    if (!ok) {
      throw HoldoutMismatch("fit_rational_function: held-out point k = " + std::to_string(points[r].k) +
                            " disagrees with " + found->str());
    }
  }
  return *found;
}

ParsedPoints parse_points_csv(std::istream& is) {
  ParsedPoints out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 3) throw std::invalid_argument("points csv line " + std::to_string(line_no) + ": expected k,numerator,denominator");
    try {
      const long k = std::stol(fields[0]);
      const Rational num = Rational::parse(fields[1]);
      const Rational den = Rational::parse(fields[2]);
      if (den.is_zero()) {
        out.warnings.push_back("skipping k = " + std::to_string(k) + ": zero denominator");
        continue;
      }
      out.points.push_back({k, num / den});
    } catch (const std::invalid_argument&) {
      if (line_no == 1 && out.points.empty()) continue;  // header
      throw std::invalid_argument("points csv line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
  }
  return out;
}

}  // namespace detmom
