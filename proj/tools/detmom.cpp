// detmom: exact and sampled determinantal moments of random density matrices.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "detmom/bures_exact.hpp"
#include "detmom/errors.hpp"
#include "detmom/estimator.hpp"
#include "detmom/fitseq.hpp"
#include "detmom/hs_exact.hpp"
#include "detmom/quadrature.hpp"
#include "detmom/reconstruct.hpp"

namespace {

using namespace detmom;
using json = nlohmann::json;

constexpr const char* kVersion = "0.3.0";

// FNV-1a over the canonical config string.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json metadata(const std::string& command, const json& config, std::uint64_t seed) {
  return {{"tool", "detmom"},
          {"version", kVersion},
          {"command", command},
          {"seed", seed},
          {"config_hash", hex(fnv1a(command + config.dump()))}};
}

std::vector<std::string> metadata_lines(const json& meta, const json& config) {
  return {"tool=detmom version=" + meta["version"].get<std::string>(),
          "seed=" + std::to_string(meta["seed"].get<std::uint64_t>()),
          "config_hash=" + meta["config_hash"].get<std::string>(), "config=" + config.dump()};
}

// Writes to --out or stdout.
void emit(const std::string& out, const std::function<void(std::ostream&)>& write) {
  if (out.empty() || out == "-") {
    write(std::cout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
  write(f);
}

json fraction(const Rational& r) { return {{"exact", r.str()}, {"decimal", r.to_double()}}; }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoi(item));
  return out;
}

// Measure, ensemble and Dyson index shared by several commands.
struct Target {
  std::string measure = "hs";
  std::string variant = "two-qubit";
  std::string alpha;  // HS only; overrides the variant's index

  Measure m() const { return parse_measure(measure); }
  Ensemble v() const { return parse_ensemble(variant); }
  Rational a() const { return alpha.empty() ? dyson_alpha(v()) : Rational::parse(alpha); }

  json describe() const {
    json j{{"measure", to_string(m())}, {"variant", to_string(v())}};
    if (m() == Measure::hilbert_schmidt) j["alpha"] = a().str();
    return j;
  }
};

void add_target(CLI::App* app, Target& t) {
  app->add_option("--measure", t.measure, "hs or bures")->capture_default_str();
  app->add_option("--variant", t.variant, "two-qubit, two-rebit or retrit")->capture_default_str();
  app->add_option("--alpha", t.alpha, "Dyson index for HS (1/2, 1, 2); defaults from the variant");
}

// Exact value of <|rho^PT|^n |rho|^k> where known.
std::optional<Rational> exact_moment(const Target& t, unsigned n, unsigned k) {
  if (t.m() == Measure::hilbert_schmidt) {
    if (t.v() == Ensemble::retrit) return n == 0 ? std::optional(hs_det_moment(k, t.a())) : std::nullopt;
    return hs_bivariate_moment({n, k}, t.a());
  }
  if (n == 0) return bures_det_moment(k, t.v());
  if (t.v() == Ensemble::retrit) return std::nullopt;
  if (n == 1) return bures_pt_det_moment(k, t.v());
  if (n == 2 && k == 0 && t.v() == Ensemble::two_rebit) return bures_pt_squared_moment_rebit();
  return std::nullopt;
}

// ---------------------------------------------------------------------------

struct ExactArgs {
  Target target;
  unsigned n = 0;
  unsigned k = 0;
  unsigned grid = 0;
  std::string monomial;
  std::string out;
};

int cmd_exact(const ExactArgs& a) {
  json config = a.target.describe();
  json result;
  if (!a.monomial.empty()) {
    const auto e = parse_int_list(a.monomial);
    std::vector<unsigned> ue(e.begin(), e.end());
    Rational v;
    if (a.target.m() == Measure::hilbert_schmidt) {
      if (ue.size() != 4) throw std::invalid_argument("--monomial needs four exponents for HS");
      v = hs_monomial_exact({ue[0], ue[1], ue[2], ue[3]}, a.target.a());
    } else {
      v = bures_monomial_constant(a.target.v(), ue);
    }
    config["monomial"] = a.monomial;
    result = fraction(v);
  } else if (a.grid > 0) {
    config["grid"] = a.grid;
    result = json::array();
    for (unsigned n = 0; n <= a.grid; ++n) {
      for (unsigned k = 0; k <= a.grid; ++k) {
        const auto v = exact_moment(a.target, n, k);
        json row{{"n", n}, {"k", k}};
        if (v) row.update(fraction(*v));
        result.push_back(row);
      }
    }
  } else {
    config["n"] = a.n;
    config["k"] = a.k;
    const auto v = exact_moment(a.target, a.n, a.k);
    if (!v) {
      std::cerr << "detmom exact: no closed form for n = " << a.n << ", k = " << a.k << '\n';
      return 2;
    }
    result = fraction(*v);
  }
  json doc{{"meta", metadata("exact", config, 0)}, {"config", config}, {"result", result}};
  emit(a.out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return 0;
}

// ---------------------------------------------------------------------------

struct McArgs {
  Target target;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned grid = 24;
  int max_n = -1;
  int max_k = -1;
  bool balanced = false;
  std::string out;
  std::string summary;
  std::string dump;
};

int cmd_mc(const McArgs& a) {
  if (a.samples < 1000) throw std::invalid_argument("mc: --samples must be at least 1000");
  const Target& t = a.target;
  if (t.m() == Measure::hilbert_schmidt && t.a() != dyson_alpha(t.v())) {
    throw UnsupportedAlpha("mc: HS sampling covers alpha = 1 (two-qubit) and 1/2 (two-rebit) only");
  }
  MonteCarloConfig cfg;
  cfg.measure = t.m();
  cfg.variant = t.v();
  cfg.mode = a.balanced ? GridMode::balanced : GridMode::bivariate;
  cfg.max_n = a.max_n >= 0 ? static_cast<unsigned>(a.max_n) : a.grid;
  cfg.max_k = a.balanced ? 0 : (a.max_k >= 0 ? static_cast<unsigned>(a.max_k) : a.grid);
  if (cfg.variant == Ensemble::retrit) cfg.max_n = 0;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.workers = default_worker_count();

  json config = t.describe();
  config.update({{"samples", cfg.samples},
                 {"max_n", cfg.max_n},
                 {"max_k", cfg.max_k},
                 {"mode", a.balanced ? "balanced" : "bivariate"},
                 {"chunk_size", cfg.chunk_size}});
  const json meta = metadata("mc", config, a.seed);

  std::ofstream dump;
  if (!a.dump.empty()) {
    dump.open(a.dump, std::ios::binary);
    if (!dump) throw std::runtime_error("cannot open '" + a.dump + "'");
    cfg.dump = &dump;
  }
  const auto run = run_monte_carlo(cfg);
  const auto grid = estimates(run.accumulator);
  ExactProvider exact = [&](unsigned n, unsigned k) -> std::optional<Rational> {
    if (a.balanced) {
      if (t.m() == Measure::hilbert_schmidt) return hs_balanced_moment(n, t.a());
      return n == 0 ? std::optional(Rational(1)) : std::nullopt;
    }
    return exact_moment(t, n, k);
  };
  const auto rows = ratio_table(grid, exact, cfg.mode);
  const RatioTableLabels labels{to_string(t.m()), to_string(t.v()),
                                t.m() == Measure::hilbert_schmidt ? t.a().str() : "", grid.count()};
  emit(a.out, [&](std::ostream& os) { write_ratio_csv(os, rows, labels, metadata_lines(meta, config)); });

  json z = json::array();
  for (const auto& r : rows) {
    if (!r.exact || (r.n == 0 && r.k == 0)) continue;
    const long double ex = r.exact->to_long_double();
    json row{{"n", r.n},        {"k", r.k}, {"mc", static_cast<double>(r.mc)}, {"se", static_cast<double>(r.se)},
             {"exact", r.exact->str()}};
    row["z"] = r.se > 0 ? static_cast<double>((r.mc - ex) / r.se) : 0.0;
    if (ex != 0) row["rel_dev"] = static_cast<double>(r.mc / ex - 1);
    z.push_back(row);
  }
  json summary{{"meta", meta},
               {"config", config},
               {"count", grid.count()},
               {"range",
                {{"min_pt", static_cast<double>(run.range.min_pt)},
                 {"max_pt", static_cast<double>(run.range.max_pt)},
                 {"min_balanced", static_cast<double>(run.range.min_balanced)},
                 {"max_balanced", static_cast<double>(run.range.max_balanced)},
                 {"violations", run.range.violations}}},
               {"comparisons", z}};
  if (!a.summary.empty()) {
    emit(a.summary, [&](std::ostream& os) { os << summary.dump(2) << '\n'; });
  } else if (!a.out.empty() && a.out != "-") {
    emit(a.out + ".json", [&](std::ostream& os) { os << summary.dump(2) << '\n'; });
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct QuadArgs {
  Target target{"bures", "two-qubit", ""};
  std::string pattern;
  int k = -1;
  bool normalization = false;
  std::string missing;
  bool sorted = false;
  double rel_tol = 1e-8;
  int max_level = 5;
  std::string out;
};

int cmd_quad(const QuadArgs& a) {
  const Target& t = a.target;
  const QuadratureOptions opt{2, a.max_level};
  json config = t.describe();
  config.update({{"rel_tol", a.rel_tol}, {"max_level", a.max_level}});
  json result;
  if (a.normalization) {
    const auto n = normalization_constant(t.m(), t.v(), a.rel_tol, opt);
    result = {{"kind", "normalization"},
              {"coefficient", n.constant.coefficient},
              {"pi_power", n.constant.pi_power},
              {"value", n.constant.value()},
              {"error_bound", n.error_bound}};
  } else {
    std::vector<int> pattern;
    std::string kind;
    if (!a.missing.empty()) {
      const auto family = parse_missing_family(a.missing);
      pattern = missing_family_pattern(family);
      if (a.k < 0) throw std::invalid_argument("quad: --missing needs --k");
      kind = "missing_family";
    } else {
      if (a.pattern.empty()) throw std::invalid_argument("quad: give --pattern, --missing or --normalization");
      pattern = parse_int_list(a.pattern);
      kind = a.k >= 0 ? "family_ratio" : "monomial";
    }
    QuadratureResult r;
    if (a.k >= 0) {
      r = family_ratio_estimate(t.m(), t.v(), pattern, static_cast<unsigned>(a.k), a.rel_tol, opt);
    } else {
      std::vector<unsigned> e;
      for (int x : pattern) {
        if (x < 0) throw std::invalid_argument("quad: negative exponent without --k");
        e.push_back(static_cast<unsigned>(x));
      }
      r = monomial_expectation(e, eigen_density_spec(t.m(), t.v()), a.rel_tol,
                               a.sorted ? EigenConvention::sorted : EigenConvention::symmetric, opt);
    }
    result = {{"kind", kind},
              {"pattern", pattern},
              {"k", a.k >= 0 ? json(a.k) : json(nullptr)},
              {"measure", to_string(t.m())},
              {"variant", to_string(t.v())},
              {"value", r.value},
              {"error_bound", r.error_bound},
              {"rel_tol", a.rel_tol},
              {"level", r.level},
              {"convention", a.sorted ? "sorted" : "symmetric"}};
  }
  json doc{{"meta", metadata("quad", config, 0)}, {"config", config}, {"result", result}};
  emit(a.out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return 0;
}

// ---------------------------------------------------------------------------

struct FitArgs {
  std::string points;
  std::string family;
  unsigned count = 13;
  unsigned deg_num = 5;
  unsigned deg_den = 5;
  std::string out;
};

// Module-generated sequences for the built-in families.
std::vector<SequencePoint> family_points(const std::string& family, unsigned count) {
  std::vector<SequencePoint> pts;
  if (family == "qubit-explanatory") {
    for (unsigned k = 0; k < count; ++k) {
      pts.push_back({long(k), bures_pt_det_moment(k, Ensemble::two_qubit) / bures_det_moment(k, Ensemble::two_qubit)});
    }
  } else if (family == "rebit-explanatory") {
    for (unsigned k = 1; k <= count; ++k) {
      pts.push_back(
          {long(k), bures_pt_det_moment(k - 1, Ensemble::two_rebit) / bures_det_moment(k, Ensemble::two_rebit)});
    }
  } else if (family == "rebit-earlier") {
    const int pattern[] = {1, 0, 0, -1};
    for (unsigned k = 1; k <= count; ++k) pts.push_back({long(k), bures_monomial_ratio(Ensemble::two_rebit, pattern, k)});
  } else {
    throw std::invalid_argument("fit: unknown --family '" + family +
                                "' (qubit-explanatory, rebit-explanatory, rebit-earlier)");
  }
  return pts;
}

json coeffs(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

int cmd_fit(const FitArgs& a) {
  std::vector<SequencePoint> pts;
  json config{{"deg_num", a.deg_num}, {"deg_den", a.deg_den}};
  if (!a.points.empty()) {
    std::ifstream in(a.points);
    if (!in) throw std::runtime_error("cannot open '" + a.points + "'");
    auto parsed = parse_points_csv(in);
    for (const auto& w : parsed.warnings) std::cerr << "detmom fit: warning: " << w << '\n';
    pts = std::move(parsed.points);
    config["points"] = a.points;
  } else {
    pts = family_points(a.family, a.count);
    config["family"] = a.family;
    config["count"] = a.count;
  }
  const auto f = fit_rational_function(pts, a.deg_num, a.deg_den);
  json doc{{"meta", metadata("fit", config, 0)},
           {"config", config},
           {"num_coeffs", coeffs(f.numerator())},
           {"den_coeffs", coeffs(f.denominator())},
           {"coefficient_order", "ascending powers of k"},
           {"function", f.str()},
           {"points_used", pts.size()}};
  emit(a.out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return 0;
}

// ---------------------------------------------------------------------------

struct SepArgs {
  Target target;
  unsigned order = 128;
  double threshold = 0;
  bool jackson = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string density_out;
  unsigned density_points = 401;
  std::string out;
};

int cmd_sepprob(const SepArgs& a) {
  const Target& t = a.target;
  json config = t.describe();
  config.update({{"order", a.order}, {"threshold", a.threshold}, {"jackson", a.jackson}});
  const EvalOptions opt{a.jackson};
  long double estimate = 0;
  std::function<void(std::ostream&)> dump_density;
  std::string source;
  if (t.m() == Measure::hilbert_schmidt) {
    const auto ms = hs_pt_moment_sequence(t.a(), a.order);
    const auto d = legendre_coefficients(ms, a.order);
    estimate = tail_probability(d, a.threshold, opt);
    dump_density = [=](std::ostream& os) { write_density_csv(os, d, a.density_points, opt); };
    source = "exact";
  } else {
    // Bures: only sampled moments exist beyond n = 1
    if (a.samples == 0) throw std::invalid_argument("sepprob: Bures needs --samples (moments are estimated)");
    MonteCarloConfig cfg;
    cfg.measure = t.m();
    cfg.variant = t.v();
    cfg.max_n = a.order;
    cfg.max_k = 0;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.workers = default_worker_count();
    const auto run = run_monte_carlo(cfg);
    const auto grid = estimates(run.accumulator);
    MomentSequence<long double> ms{-1.0L / 16, 1.0L / 256, {}};
    for (unsigned n = 0; n <= a.order; ++n) ms.values.push_back(grid(n, 0).mean);
    const auto d = legendre_coefficients(ms, a.order);
    estimate = tail_probability(d, a.threshold, opt);
    dump_density = [=](std::ostream& os) { write_density_csv(os, d, a.density_points, opt); };
    source = "monte-carlo";
    config["samples"] = a.samples;
  }
  const json meta = metadata("sepprob", config, a.seed);
  if (!a.density_out.empty()) {
    emit(a.density_out, [&](std::ostream& os) {
      for (const auto& line : metadata_lines(meta, config)) os << "# " << line << '\n';
      dump_density(os);
    });
  }
  json doc{{"meta", meta},
           {"config", config},
           {"estimate", static_cast<double>(estimate)},
           {"order", a.order},
           {"support", {"-1/16", "1/256"}},
           {"moments", source}};
  emit(a.out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_selftest() {
  int failures = 0;
  const auto check = [&](const std::string& name, const Rational& got, const Rational& want) {
    const bool ok = got == want;
    if (!ok) ++failures;
    std::cout << (ok ? "ok   " : "FAIL ") << name << ": " << got << (ok ? "" : " expected " + want.str()) << '\n';
  };
  const Rational one(1), half(1, 2);
  check("hs <|rho^PT|> alpha=1", hs_pt_moment(1, one), Rational(-7, 3876));
  check("hs <|rho^PT|> alpha=1/2", hs_pt_moment(1, half), Rational(-1, 858));
  check("hs balanced n=1 alpha=1/2", hs_balanced_moment(1, half), Rational(0));
  check("hs balanced n=1 alpha=1", hs_balanced_moment(1, one), Rational(-1, 4576264));
  check("hs <|rho|> alpha=1", hs_det_moment(1, one), Rational(1, 3876));
  check("bures qubit <|rho|>", bures_det_moment(1, Ensemble::two_qubit), Rational(1, 16896));
  check("bures qubit <|rho^PT|>", bures_pt_det_moment(0, Ensemble::two_qubit), Rational(-1, 256));
  check("bures rebit <|rho^PT|>", bures_pt_det_moment(0, Ensemble::two_rebit), Rational(-2663, 860160));
  check("bures rebit <|rho^PT|^2>", bures_pt_squared_moment_rebit(), Rational(50654227, 1307993702400));
  check("bures rebit identity", rebit_first_moment_identity(), Rational(-2663, 860160));
  const unsigned four[] = {4, 0, 0, 0};
  check("bures qubit <l1^4>", bures_monomial_constant(Ensemble::two_qubit, four), Rational(1127, 16896));
  std::cout << (failures ? "selftest: FAILED\n" : "selftest: all passed\n");
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal moments of random two-qubit, two-rebit and retrit density matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ExactArgs ea;
  auto* exact = app.add_subcommand("exact", "exact moments <|rho^PT|^n |rho|^k> and monomial constants");
  add_target(exact, ea.target);
  exact->add_option("--n", ea.n, "power of |rho^PT|");
  exact->add_option("--k", ea.k, "power of |rho|");
  exact->add_option("--grid", ea.grid, "tabulate 0 <= n, k <= grid");
  exact->add_option("--monomial", ea.monomial, "eigenvalue exponents, e.g. 4,0,0,0");
  exact->add_option("--out", ea.out, "output path (default stdout)");

  McArgs ma;
  auto* mc = app.add_subcommand("mc", "Monte Carlo moment grid and ratio table (threads: DETMOM_THREADS)");
  add_target(mc, ma.target);
  mc->add_option("--samples", ma.samples)->capture_default_str();
  mc->add_option("--seed", ma.seed)->capture_default_str();
  mc->add_option("--grid", ma.grid, "grid size for n and k")->capture_default_str();
  mc->add_option("--max-n", ma.max_n, "override the n range");
  mc->add_option("--max-k", ma.max_k, "override the k range");
  mc->add_flag("--balanced", ma.balanced, "moments of |rho| |rho^PT| instead of the (n, k) grid");
  mc->add_option("--out", ma.out, "ratio CSV path (default stdout)");
  mc->add_option("--summary", ma.summary, "summary JSON path (default <out>.json)");
  mc->add_option("--dump", ma.dump, "raw draws as binary doubles");

  QuadArgs qa;
  auto* quad = app.add_subcommand("quad", "eigenvalue-simplex quadrature");
  add_target(quad, qa.target);
  quad->add_option("--pattern", qa.pattern, "exponents, or family offsets c_i with --k");
  quad->add_option("--k", qa.k, "family index: <prod l_i^{k+c_i}> / <|rho|^{k+sum(c)/d}>");
  quad->add_flag("--normalization", qa.normalization, "normalization constant");
  quad->add_option("--missing", qa.missing, "rebit family 5,3,0,0 6,2,0,0 7,1,0,0 or 8,0,0,0 (needs --k)");
  quad->add_flag("--sorted", qa.sorted, "assign exponents to sorted eigenvalues");
  quad->add_option("--rel-tol", qa.rel_tol)->capture_default_str();
  quad->add_option("--max-level", qa.max_level)->capture_default_str();
  quad->add_option("--out", qa.out);

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "exact rational-function fit of a sequence");
  auto* points_opt = fit->add_option("--points", fa.points, "CSV of k,numerator,denominator");
  fit->add_option("--family", fa.family, "built-in: qubit-explanatory, rebit-explanatory, rebit-earlier")
      ->excludes(points_opt);
  fit->add_option("--count", fa.count, "points generated for --family")->capture_default_str();
  fit->add_option("--deg-num", fa.deg_num)->capture_default_str();
  fit->add_option("--deg-den", fa.deg_den)->capture_default_str();
  fit->add_option("--out", fa.out);

  SepArgs sa;
  auto* sep = app.add_subcommand("sepprob", "separability probability by Legendre moment inversion");
  add_target(sep, sa.target);
  sep->add_option("--order", sa.order)->capture_default_str();
  sep->add_option("--threshold", sa.threshold)->capture_default_str();
  sep->add_flag("--jackson", sa.jackson, "Jackson damping of the expansion");
  sep->add_option("--samples", sa.samples, "Bures: Monte Carlo samples for the moments");
  sep->add_option("--seed", sa.seed)->capture_default_str();
  sep->add_option("--density-out", sa.density_out, "CSV of (x, f(x))");
  sep->add_option("--grid", sa.density_points, "density grid points")->capture_default_str();
  sep->add_option("--out", sa.out);

  auto* self = app.add_subcommand("selftest", "quick exact checks");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*exact) return cmd_exact(ea);
    if (*mc) return cmd_mc(ma);
    if (*quad) return cmd_quad(qa);
    if (*fit) return cmd_fit(fa);
    if (*sep) return cmd_sepprob(sa);
    if (*self) return cmd_selftest();
  } catch (const ToleranceNotMet& e) {
    std::cerr << "detmom: " << e.what() << " (value " << e.value << ", error bound " << e.error_bound << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "detmom: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "detmom: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
