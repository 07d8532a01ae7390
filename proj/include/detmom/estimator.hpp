#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "detmom/compensated.hpp"
#include "detmom/ensemble.hpp"
#include "detmom/rational.hpp"
#include "detmom/sampler.hpp"

namespace detmom {

/// Streaming power sums of |rho^PT|^n |rho|^k for 0 <= n <= max_n, 0 <= k <= max_k.
class MomentAccumulator {
 public:
  MomentAccumulator(unsigned max_n, unsigned max_k);

  unsigned max_n() const { return max_n_; }
  unsigned max_k() const { return max_k_; }
  std::uint64_t count() const { return count_; }

  /// Adds one sample given its two determinants.
  void add(long double det_pt, long double det);

  const CompensatedSum& sum(unsigned n, unsigned k) const { return sums_[index(n, k)]; }
  const CompensatedSum& sum_sq(unsigned n, unsigned k) const { return sums_sq_[index(n, k)]; }

  /// Throws ShapeMismatch for different grids.
  MomentAccumulator& merge(const MomentAccumulator& other);

 private:
  std::size_t index(unsigned n, unsigned k) const { return std::size_t{n} * (max_k_ + 1) + k; }

  unsigned max_n_;
  unsigned max_k_;
  std::uint64_t count_ = 0;
  std::vector<CompensatedSum> sums_;
  std::vector<CompensatedSum> sums_sq_;
  std::vector<long double> pow_pt_;
  std::vector<long double> pow_det_;
};

MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b);

/// Adds a sampled 4x4 state; both determinants use the extended path.
template <typename Scalar>
void accumulate(MomentAccumulator& acc, const DensityMatrix<Scalar, 4>& state) {
  acc.add(determinant(partial_transpose<Scalar>(state.rho), Precision::extended),
          determinant(state.rho, Precision::extended));
}

struct Estimate {
  long double mean = 0;
  long double standard_error = 0;
};

/// Grid of (mean, standard error), n-major. Throws InsufficientData if count < 2.
class EstimateGrid {
 public:
  EstimateGrid(unsigned max_n, unsigned max_k, std::uint64_t count, std::vector<Estimate> cells)
      : max_n_(max_n), max_k_(max_k), count_(count), cells_(std::move(cells)) {}
  const Estimate& operator()(unsigned n, unsigned k) const { return cells_[std::size_t{n} * (max_k_ + 1) + k]; }
  unsigned max_n() const { return max_n_; }
  unsigned max_k() const { return max_k_; }
  std::uint64_t count() const { return count_; }

 private:
  unsigned max_n_;
  unsigned max_k_;
  std::uint64_t count_;
  std::vector<Estimate> cells_;
};

EstimateGrid estimates(const MomentAccumulator& acc);

/// What the grid's first index means.
enum class GridMode {
  bivariate,  // (n, k) -> |rho^PT|^n |rho|^k
  balanced,   // (n, 0) -> (|rho^PT| |rho|)^n
};

/// Exact comparison value for cell (n, k); nullopt when unknown.
using ExactProvider = std::function<std::optional<Rational>(unsigned n, unsigned k)>;

struct RatioRow {
  unsigned n = 0;
  unsigned k = 0;
  long double mc = 0;
  long double se = 0;
  std::optional<Rational> exact;
  std::optional<long double> ratio;  // empty when exact is unknown or zero
};

std::vector<RatioRow> ratio_table(const EstimateGrid& grid, const ExactProvider& exact, GridMode mode);

/// Labels repeated on each CSV row.
struct RatioTableLabels {
  std::string measure;
  std::string variant;
  std::string alpha;
  std::uint64_t count = 0;
};

/// CSV with header `n,k,mc,exact,ratio,se,count,measure,variant,alpha`, preceded by
/// '#' metadata lines.
void write_ratio_csv(std::ostream& os, const std::vector<RatioRow>& rows, const RatioTableLabels& labels,
                     const std::vector<std::string>& metadata);

// ---------------------------------------------------------------------------
// Parallel Monte Carlo driver.

struct MonteCarloConfig {
  Measure measure = Measure::hilbert_schmidt;
  Ensemble variant = Ensemble::two_qubit;
  GridMode mode = GridMode::bivariate;
  unsigned max_n = 24;
  unsigned max_k = 24;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  // Samples per stream; chunk c uses stream id c, so results do not depend on
  // the number of workers.
  std::uint64_t chunk_size = 1 << 14;
  std::ostream* dump = nullptr;  // raw draws; forces single-threaded execution
};

struct DeterminantRange {
  long double min_pt = 0;
  long double max_pt = 0;
  long double min_balanced = 0;
  long double max_balanced = 0;
  std::uint64_t violations = 0;  // samples outside the known ranges (+-1e-12)
};

struct MonteCarloResult {
  MomentAccumulator accumulator;
  DeterminantRange range;
};

MonteCarloResult run_monte_carlo(const MonteCarloConfig& config);

/// Worker count from DETMOM_THREADS, else hardware concurrency (at least 1).
unsigned default_worker_count();

}  // namespace detmom
