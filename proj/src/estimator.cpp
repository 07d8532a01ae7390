#include "detmom/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>

#include "detmom/errors.hpp"

namespace detmom {

MomentAccumulator::MomentAccumulator(unsigned max_n, unsigned max_k)
    : max_n_(max_n),
      max_k_(max_k),
      sums_(std::size_t{max_n + 1} * (max_k + 1)),
      sums_sq_(sums_.size()),
      pow_pt_(max_n + 1),
      pow_det_(max_k + 1) {}

void MomentAccumulator::add(long double det_pt, long double det) {
  pow_pt_[0] = 1;
  for (unsigned n = 1; n <= max_n_; ++n) pow_pt_[n] = pow_pt_[n - 1] * det_pt;
  pow_det_[0] = 1;
  for (unsigned k = 1; k <= max_k_; ++k) pow_det_[k] = pow_det_[k - 1] * det;
  std::size_t i = 0;
  for (unsigned n = 0; n <= max_n_; ++n) {
    for (unsigned k = 0; k <= max_k_; ++k, ++i) {
      const long double x = pow_pt_[n] * pow_det_[k];
      sums_[i] += x;
      sums_sq_[i] += x * x;
    }
  }
  ++count_;
}

MomentAccumulator& MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.max_n_ != max_n_ || other.max_k_ != max_k_) {
    throw ShapeMismatch("MomentAccumulator::merge: grids differ");
  }
  for (std::size_t i = 0; i < sums_.size(); ++i) {
    sums_[i] += other.sums_[i];
    sums_sq_[i] += other.sums_sq_[i];
  }
  count_ += other.count_;
  return *this;
}

MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b) {
  MomentAccumulator out = a;
  out.merge(b);
  return out;
}

EstimateGrid estimates(const MomentAccumulator& acc) {
  if (acc.count() < 2) throw InsufficientData("estimates: need at least two samples");
  const auto count = static_cast<long double>(acc.count());
  std::vector<Estimate> cells;
  cells.reserve(std::size_t{acc.max_n() + 1} * (acc.max_k() + 1));
  for (unsigned n = 0; n <= acc.max_n(); ++n) {
    for (unsigned k = 0; k <= acc.max_k(); ++k) {
      const long double mean = acc.sum(n, k).value() / count;
      const long double var = std::max(0.0L, acc.sum_sq(n, k).value() / count - mean * mean);
      cells.push_back({mean, std::sqrt(var / (count - 1))});
    }
  }
  return {acc.max_n(), acc.max_k(), acc.count(), std::move(cells)};
}

std::vector<RatioRow> ratio_table(const EstimateGrid& grid, const ExactProvider& exact, GridMode mode) {
  std::vector<RatioRow> rows;
  for (unsigned n = 0; n <= grid.max_n(); ++n) {
    for (unsigned k = 0; k <= grid.max_k(); ++k) {
      RatioRow row;
      row.n = n;
      row.k = mode == GridMode::balanced ? n : k;
      row.mc = grid(n, k).mean;
      row.se = grid(n, k).standard_error;
      if (exact) row.exact = exact(row.n, row.k);
      if (row.exact && !row.exact->is_zero()) row.ratio = row.mc / row.exact->to_long_double();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string format_ld(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", x);
  return buf;
}

}  // namespace

void write_ratio_csv(std::ostream& os, const std::vector<RatioRow>& rows, const RatioTableLabels& labels,
                     const std::vector<std::string>& metadata) {
  for (const auto& line : metadata) os << "# " << line << '\n';
  os << "n,k,mc,exact,ratio,se,count,measure,variant,alpha\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.k << ',' << format_ld(r.mc) << ',' << (r.exact ? r.exact->str() : "") << ','
       << (r.ratio ? format_ld(*r.ratio) : "") << ',' << format_ld(r.se) << ',' << labels.count << ','
       << labels.measure << ',' << labels.variant << ',' << labels.alpha << '\n';
  }
}

namespace {

constexpr long double kRangeSlack = 1e-12L;

struct ChunkOutput {
  MomentAccumulator acc;
  DeterminantRange range;
};

void note_range(DeterminantRange& r, long double pt, long double det, bool first) {
  const long double bal = pt * det;
  if (first) {
    r.min_pt = r.max_pt = pt;
    r.min_balanced = r.max_balanced = bal;
  } else {
    r.min_pt = std::min(r.min_pt, pt);
    r.max_pt = std::max(r.max_pt, pt);
    r.min_balanced = std::min(r.min_balanced, bal);
    r.max_balanced = std::max(r.max_balanced, bal);
  }
  const bool pt_ok = pt >= -1.0L / 16 - kRangeSlack && pt <= 1.0L / 256 + kRangeSlack;
  const bool bal_ok = bal >= -1.0L / 110592 - kRangeSlack && bal <= 1.0L / 65536 + kRangeSlack;
  if (!pt_ok || !bal_ok) ++r.violations;
}

template <typename Scalar, int Dim>
ChunkOutput run_chunk(const MonteCarloConfig& cfg, std::uint64_t chunk, std::uint64_t count) {
  ChunkOutput out{MomentAccumulator(cfg.max_n, cfg.max_k), {}};
  RandomStream rng(cfg.seed, chunk);
  for (std::uint64_t s = 0; s < count; ++s) {
    const auto state = sample_density<Scalar, Dim>(cfg.measure, rng);
    if (cfg.dump) write_draw<Scalar, Dim>(*cfg.dump, state.rho);
    const long double det = determinant(state.rho, Precision::extended);
    long double pt = 0;
    if constexpr (Dim == 4) {
      pt = determinant(partial_transpose<Scalar>(state.rho), Precision::extended);
      note_range(out.range, pt, det, s == 0);
    }
    if (cfg.mode == GridMode::balanced) {
      out.acc.add(pt * det, 1.0L);
    } else {
      out.acc.add(pt, det);
    }
  }
  return out;
}

}  // namespace

MonteCarloResult run_monte_carlo(const MonteCarloConfig& cfg) {
  if (cfg.variant == Ensemble::retrit && (cfg.max_n > 0 || cfg.mode == GridMode::balanced)) {
    throw std::invalid_argument("run_monte_carlo: retrit states have no partial transpose; use max_n = 0");
  }
  if (cfg.mode == GridMode::balanced && cfg.max_k != 0) {
    throw std::invalid_argument("run_monte_carlo: balanced mode uses max_k = 0");
  }
  if (cfg.chunk_size == 0) throw std::invalid_argument("run_monte_carlo: chunk_size must be positive");

  const std::uint64_t chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<std::optional<ChunkOutput>> outputs(chunks);
  const auto chunk_count = [&](std::uint64_t c) {
    return std::min(cfg.chunk_size, cfg.samples - c * cfg.chunk_size);
  };
  const auto run = [&](std::uint64_t c) {
    outputs[c] = visit_ensemble(cfg.variant, [&]<typename Scalar, int Dim>() {
      return run_chunk<Scalar, Dim>(cfg, c, chunk_count(c));
    });
  };

  const unsigned workers = cfg.dump ? 1u : std::max(1u, cfg.workers);
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run(c);
      });
    }
  }

  MonteCarloResult result{MomentAccumulator(cfg.max_n, cfg.max_k), {}};
  bool first = true;
  for (auto& o : outputs) {
    result.accumulator.merge(o->acc);
    if (cfg.variant == Ensemble::retrit) continue;
    if (first) {
      result.range = o->range;
      first = false;
    } else {
      result.range.min_pt = std::min(result.range.min_pt, o->range.min_pt);
      result.range.max_pt = std::max(result.range.max_pt, o->range.max_pt);
      result.range.min_balanced = std::min(result.range.min_balanced, o->range.min_balanced);
      result.range.max_balanced = std::max(result.range.max_balanced, o->range.max_balanced);
      result.range.violations += o->range.violations;
    }
  }
  return result;
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("DETMOM_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detmom
