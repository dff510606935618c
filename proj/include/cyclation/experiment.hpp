#pragma once

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclation/constants.hpp"
#include "cyclation/exact_dist.hpp"
#include "cyclation/stats.hpp"
#include "cyclation/zmodel.hpp"

namespace cyclation {

// Shortest round-trip decimal form, so emitted CSV/JSON is byte-stable
// across runs and platforms with the same libc++/libstdc++.
inline std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline const Constants& cached_constants() {
  static const Constants c = compute_constants();
  return c;
}

// One grid point of a convergence study.  All values are normalized:
// mean and se are of M_n/n (longest) or T_n/sqrt(n) (shortest), exact is
// the normalized exact expectation when n is within the partition cap, and
// ratio = mean/asymptote.
struct ConvergePoint {
  uint64_t n = 0;
  uint64_t reps = 0;
  double mean = 0.0;
  double se = 0.0;
  bool has_exact = false;  // false marks the record asymptote-only
  double exact = 0.0;
  double asymptote = 0.0;
  double ratio = 0.0;
  std::array<double, 3> emp_pr{};  // shortest only: empirical Pr[T_n = l], l = 1..3
};

struct ConvergeResult {
  Extreme which = Extreme::kLongest;
  uint64_t reps = 0;
  uint64_t seed = 0;
  unsigned workers = 1;
  unsigned cap = kDefaultPartitionCap;
  double asymptote = 0.0;
  std::vector<ConvergePoint> points;
  // Candidate limiting values of Pr[T = l] for l = 1..3: the printed form
  // e^{-H_l/2} - e^{-H_{l+1}/2} and the t-series form with t_l -> H_{l-1}/2.
  // Both are conjectural comparisons, not verified claims.
  std::array<double, 3> conj_printed{};
  std::array<double, 3> conj_tseries{};
  double wall_ms = 0.0;
};

inline ConvergeResult converge(Extreme which, const std::vector<uint64_t>& grid,
                               uint64_t reps, uint64_t seed, unsigned workers,
                               unsigned cap = kDefaultPartitionCap) {
  if (grid.empty()) throw structure_error("converge: empty grid");
  for (size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw structure_error("converge: grid must be ascending");
  }
  auto t0 = std::chrono::steady_clock::now();

  ConvergeResult out;
  out.which = which;
  out.reps = reps;
  out.seed = seed;
  out.workers = workers;
  out.cap = cap;
  const Constants& c = cached_constants();
  out.asymptote = which == Extreme::kLongest ? c.longest_cyc : c.shortest_cyc;
  for (unsigned l = 1; l <= 3; ++l) {
    double hm1 = harmonic_double(l - 1), h = harmonic_double(l), hp1 = harmonic_double(l + 1);
    out.conj_printed[l - 1] = std::exp(-h / 2) - std::exp(-hp1 / 2);
    out.conj_tseries[l - 1] = std::exp(-hm1 / 2) - std::exp(-h / 2);
  }

  uint64_t seed_state = seed;
  for (uint64_t n : grid) {
    uint64_t point_seed = splitmix64_next(seed_state);
    BatchOptions opt;
    opt.workers = workers;
    opt.with_histograms = which == Extreme::kShortest;
    SummaryStats s = batch_stats(static_cast<unsigned>(n), reps, point_seed,
                                 Mode::kCyclation, opt);
    const Welford& w = which == Extreme::kLongest ? s.longest : s.shortest;
    double norm = which == Extreme::kLongest ? static_cast<double>(n)
                                             : std::sqrt(static_cast<double>(n));
    ConvergePoint p;
    p.n = n;
    p.reps = reps;
    p.mean = w.mean() / norm;
    p.se = w.std_error() / norm;
    p.asymptote = out.asymptote;
    p.ratio = p.mean / p.asymptote;
    if (n <= cap) {
      ExactDistributions d = exact_distributions(static_cast<unsigned>(n), cap);
      p.has_exact = true;
      p.exact = to_double(which == Extreme::kLongest ? d.ex_m : d.ex_t) / norm;
    }
    if (which == Extreme::kShortest) {
      for (unsigned l = 1; l <= 3; ++l) {
        auto it = s.hist_shortest.find(l);
        uint64_t cnt = it == s.hist_shortest.end() ? 0 : it->second;
        p.emp_pr[l - 1] = static_cast<double>(cnt) / static_cast<double>(reps);
      }
    }
    out.points.push_back(p);
  }

  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return out;
}

// The ratio column must climb toward 1 across the grid, allowing per-step
// slack of `sigmas` combined standard errors.
inline bool monotone_trend(const ConvergeResult& r, double sigmas = 3.0) {
  for (size_t i = 1; i < r.points.size(); ++i) {
    double slack = sigmas * (r.points[i].se + r.points[i - 1].se) / r.asymptote;
    if (r.points[i].ratio < r.points[i - 1].ratio - slack) return false;
  }
  return true;
}

}  // namespace cyclation
