#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "cyclation/errors.hpp"
#include "cyclation/rng.hpp"
#include "cyclation/sample.hpp"

namespace cyclation {

// Running mean/variance (Welford); merge is Chan's pairwise update, so a
// batch split across workers reduces to the same result in any grouping,
// merged here in fixed worker order for bit-reproducibility.
class Welford {
 public:
  void add(double x) {
    ++count_;
    double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  void merge(const Welford& o) {
    if (o.count_ == 0) return;
    if (count_ == 0) {
      *this = o;
      return;
    }
    double na = static_cast<double>(count_), nb = static_cast<double>(o.count_);
    double delta = o.mean_ - mean_;
    mean_ += delta * nb / (na + nb);
    m2_ += o.m2_ + delta * delta * na * nb / (na + nb);
    count_ += o.count_;
  }

  uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const {
    return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
  }
  double std_error() const {
    return count_ == 0 ? 0.0
                       : std::sqrt(variance() / static_cast<double>(count_));
  }

 private:
  uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

using Histogram = std::map<uint64_t, uint64_t>;

enum class Mode { kCyclation, kPermutation };

// Which sampler drives the batch.  kJump is the closing-time jump sampler
// (default; O(cycles * log n) per draw), kStepping the one-uniform-per-step
// chain, kPairing the full endpoint pairing with cycle extraction.
enum class Engine { kJump, kStepping, kPairing };

struct SummaryStats {
  uint64_t n = 0;
  uint64_t reps = 0;
  uint64_t seed = 0;
  unsigned workers = 1;
  Mode mode = Mode::kCyclation;
  Welford cycles, longest, shortest;
  bool with_histograms = false;
  Histogram hist_longest, hist_shortest;

  void merge(const SummaryStats& o) {
    cycles.merge(o.cycles);
    longest.merge(o.longest);
    shortest.merge(o.shortest);
    for (auto& [v, c] : o.hist_longest) hist_longest[v] += c;
    for (auto& [v, c] : o.hist_shortest) hist_shortest[v] += c;
  }
};

struct BatchOptions {
  unsigned workers = 1;
  bool with_histograms = false;
  Engine engine = Engine::kJump;
};

namespace detail {

inline void accumulate_draws(unsigned n, uint64_t reps, Rng rng, Mode mode,
                             Engine engine, SummaryStats& out) {
  std::vector<unsigned> lengths;
  for (uint64_t r = 0; r < reps; ++r) {
    if (mode == Mode::kPermutation) {
      lengths = sample_perm_cycle_lengths(n, rng);
    } else if (engine == Engine::kJump) {
      lengths = sample_cycle_lengths(n, rng);
    } else if (engine == Engine::kStepping) {
      lengths = sample_cycle_lengths_stepping(n, rng);
    } else {
      lengths = cycle_lengths(sample_pairing(n, rng));
    }
    unsigned longest = *std::max_element(lengths.begin(), lengths.end());
    unsigned shortest = *std::min_element(lengths.begin(), lengths.end());
    out.cycles.add(static_cast<double>(lengths.size()));
    out.longest.add(longest);
    out.shortest.add(shortest);
    if (out.with_histograms) {
      ++out.hist_longest[longest];
      ++out.hist_shortest[shortest];
    }
  }
}

}  // namespace detail

// Deterministic given (n, reps, seed, workers, engine): worker w draws its
// share from stream w and partial results merge in worker order.
inline SummaryStats batch_stats(unsigned n, uint64_t reps, uint64_t seed,
                                Mode mode, BatchOptions opt = {}) {
  if (n < 1) throw structure_error("batch_stats: n must be >= 1");
  if (reps < 1) throw structure_error("batch_stats: reps must be >= 1");
  unsigned workers = std::max(1u, opt.workers);
  if (workers > reps) workers = static_cast<unsigned>(reps);

  std::vector<SummaryStats> partial(workers);
  for (auto& s : partial) s.with_histograms = opt.with_histograms;

  auto run = [&](unsigned w) {
    uint64_t base = reps / workers;
    uint64_t mine = base + (w < reps % workers ? 1 : 0);
    detail::accumulate_draws(n, mine, Rng(seed, w), mode, opt.engine, partial[w]);
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  SummaryStats total;
  total.n = n;
  total.reps = reps;
  total.seed = seed;
  total.workers = workers;
  total.mode = mode;
  total.with_histograms = opt.with_histograms;
  for (const auto& s : partial) total.merge(s);
  return total;
}

}  // namespace cyclation
