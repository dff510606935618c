#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cyclation/pairing.hpp"
#include "cyclation/sample.hpp"
#include "cyclation/stats.hpp"

namespace {

using namespace cyclation;

Pairing make(std::vector<uint32_t> partner) {
  Pairing p;
  p.partner = std::move(partner);
  return p;
}

TEST(Pairing, ValidateAcceptsAndRejects) {
  EXPECT_NO_THROW(validate(make({1, 0})));
  EXPECT_NO_THROW(validate(make({3, 2, 1, 0})));
  EXPECT_THROW(validate(make({0, 1})), structure_error);        // fixed points
  EXPECT_THROW(validate(make({1, 0, 3})), structure_error);     // odd length
  EXPECT_THROW(validate(make({2, 0, 1, 3})), structure_error);  // not an involution
  EXPECT_THROW(validate(make({4, 0, 1, 2})), structure_error);  // out of range
}

TEST(Pairing, CycleExtractionHandTraces) {
  EXPECT_EQ(cycle_lengths(make({1, 0})), (std::vector<unsigned>{1}));
  // {0-3, 1-2} chains the two intervals into one 2-cycle
  EXPECT_EQ(cycle_lengths(make({3, 2, 1, 0})), (std::vector<unsigned>{2}));
  // {0-1, 2-3} closes each interval on itself
  EXPECT_EQ(cycle_lengths(make({1, 0, 3, 2})), (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(cycle_lengths(make({2, 3, 0, 1})), (std::vector<unsigned>{2}));
}

TEST(Pairing, LineFormatRoundTrip) {
  Pairing p = make({3, 2, 1, 0});
  EXPECT_EQ(to_line(p), "2 3 2 1 0");
  Pairing q = from_line(to_line(p));
  EXPECT_EQ(q.partner, p.partner);
  EXPECT_THROW(from_line("2 3 2 1"), structure_error);      // truncated
  EXPECT_THROW(from_line("2 3 2 1 0 9"), structure_error);  // trailing value
  EXPECT_THROW(from_line("1 0 1"), structure_error);        // fixed point
}

TEST(Sampling, AllEnginesProduceValidWeight) {
  Rng rng(2026, 0);
  for (unsigned n : {1u, 2u, 3u, 7u, 64u}) {
    for (int rep = 0; rep < 25; ++rep) {
      Pairing p = sample_pairing(n, rng);
      validate(p);
      auto lens = cycle_lengths(p);
      unsigned total = 0;
      for (unsigned l : lens) total += l;
      EXPECT_EQ(total, n);
      auto jump = sample_cycle_lengths(n, rng);
      auto step = sample_cycle_lengths_stepping(n, rng);
      auto perm = sample_perm_cycle_lengths(n, rng);
      auto sum = [](const std::vector<unsigned>& v) {
        unsigned s = 0;
        for (unsigned l : v) s += l;
        return s;
      };
      EXPECT_EQ(sum(jump), n);
      EXPECT_EQ(sum(step), n);
      EXPECT_EQ(sum(perm), n);
    }
  }
}

TEST(Sampling, TwoIntervalJoinProbability) {
  // 2 of the 3 pairings at n=2 form a single 2-cycle.
  Rng rng(101, 0);
  const int reps = 30000;
  int joined = 0;
  for (int i = 0; i < reps; ++i) {
    if (cycle_lengths(sample_pairing(2, rng)).size() == 1) ++joined;
  }
  double p = static_cast<double>(joined) / reps;
  double se = std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / reps);
  EXPECT_NEAR(p, 2.0 / 3.0, 3.0 * se);
}

TEST(Sampling, InsertFromOneInterval) {
  // Insertion into the unique n=1 pairing matches the exact n=2 law:
  // one 2-cycle with probability 2/3.
  Rng rng(55, 0);
  const int reps = 30000;
  int joined = 0;
  for (int i = 0; i < reps; ++i) {
    Pairing p = make({1, 0});
    insert_interval(p, rng);
    validate(p);
    if (cycle_lengths(p).size() == 1) ++joined;
  }
  double freq = static_cast<double>(joined) / reps;
  double se = std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / reps);
  EXPECT_NEAR(freq, 2.0 / 3.0, 3.0 * se);
}

TEST(Sampling, DeleteHandCases) {
  // Deleting either interval of the single 2-cycle leaves the unique n=1 pairing.
  for (unsigned idx : {0u, 1u}) {
    Pairing p = make({2, 3, 0, 1});
    delete_interval(p, idx);
    EXPECT_EQ(p.partner, (std::vector<uint32_t>{1, 0}));
  }
  // Deleting a 1-cycle leaves the rest untouched.
  Pairing q = make({1, 0, 3, 2});
  delete_interval(q, 0);
  EXPECT_EQ(q.partner, (std::vector<uint32_t>{1, 0}));
  EXPECT_THROW(delete_interval(q, 5), structure_error);
}

TEST(Sampling, InsertThenDeleteIsIdentity) {
  Rng rng(808, 0);
  for (int rep = 0; rep < 300; ++rep) {
    Pairing p = sample_pairing(5, rng);
    Pairing grown = p;
    insert_interval(grown, rng);
    validate(grown);
    delete_interval(grown, 5);
    EXPECT_EQ(grown.partner, p.partner);
  }
}

TEST(Sampling, InsertNeverShrinksLongestCycle) {
  Rng rng(909, 0);
  for (int rep = 0; rep < 500; ++rep) {
    Pairing p = sample_pairing(8, rng);
    auto pl = cycle_lengths(p);
    unsigned before = *std::max_element(pl.begin(), pl.end());
    insert_interval(p, rng);
    auto gl = cycle_lengths(p);
    unsigned after = *std::max_element(gl.begin(), gl.end());
    EXPECT_GE(after, before);
  }
}

TEST(Stats, WelfordMatchesTwoPass) {
  std::vector<double> xs = {1.5, -2.0, 0.25, 8.0, 3.5, 3.5, -1.0};
  Welford w;
  for (double x : xs) w.add(x);
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= xs.size() - 1;
  EXPECT_NEAR(w.mean(), mean, 1e-12);
  EXPECT_NEAR(w.variance(), var, 1e-12);
}

TEST(Stats, MergeEqualsSinglePass) {
  std::vector<double> xs;
  Rng rng(3, 0);
  for (int i = 0; i < 1000; ++i) xs.push_back(rng.next_real());
  Welford whole, left, right;
  for (size_t i = 0; i < xs.size(); ++i) (i < 400 ? left : right).add(xs[i]);
  for (double x : xs) whole.add(x);
  left.merge(right);
  EXPECT_EQ(left.count(), whole.count());
  EXPECT_NEAR(left.mean(), whole.mean(), 1e-13);
  EXPECT_NEAR(left.variance(), whole.variance(), 1e-12);
}

TEST(Stats, SmallCounts) {
  Welford w;
  EXPECT_EQ(w.variance(), 0.0);
  w.add(5.0);
  EXPECT_EQ(w.mean(), 5.0);
  EXPECT_EQ(w.variance(), 0.0);
  EXPECT_EQ(w.std_error(), 0.0);
}

TEST(Stats, BatchDeterministicAndExactAtWeightOne) {
  BatchOptions opt;
  opt.workers = 3;
  SummaryStats a = batch_stats(1, 500, 9, Mode::kCyclation, opt);
  EXPECT_EQ(a.cycles.mean(), 1.0);
  EXPECT_EQ(a.longest.mean(), 1.0);
  EXPECT_EQ(a.shortest.mean(), 1.0);
  EXPECT_EQ(a.longest.variance(), 0.0);

  SummaryStats b = batch_stats(40, 2000, 17, Mode::kCyclation, opt);
  SummaryStats c = batch_stats(40, 2000, 17, Mode::kCyclation, opt);
  EXPECT_EQ(b.longest.mean(), c.longest.mean());
  EXPECT_EQ(b.shortest.variance(), c.shortest.variance());
  EXPECT_EQ(b.cycles.count(), 2000u);
}

TEST(Stats, HistogramMassesSumToReps) {
  BatchOptions opt;
  opt.workers = 2;
  opt.with_histograms = true;
  SummaryStats s = batch_stats(12, 4000, 31, Mode::kCyclation, opt);
  uint64_t lm = 0, sm = 0;
  for (auto& [v, c] : s.hist_longest) lm += c;
  for (auto& [v, c] : s.hist_shortest) sm += c;
  EXPECT_EQ(lm, 4000u);
  EXPECT_EQ(sm, 4000u);
}

TEST(Stats, RejectsDegenerateArguments) {
  EXPECT_THROW(batch_stats(0, 10, 1, Mode::kCyclation, {}), structure_error);
  EXPECT_THROW(batch_stats(5, 0, 1, Mode::kCyclation, {}), structure_error);
}

}  // namespace
