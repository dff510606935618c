#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "cyclation/big.hpp"
#include "cyclation/counting.hpp"
#include "cyclation/oracle.hpp"

namespace {

using namespace cyclation;

TEST(Oracle, TwoIntervalCensus) {
  auto counts = brute_force_enumerate(2);
  ASSERT_EQ(counts.size(), 2u);
  EXPECT_EQ(counts[CycleType({2})], 1u);     // two 1-cycles
  EXPECT_EQ(counts[CycleType({0, 1})], 2u);  // one 2-cycle
}

TEST(Oracle, ThreeIntervalCensus) {
  auto counts = brute_force_enumerate(3);
  ASSERT_EQ(counts.size(), 3u);
  EXPECT_EQ(counts[CycleType({3})], 1u);
  EXPECT_EQ(counts[CycleType({1, 1})], 6u);
  EXPECT_EQ(counts[CycleType({0, 0, 1})], 8u);
}

TEST(Oracle, VisitsEachPairingOnceAndValid) {
  std::set<std::vector<uint32_t>> seen;
  uint64_t visits = 0;
  for_each_pairing(4, [&](const Pairing& p) {
    validate(p);
    seen.insert(p.partner);
    ++visits;
  });
  EXPECT_EQ(visits, 105u);  // 7!! fixed-point-free involutions on 8 points
  EXPECT_EQ(seen.size(), 105u);
}

TEST(Oracle, ClassSizesMatchFormulaExhaustively) {
  for (unsigned n = 1; n <= 6; ++n) {
    auto counts = brute_force_enumerate(n);
    BigCount total = 0;
    for (const auto& [type, cnt] : counts) {
      EXPECT_EQ(BigCount(cnt), cyc_class_size_checked(type, n)) << type.str();
      total += cnt;
    }
    EXPECT_EQ(total, odd_double_factorial(n));
  }
  // p(5) = 7 distinct cycle types at weight 5, 945 pairings overall.
  EXPECT_EQ(brute_force_enumerate(5).size(), 7u);
}

TEST(Oracle, EnumerationCap) {
  EXPECT_THROW(for_each_pairing(8, [](const Pairing&) {}), resource_error);
}

}  // namespace
