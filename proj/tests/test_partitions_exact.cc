#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "cyclation/exact_dist.hpp"
#include "cyclation/partitions.hpp"

namespace {

using namespace cyclation;

TEST(Partitions, CountsMatchPartitionNumbers) {
  EXPECT_EQ(cycle_types(0).size(), 1u);  // the one empty type
  EXPECT_EQ(cycle_types(1).size(), 1u);
  EXPECT_EQ(cycle_types(3).size(), 3u);
  EXPECT_EQ(cycle_types(5).size(), 7u);
  EXPECT_EQ(cycle_types(10).size(), 42u);
  EXPECT_EQ(cycle_types(20).size(), 627u);
}

TEST(Partitions, DeterministicLargestPartFirstOrder) {
  auto types = cycle_types(5);
  ASSERT_EQ(types.size(), 7u);
  EXPECT_EQ(types.front(), CycleType::from_lengths(std::vector<uint64_t>{5}));
  EXPECT_EQ(types.back(), CycleType::from_lengths(std::vector<uint64_t>{1, 1, 1, 1, 1}));
  for (const CycleType& t : types) EXPECT_EQ(t.weight(), 5u);
}

TEST(Partitions, CapIsEnforced) {
  EXPECT_THROW(for_each_cycle_type(kDefaultPartitionCap + 1, [](const auto&) {}),
               resource_error);
  // explicit override lifts the cap
  size_t count = 0;
  for_each_cycle_type(12, [&](const auto&) { ++count; }, 12);
  EXPECT_EQ(count, 77u);
}

TEST(ExactDist, WeightZeroConventions) {
  ExactDistributions d = exact_distributions(0);
  EXPECT_EQ(d.K.numer.size(), 0u);
  EXPECT_EQ(d.ex_k, BigRational(0));
  EXPECT_EQ(d.ex_m, BigRational(0));
  EXPECT_EQ(d.ex_t, BigRational(0));
}

TEST(ExactDist, WeightOneIsDeterministic) {
  ExactDistributions d = exact_distributions(1);
  EXPECT_EQ(d.K.mass(1), BigRational(1));
  EXPECT_EQ(d.M.mass(1), BigRational(1));
  EXPECT_EQ(d.T.mass(1), BigRational(1));
  EXPECT_EQ(d.ex_m, BigRational(1));
}

TEST(ExactDist, N3Anchors) {
  ExactDistributions d = exact_distributions(3);
  EXPECT_EQ(d.M.mass(3), BigRational(8, 15));
  EXPECT_EQ(d.T.mass(3), BigRational(8, 15));
  EXPECT_EQ(d.K.mass(1), BigRational(8, 15));
  EXPECT_EQ(d.ex_k, BigRational(23, 15));
  EXPECT_EQ(d.ex_m, BigRational(37, 15));
  EXPECT_EQ(d.ex_t, BigRational(31, 15));
  EXPECT_EQ(d.K.total(), BigRational(1));
  EXPECT_EQ(d.M.total(), BigRational(1));
  EXPECT_EQ(d.T.total(), BigRational(1));
}

TEST(ExactDist, N5AnchorsFromIndependentEnumeration) {
  // Frozen values recomputed by hand-rolled partition enumeration in an
  // independent implementation.
  ExactDistributions d = exact_distributions(5);
  EXPECT_EQ(d.ex_m, BigRational(3761, 945));
  EXPECT_EQ(d.ex_t, BigRational(2641, 945));
  EXPECT_EQ(d.ex_k, BigRational(563, 315));
}

TEST(ExactDist, CycleCountHarmonicIdentity) {
  for (unsigned n : {2u, 7u, 25u, 40u}) {
    ExactDistributions d = exact_distributions(n);
    EXPECT_EQ(d.ex_k, harmonic_exact(2 * n) - harmonic_exact(n) / 2) << "n=" << n;
  }
}

TEST(ExactDist, SideConditionSpotValues) {
  // (2n+1) Ex[M_{n+1}] >= (2n+2) Ex[M_n] with equality-tight strong form at n=1.
  ExactDistributions d1 = exact_distributions(1), d2 = exact_distributions(2);
  EXPECT_EQ(d2.ex_m, BigRational(5, 3));
  EXPECT_GE(BigRational(3) * d2.ex_m, BigRational(4) * d1.ex_m);
  EXPECT_EQ(BigRational(3) * d2.ex_m, BigRational(5) * d1.ex_m);  // strong form is tight
  // (2n+2) Ex[T_n] <= (2n+1) Ex[T_{n+1}] at n=2
  ExactDistributions d3 = exact_distributions(3);
  EXPECT_LE(BigRational(6) * d2.ex_t, BigRational(5) * d3.ex_t);
}

TEST(ExactDist, RespectsPartitionCap) {
  EXPECT_THROW(exact_distributions(61, 60), resource_error);
}

}  // namespace
