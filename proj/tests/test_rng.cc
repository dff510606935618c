#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "cyclation/chi_square.hpp"
#include "cyclation/rng.hpp"
#include "cyclation/stats.hpp"

namespace {

using namespace cyclation;

TEST(Rng, SplitmixKnownVector) {
  // Standard splitmix64 test vector for state 0.
  uint64_t state = 0;
  EXPECT_EQ(splitmix64_next(state), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(splitmix64_next(state), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(splitmix64_next(state), 0x06C45D188009454Full);
}

TEST(Rng, DeterministicPerSeedAndStream) {
  Rng a(42, 0), b(42, 0), c(42, 1), d(7, 0);
  bool stream_differs = false, seed_differs = false;
  for (int i = 0; i < 64; ++i) {
    uint64_t va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    stream_differs |= va != c.next_u64();
    seed_differs |= va != d.next_u64();
  }
  EXPECT_TRUE(stream_differs);
  EXPECT_TRUE(seed_differs);
}

TEST(Rng, DeriveMatchesDirectConstruction) {
  Rng base(99, 0);
  Rng derived = base.derive(3);
  Rng direct(99, 3);
  for (int i = 0; i < 16; ++i) EXPECT_EQ(derived.next_u64(), direct.next_u64());
}

TEST(Rng, NextBelowBoundsAndUniformity) {
  Rng rng(1234, 0);
  const uint64_t bound = 7, reps = 140000;
  std::vector<double> obs(bound, 0.0);
  for (uint64_t i = 0; i < reps; ++i) {
    uint64_t v = rng.next_below(bound);
    ASSERT_LT(v, bound);
    ++obs[v];
  }
  std::vector<double> expected(bound, static_cast<double>(reps) / bound);
  EXPECT_GT(chi_square_test(obs, expected).p_value, 0.001);
}

TEST(Rng, NextRealOpenUnitInterval) {
  Rng rng(5, 0);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 200000; ++i) {
    double u = rng.next_real();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  EXPECT_LT(lo, 1e-4);
  EXPECT_GT(hi, 1.0 - 1e-4);
}

TEST(Rng, PoissonMoments) {
  Rng rng(77, 0);
  const double lambda = 4.2;
  Welford w;
  for (int i = 0; i < 200000; ++i) w.add(static_cast<double>(rng.next_poisson(lambda)));
  EXPECT_NEAR(w.mean(), lambda, 3.0 * w.std_error());
  // Poisson variance equals the mean.
  EXPECT_NEAR(w.variance(), lambda, 0.06);
}

TEST(Rng, IdentityStringNamesTheGenerator) {
  EXPECT_NE(Rng::identity().find("xoshiro256**"), std::string::npos);
}

}  // namespace
