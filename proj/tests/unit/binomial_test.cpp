#include <gtest/gtest.h>

#include <random>

#include "polyspace/binomial.hpp"

using namespace polyspace;

TEST(BinomInt, Examples) {
  EXPECT_EQ(binom_int(3, 2), 3);
  EXPECT_EQ(binom_int(-1, 2), 1);
  EXPECT_EQ(binom_int(0, 1), 0);
  EXPECT_EQ(binom_int(-5, 3), -35);
  EXPECT_EQ(binom_int(2, 5), 0);
  EXPECT_EQ(binom_int(100, 50), BigInt("100891344545564193334812497256"));
  EXPECT_THROW(binom_int(3, -1), std::invalid_argument);
}

TEST(BinomInt, PascalRule) {
  for (std::int64_t m = -30; m <= 30; ++m) {
    for (std::int64_t k = 1; k <= 30; ++k) {
      EXPECT_EQ(binom_int(m, k), binom_int(m - 1, k) + binom_int(m - 1, k - 1)) << m << "," << k;
    }
  }
}

TEST(BinomMod2, Examples) {
  EXPECT_FALSE(binom_mod2(5, 2));
  EXPECT_TRUE(binom_mod2(-5, 3));
  for (std::int64_t m = -50; m <= 50; ++m) EXPECT_TRUE(binom_mod2(m, 0));
  EXPECT_FALSE(binom_mod2(3, 7));
}

TEST(BinomMod2, AgreesWithExactParityOnRandomPairs) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto m = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto k = static_cast<std::int64_t>(rng() % 101);
    const BigInt exact = binom_int(m, k);
    EXPECT_EQ(binom_mod2(m, k), mpz_odd_p(exact.get_mpz_t()) != 0) << m << "," << k;
  }
}
