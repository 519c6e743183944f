#include <gtest/gtest.h>

#include "polyspace/binomial.hpp"
#include "polyspace/identities.hpp"

using namespace polyspace;

TEST(IdentityCheck, Examples) {
  const auto thm = evaluate_identity(Identity::Combthm, {3, 2, 2});
  EXPECT_EQ(thm.lhs, 7);
  EXPECT_EQ(thm.rhs, 7);
  EXPECT_TRUE(thm.holds);
  EXPECT_EQ(comblem_sum(5, 4), 1);
  EXPECT_TRUE(identity_check(Identity::Combcor2, {5, 4, 0}));
  const auto cor = evaluate_identity(Identity::Combcor, {4, 2, 0});
  EXPECT_EQ(cor.lhs, 4);
  EXPECT_EQ(cor.rhs, 10);
  EXPECT_TRUE(cor.holds);
}

TEST(IdentityCheck, Preconditions) {
  EXPECT_THROW(identity_check(Identity::Comblem, {3, -1, 0}), std::invalid_argument);
  EXPECT_THROW(identity_check(Identity::Combthm, {0, 5, 2}), std::invalid_argument);
  EXPECT_THROW(identity_check(Identity::Combcor, {2, 3, 0}), std::invalid_argument);
}

TEST(IdentityNames, RoundTrip) {
  for (auto id : {Identity::Comblem, Identity::Combcor2, Identity::Combthm, Identity::Combcor}) {
    EXPECT_EQ(parse_identity(identity_name(id)), id);
  }
  EXPECT_FALSE(parse_identity("nope").has_value());
}

TEST(Grids, AllPass) {
  const auto comblem = check_comblem_grid(20, 20);
  EXPECT_TRUE(comblem.ok());
  EXPECT_EQ(comblem.checked, 2U * 41U * 21U);
  EXPECT_TRUE(check_combthm_grid(10, 12, 10).ok());
  const auto combcor = check_combcor_grid(24);
  EXPECT_TRUE(combcor.ok());
  EXPECT_EQ(combcor.checked, 25U * 26U / 2U);
  EXPECT_TRUE(check_wz_grid(20, 20).ok());
}

TEST(Wz, BoundaryAndRecurrence) {
  for (std::int64_t m = -10; m <= 10; ++m) {
    for (std::int64_t k = 0; k <= 10; ++k) {
      if (k - m + 1 != 0) EXPECT_EQ(wz_certificate(m, k, 0), 0);
    }
  }
  const auto c = wz_certificate_check(7, 3);
  EXPECT_FALSE(c.degenerate);
  EXPECT_TRUE(c.recurrence);
  for (std::int64_t i = 0; i < 3; ++i) {
    const Rational lhs = Rational(5 * (3 - 7 + 1)) * (wz_term(7, 3, i) - wz_term(7, 5, i));
    EXPECT_EQ(lhs, wz_certificate(7, 3, i + 1) - wz_certificate(7, 3, i));
  }
}

TEST(Wz, DegenerateCaseValues) {
  // k - m + 1 = 0: exact evaluation gives 0 for odd k and 1 for even k.
  const auto odd = wz_certificate_check(4, 3);
  EXPECT_TRUE(odd.degenerate);
  EXPECT_TRUE(odd.ok());
  EXPECT_EQ(comblem_sum(4, 3), 0);
  EXPECT_EQ(comblem_sum(4, 5), 0);
  EXPECT_EQ(comblem_sum(5, 4), 1);
  EXPECT_TRUE(wz_certificate_check(5, 4).ok());
}

TEST(Combcor, IsTheWuCoefficientIdentity) {
  for (std::int64_t m = 0; m <= 24; ++m) {
    for (std::int64_t k = 0; k <= m; ++k) {
      BigInt sum = 0;
      for (std::int64_t i = 0; i <= k; ++i) sum += binom_int(m - i, i) * binom_int(i, k - i);
      EXPECT_EQ(mpz_odd_p(sum.get_mpz_t()) != 0, binom_mod2(m + 1, k));
    }
  }
}
