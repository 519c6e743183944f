#include <gtest/gtest.h>

#include "polyspace/rational.hpp"

using namespace polyspace;

TEST(ParseRational, AcceptsIntegersFractionsAndSigns) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational(" -7/14 "), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(BigInt("123456789012345678901234567890")));
}

TEST(ParseRational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1//2", "--1", "1 2"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(ToString, IntegersHaveNoDenominator) {
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}
