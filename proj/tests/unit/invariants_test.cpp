#include <gtest/gtest.h>

#include "polyspace/catalog.hpp"
#include "polyspace/cohomology.hpp"
#include "polyspace/invariants.hpp"

using namespace polyspace;

namespace {

GeneticCode code(const char* text) { return parse_code(text); }

}  // namespace

TEST(SwPolynomial, Examples) {
  EXPECT_EQ(sw_polynomial(7), (std::vector<int>{0, 1, 4}));
  EXPECT_EQ(sw_polynomial(6), (std::vector<int>{0}));
  for (int n = 4; n <= 40; ++n) EXPECT_EQ(sw_polynomial(n).front(), 0);
}

TEST(WuCoefficients, Examples) {
  EXPECT_EQ(wu_coefficients(4), (std::vector<bool>{true, true, true}));
  EXPECT_EQ(wu_coefficients(3), (std::vector<bool>{true, false}));
  EXPECT_EQ(wu_coefficients(0), (std::vector<bool>{true}));
}

TEST(Orientable, Examples) {
  EXPECT_TRUE(orientable(code("7:[4321]")));
  EXPECT_FALSE(orientable(code("7:[421|51]")));
  EXPECT_TRUE(orientable(code("8:[6321]")));
  EXPECT_TRUE(orientable(code("8:[1]")));
}

TEST(Cobordism, Examples) {
  const auto two = cobordism_class(code("7:[2]"));
  EXPECT_EQ(two.kind, Cobordism::CobordantToRP);
  EXPECT_EQ(two.rp_dimension, 4);
  EXPECT_FALSE(two.rp_is_boundary);
  EXPECT_EQ(cobordism_class(code("7:[21]")).kind, Cobordism::NullCobordant);
  const auto even = cobordism_class(code("6:[1]"));
  if (even.kind == Cobordism::CobordantToRP) EXPECT_TRUE(even.rp_is_boundary);
}

TEST(EulerAndVectorField, Examples) {
  const auto a = euler_and_vector_field(code("7:[421|51]"));
  EXPECT_EQ(a.euler, 0);
  EXPECT_TRUE(a.has_vector_field);
  const auto b = euler_and_vector_field(code("7:[2]"));
  EXPECT_EQ(b.euler, -1);
  EXPECT_FALSE(b.has_vector_field);
  const auto c = euler_and_vector_field(code("8:[4321]"));
  EXPECT_EQ(c.euler, 0);
  EXPECT_TRUE(c.has_vector_field);
  EXPECT_EQ(c.alternating_subgee_sum, 0);
  EXPECT_EQ(euler_and_vector_field(code("8:[1]")).alternating_subgee_sum, 0);
  EXPECT_EQ(euler_and_vector_field(code("8:[2]")).alternating_subgee_sum, -1);
}

TEST(Immersion, Examples) {
  const auto one = immersion_obstruction(code("7:[1]"));
  ASSERT_TRUE(one.has_value());
  EXPECT_TRUE(one->obstructed);
  EXPECT_EQ(one->euclidean_dimension, 6);
  EXPECT_EQ(one->r_degree, 3);
  const auto two = immersion_obstruction(code("7:[21]"));
  ASSERT_TRUE(two.has_value());
  EXPECT_FALSE(two->obstructed);
  EXPECT_FALSE(immersion_obstruction(code("9:[1]")).has_value());
  const auto eleven = immersion_obstruction(code("11:[1]"));
  ASSERT_TRUE(eleven.has_value());
  EXPECT_EQ(eleven->euclidean_dimension, 14);
  EXPECT_EQ(eleven->r_degree, 7);
}

TEST(Parallelizability, Examples) {
  EXPECT_EQ(parallelizability(code("7:[4321]")), Parallelizable::Yes);
  EXPECT_EQ(parallelizability(code("7:[1]")), Parallelizable::No);
  EXPECT_EQ(parallelizability(code("6:[1]")), Parallelizable::Yes);
  EXPECT_EQ(parallelizability(code("10:[1]")), Parallelizable::Yes);
  EXPECT_EQ(parallelizability(code("8:[6321]")), Parallelizable::Unknown);
  EXPECT_EQ(parallelizability(code("8:[4321]")), Parallelizable::Yes);
  EXPECT_EQ(parallelizability(code("8:[54321]")), Parallelizable::Yes);
  EXPECT_EQ(parallelizability(code("8:[421|51]")), Parallelizable::No);
  EXPECT_EQ(parallelizability(code("12:[98|1]")), Parallelizable::No);
  EXPECT_EQ(parallelizability(code("14:[1]")), Parallelizable::Unknown);
  EXPECT_EQ(to_string(Parallelizable::Unknown), "unknown");
}

TEST(MonogenicTopPower, Examples) {
  EXPECT_FALSE(monogenic_top_power(code("7:[1]")));
  EXPECT_TRUE(monogenic_top_power(code("7:[2]")));
  EXPECT_FALSE(monogenic_top_power(code("7:[421]")));
  EXPECT_THROW(monogenic_top_power(code("7:[421|51]")), std::invalid_argument);
}

TEST(MonogenicTopPower, AgreesWithMatrixOnAllMonogenicCodes) {
  for (int n = 5; n <= 8; ++n) {
    for (const auto& e : enumerate_codes(n)) {
      if (!e.code.is_monogenic() || e.code.gees.front().empty()) continue;
      EXPECT_EQ(monogenic_top_power(e.code), !r_power_is_zero(e.code, n - 3)) << format_code(e.code);
    }
  }
}

TEST(MakeReport, WorkedExample) {
  const auto r = make_report(code("7:[421|51]"));
  EXPECT_EQ(r.n, 7);
  EXPECT_EQ(r.d, (std::vector<std::size_t>{1, 5, 6, 2}));
  EXPECT_FALSE(r.orientable);
  EXPECT_EQ(r.euler, 0);
  EXPECT_TRUE(r.has_vector_field);
  EXPECT_EQ(r.sw_nonzero_degrees, (std::vector<int>{0, 1, 4}));
  EXPECT_FALSE(r.r_vanishes);
  EXPECT_EQ(r.parallelizable, Parallelizable::No);
  EXPECT_TRUE(make_report(code("7:[4321]")).r_vanishes);
  EXPECT_THROW(make_report(code("7:[]")), std::invalid_argument);
}
