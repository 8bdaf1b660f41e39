#include <gtest/gtest.h>

#include "kneser/constructions.hpp"
#include "kneser/detnum.hpp"
#include "kneser/oracle.hpp"

using namespace kneser;

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_det(5, 2), 3);
  EXPECT_EQ(oracle_det(7, 3), 3);
  EXPECT_EQ(oracle_det(6, 2), 4);
  EXPECT_EQ(oracle_det(7, 2), 4);
}

TEST(Oracle, SmallCeilingGivesAbsent) {
  EXPECT_EQ(oracle_det(6, 2, 3), std::nullopt);
  EXPECT_EQ(oracle_det(6, 2, 4), 4);
}

TEST(Oracle, Guards) {
  EXPECT_THROW(oracle_det(4, 2), domain_error);
  EXPECT_THROW(oracle_det(20, 6), guard_error);  // C(20,6) = 38760
  EXPECT_NO_THROW(oracle_det(14, 1));
}

TEST(Oracle, CompleteGraphs) {
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(oracle_det(n, 1), n - 1);
}

TEST(Oracle, IsMinimum) {
  EXPECT_TRUE(oracle_is_minimum(witness(5, 2).family));
  EXPECT_TRUE(oracle_is_minimum(witness(7, 3).family));
  const auto four = VertexFamily::from_lists(KneserParams(5, 2), {{1, 4}, {2, 4}, {3, 4}, {1, 2}});
  EXPECT_FALSE(oracle_is_minimum(four));
  const auto bad = VertexFamily::from_lists(KneserParams(5, 2), {{1, 2}});
  EXPECT_THROW(oracle_is_minimum(bad), domain_error);
}

TEST(Oracle, AgreesWithFormulaAndRespectsBounds) {
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k + 1; n <= 11; ++n) {
      if (binomial(n, k) > 400) continue;
      const auto o = oracle_det(n, k);
      ASSERT_TRUE(o);
      EXPECT_GE(*o, ceil_log2(static_cast<std::uint64_t>(n) + 1)) << "n=" << n << " k=" << k;
      EXPECT_LE(*o, n - k);
      const auto r = det_number(n, k);
      EXPECT_GE(*o, r.lower);
      EXPECT_LE(*o, r.upper);
      if (r.value) EXPECT_EQ(*o, *r.value) << "n=" << n << " k=" << k;
    }
}
