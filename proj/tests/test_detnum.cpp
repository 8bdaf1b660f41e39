#include <gtest/gtest.h>

#include "kneser/detnum.hpp"

using namespace kneser;

TEST(DetNumber, Examples) {
  EXPECT_EQ(det_number(5, 2).value, 3);
  EXPECT_EQ(det_number(5, 2).method, DetMethod::discretes);
  EXPECT_EQ(det_number(6, 2).value, 4);
  EXPECT_EQ(det_number(6, 2).method, DetMethod::gaps);
  EXPECT_EQ(det_number(13, 4).value, 5);
  EXPECT_EQ(det_number(8, 2).value, 5);
  for (int n = 2; n <= 64; ++n) {
    const auto r = det_number(n, 1);
    EXPECT_EQ(r.value, n - 1);
    EXPECT_EQ(r.method, DetMethod::complete_graph);
  }
}

TEST(DetNumber, BoundsOnlyRegion) {
  const auto r = det_number(9, 4);
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.method, DetMethod::bounds_only);
  EXPECT_EQ(r.lower, 4);
  EXPECT_EQ(r.upper, 4);

  const auto s = det_number(13, 5);
  EXPECT_FALSE(s.value);
  EXPECT_EQ(s.lower, 4);
  EXPECT_EQ(s.upper, 5);
}

TEST(DetNumber, HalfLine) {
  const auto r = det_number(4, 2);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.method, DetMethod::half_vertices);
  EXPECT_EQ(det_number(6, 3).value, 10);
  EXPECT_EQ(det_number(64, 32).value, static_cast<std::int64_t>(binomial(64, 32) / 2));
}

TEST(DetNumber, Errors) {
  EXPECT_THROW(det_number(3, 2), domain_error);
  EXPECT_THROW(det_number(5, 0), domain_error);
  EXPECT_THROW(det_number(65, 2), domain_error);
}

TEST(DetNumber, ExactlyOneBranchPerInstance) {
  for (int k = 1; k <= 32; ++k)
    for (int n = 2 * k; n <= 64; ++n) {
      const bool complete = k == 1;
      const bool half = k >= 2 && n == 2 * k;
      const bool formula = in_formula_region(n, k);
      const bool bounds = k >= 2 && n >= 2 * k + 1 && !formula;
      EXPECT_EQ(complete + half + formula + bounds, 1) << "n=" << n << " k=" << k;
      const auto r = det_number(n, k);
      EXPECT_LE(r.lower, r.upper);
      if (r.value) {
        EXPECT_EQ(r.lower, *r.value);
        EXPECT_EQ(r.upper, *r.value);
      }
      EXPECT_EQ(r.method == DetMethod::bounds_only, bounds);
    }
}

TEST(DetNumber, MinimalityIdentityInFormulaRegion) {
  for (int k = 2; k <= 32; ++k)
    for (int n = 2 * k + 1; n <= 64; ++n) {
      if (!in_formula_region(n, k)) continue;
      const auto d = *det_number(n, k).value;
      EXPECT_LT(max_edges(d - 1, k), n - 1);
      EXPECT_LE(n - 1, max_edges(d, k));
      EXPECT_GE(d, k);
      EXPECT_GT(d, 2);
    }
}

TEST(DetNumber, GeneralBoundsHold) {
  for (int k = 1; k <= 31; ++k)
    for (int n = 2 * k + 1; n <= 64; ++n) {
      const auto r = det_number(n, k);
      EXPECT_GE(r.lower, ceil_log2(static_cast<std::uint64_t>(n) + 1));
      EXPECT_LE(r.upper, n - k);
    }
}

TEST(IsDetNMinusK, Examples) {
  EXPECT_TRUE(is_det_n_minus_k(5, 2));
  EXPECT_TRUE(is_det_n_minus_k(6, 2));
  EXPECT_FALSE(is_det_n_minus_k(7, 3));
  EXPECT_FALSE(is_det_n_minus_k(7, 2));
  for (int n = 3; n <= 64; ++n) EXPECT_TRUE(is_det_n_minus_k(n, 1));
  EXPECT_THROW(is_det_n_minus_k(4, 2), domain_error);
}

TEST(OrderLowerBound, Examples) {
  EXPECT_EQ(order_lower_bound(15, 4), 6);
  EXPECT_EQ(order_lower_bound(1, 1), 1);
  EXPECT_EQ(order_lower_bound(12, 5), 4);
  EXPECT_THROW(order_lower_bound(0, 3), domain_error);
}
