#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kneser/core.hpp"

using namespace kneser;

namespace {

VertexFamily family(int n, int k, std::vector<std::vector<int>> lists) {
  return VertexFamily::from_lists(KneserParams(n, k), lists);
}

}  // namespace

TEST(KneserParams, RejectsOutOfRange) {
  EXPECT_THROW(KneserParams(3, 2), domain_error);
  EXPECT_THROW(KneserParams(5, 0), domain_error);
  EXPECT_THROW(KneserParams(65, 3), domain_error);
  EXPECT_NO_THROW(KneserParams(4, 2));
  EXPECT_NO_THROW(KneserParams(64, 32));
}

TEST(KSubset, ValidatesSizeAndRange) {
  const KneserParams p(7, 3);
  EXPECT_THROW(KSubset::from_elements(p, {1, 2}), domain_error);
  EXPECT_THROW(KSubset::from_elements(p, {1, 2, 8}), domain_error);
  EXPECT_THROW(KSubset::from_elements(p, {1, 1, 2}), domain_error);
  EXPECT_EQ(KSubset::from_elements(p, {3, 1, 2}).elements(), (std::vector<int>{1, 2, 3}));
}

TEST(Complement, Examples) {
  EXPECT_EQ(elements_of(complement(KSubset::from_elements(KneserParams(7, 3), {1, 2, 3}))),
            (std::vector<int>{4, 5, 6, 7}));
  EXPECT_EQ(elements_of(complement(KSubset::from_elements(KneserParams(3, 1), {1}))), (std::vector<int>{2, 3}));
  EXPECT_EQ(elements_of(complement(KSubset::from_elements(KneserParams(6, 3), {4, 5, 6}))),
            (std::vector<int>{1, 2, 3}));
}

TEST(Complement, IsAnInvolutionAndPartitionsGround) {
  const KneserParams p(10, 4);
  for (mask_t v = low_bits(4); v < (mask_t{1} << 10); v = next_same_popcount(v)) {
    const KSubset s(p, v);
    const mask_t c = complement(s);
    EXPECT_EQ(std::popcount(c), 6);
    EXPECT_EQ(c | v, p.ground());
    EXPECT_EQ(c & v, 0U);
    EXPECT_EQ(p.ground() & ~c, v);
  }
}

TEST(IncidencePattern, Examples) {
  const auto s = family(5, 2, {{1, 4}, {2, 4}, {3, 4}});
  EXPECT_EQ(incidence_pattern(s, 4).to_string(), "111");
  EXPECT_EQ(incidence_pattern(s, 5).to_string(), "000");
  EXPECT_EQ(incidence_pattern(s, 2).to_string(), "010");
  EXPECT_THROW(incidence_pattern(s, 6), domain_error);
  EXPECT_THROW(incidence_pattern(s, 0), domain_error);
}

TEST(IncidencePattern, EqualPatternsIffPairNeverSplit) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const int n = 2 * k + 1 + static_cast<int>(rng() % 4);
    const KneserParams p(n, k);
    std::vector<KSubset> members;
    std::vector<mask_t> used;
    const int size = std::min<int>(1 + static_cast<int>(rng() % 6), static_cast<int>(binomial(n, k)));
    while (static_cast<int>(members.size()) < size) {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 1);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(static_cast<std::size_t>(k));
      auto v = KSubset::from_elements(p, all);
      if (std::find(used.begin(), used.end(), v.bits()) != used.end()) continue;
      used.push_back(v.bits());
      members.push_back(v);
    }
    const VertexFamily f(p, members);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        bool never_split = true;
        for (const auto& m : f.members()) {
          const bool both_in = m.contains(a) && m.contains(b);
          const bool both_out = !m.contains(a) && !m.contains(b);
          never_split = never_split && (both_in || both_out);
        }
        EXPECT_EQ(incidence_pattern(f, a) == incidence_pattern(f, b), never_split);
      }
  }
}

TEST(VertexFamily, RejectsDuplicatesAndMixedParams) {
  EXPECT_THROW(family(5, 2, {{1, 2}, {2, 1}}), domain_error);
  const KneserParams p(5, 2), q(6, 2);
  EXPECT_THROW(VertexFamily(p, {KSubset::from_elements(q, {1, 2})}), domain_error);
}

TEST(Hypergraph, ValidatesEdges) {
  EXPECT_THROW(Hypergraph(3, {{}}), domain_error);
  EXPECT_THROW(Hypergraph(3, {{0, 3}}), domain_error);
  EXPECT_THROW(Hypergraph(3, {{1, 1}}), domain_error);
  EXPECT_THROW(Hypergraph(0), domain_error);
}

TEST(Hypergraph, DerivedQuantities) {
  const Hypergraph h(3, {{0}, {1}, {2}, {2, 0, 1}});
  EXPECT_EQ(h.edges().back(), (Hypergraph::Edge{0, 1, 2}));
  EXPECT_EQ(h.degrees(), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(h.degree(1), 2);
  EXPECT_EQ(h.size_sequence(), (std::vector<int>{3, 1, 1, 1}));
  EXPECT_TRUE(h.is_simple());
  EXPECT_TRUE(h.is_k_regular(2));
  EXPECT_FALSE(h.is_k_regular(3));
  EXPECT_EQ(h.regular_degree(), 2);

  const Hypergraph multi(2, {{0, 1}, {1, 0}});
  EXPECT_FALSE(multi.is_simple());
  EXPECT_TRUE(multi.is_k_regular(2));
}

TEST(Hypergraph, HandshakeIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 8);
    Hypergraph h(d);
    const int m = static_cast<int>(rng() % 12);
    for (int i = 0; i < m; ++i) {
      mask_t e = 0;
      while (e == 0) e = rng() & low_bits(d);
      Hypergraph::Edge edge;
      for (int v = 0; v < d; ++v)
        if ((e >> v) & 1U) edge.push_back(v);
      h.add_edge(edge);
    }
    const auto deg = h.degrees();
    const auto sizes = h.size_sequence();
    EXPECT_EQ(std::accumulate(deg.begin(), deg.end(), 0), std::accumulate(sizes.begin(), sizes.end(), 0));
    EXPECT_TRUE(std::is_sorted(sizes.begin(), sizes.end(), std::greater<>()));
  }
}

TEST(Combinatorics, BinomialAndLogs) {
  EXPECT_EQ(binomial(5, 2), 10U);
  EXPECT_EQ(binomial(31, 15), 300540195U);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
  EXPECT_EQ(binomial(4, 5), 0U);
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(6), 3);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_EQ(ceil_log2(10), 4);
}
