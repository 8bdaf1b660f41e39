#pragma once

// Brute-force determining numbers: search families of k-subsets directly for
// one whose n incidence patterns are pairwise distinct. Shares nothing with
// the hypergraph machinery beyond the core types.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/verifier.hpp"

namespace kneser {

inline constexpr std::uint64_t kOracleVertexGuard = 10'000;

namespace detail {

class OracleSearch {
public:
  OracleSearch(int n, int k) : n_(n) {
    const mask_t full = low_bits(n);
    for (mask_t v = low_bits(k);; v = next_same_popcount(v)) {
      vertices_.push_back(v);
      if (v == (full & ~low_bits(n - k))) break;
    }
  }

  /// Is there a family of exactly t vertices, the first being {1..k}, that
  /// separates all n elements?
  bool feasible(int t) {
    target_ = t;
    patterns_.fill(0);
    if (t == 0) return n_ <= 1;
    add(0, 0);
    return dfs(1, 1);
  }

private:
  void add(std::size_t vertex, int slot) {
    for (mask_t b = vertices_[vertex]; b != 0; b &= b - 1)
      patterns_[static_cast<std::size_t>(std::countr_zero(b))] |= std::uint64_t{1} << slot;
  }
  void remove(std::size_t vertex, int slot) {
    for (mask_t b = vertices_[vertex]; b != 0; b &= b - 1)
      patterns_[static_cast<std::size_t>(std::countr_zero(b))] &= ~(std::uint64_t{1} << slot);
  }

  /// ceil(log2) of the largest class of equal patterns; 0 once all differ.
  int splits_needed() const {
    std::array<std::uint64_t, kMaxGround> sorted{};
    std::copy_n(patterns_.begin(), n_, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + n_);
    int worst = 1, run = 1;
    for (int i = 1; i < n_; ++i) {
      run = sorted[static_cast<std::size_t>(i)] == sorted[static_cast<std::size_t>(i - 1)] ? run + 1 : 1;
      worst = std::max(worst, run);
    }
    return ceil_log2(static_cast<std::uint64_t>(worst));
  }

  bool dfs(std::size_t from, int placed) {
    const int need = splits_needed();
    if (need == 0) return true;  // already separating; extra members keep it so
    const int remaining = target_ - placed;
    // Each further member at most halves a class of equal patterns.
    if (need > remaining) return false;
    for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= vertices_.size(); ++i) {
      add(i, placed);
      const bool ok = dfs(i + 1, placed + 1);
      remove(i, placed);
      if (ok) return true;
    }
    return false;
  }

  int n_;
  int target_ = 0;
  std::vector<mask_t> vertices_;
  std::array<std::uint64_t, kMaxGround> patterns_{};
};

inline void require_oracle_domain(int n, int k) {
  const KneserParams params(n, k);
  if (!params.strictly_above_half()) throw domain_error("oracle requires n >= 2k+1");
  if (binomial(n, k) > kOracleVertexGuard)
    throw guard_error("oracle refuses C(n,k) = " + std::to_string(binomial(n, k)) + " > 10000 vertices");
}

}  // namespace detail

/// Least t <= max_size such that some t distinct k-subsets of [n] give all n
/// elements distinct incidence patterns; absent if none up to max_size.
/// Iterative deepening from ceil(log2 n), the pure counting bound.
inline std::optional<int> oracle_det(int n, int k, int max_size) {
  detail::require_oracle_domain(n, k);
  const int cap = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(max_size, 0)), binomial(n, k)));
  detail::OracleSearch search(n, k);
  for (int t = std::max(1, ceil_log2(static_cast<std::uint64_t>(n))); t <= cap; ++t)
    if (search.feasible(t)) return t;
  return std::nullopt;
}

/// Default ceiling n - k, the general upper bound.
inline std::optional<int> oracle_det(int n, int k) { return oracle_det(n, k, n - k); }

/// True iff no determining family of K_{n:k} is smaller than `family`.
inline bool oracle_is_minimum(const VertexFamily& family) {
  const auto& p = family.params();
  detail::require_oracle_domain(p.n, p.k);
  if (!is_determining_pairs(family).determining) throw domain_error("oracle_is_minimum: family is not determining");
  const auto best = oracle_det(p.n, p.k, static_cast<int>(family.size()));
  return best && *best == static_cast<int>(family.size());
}

}  // namespace kneser
