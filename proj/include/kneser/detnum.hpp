#pragma once

// Closed-form determining numbers of Kneser graphs and the bounds used where
// no formula applies.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kneser/core.hpp"

namespace kneser {

enum class DetMethod { complete_graph, half_vertices, discretes, gaps, bounds_only };

constexpr std::string_view to_string(DetMethod m) noexcept {
  switch (m) {
    case DetMethod::complete_graph: return "complete-graph";
    case DetMethod::half_vertices: return "half-vertices";
    case DetMethod::discretes: return "discretes";
    case DetMethod::gaps: return "gaps";
    case DetMethod::bounds_only: return "bounds-only";
  }
  return "?";
}

struct DetResult {
  std::optional<std::int64_t> value;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  DetMethod method = DetMethod::bounds_only;

  bool exact() const noexcept { return value.has_value(); }

  friend bool operator==(const DetResult&, const DetResult&) = default;
};

/// Maximum edge count of a k-regular simple hypergraph of order d whose
/// non-loop edges have size >= 2, i.e. floor(d(k+1)/2).
constexpr std::int64_t max_edges(std::int64_t d, std::int64_t k) noexcept { return d * (k + 1) / 2; }

/// ceil(2m/(k+1)): no k-regular simple hypergraph with m edges has fewer vertices.
constexpr std::int64_t order_lower_bound(std::int64_t m_edges, std::int64_t k) {
  if (m_edges < 1 || k < 1) throw domain_error("order_lower_bound needs m >= 1 and k >= 1");
  return (2 * m_edges + k) / (k + 1);
}

/// True where the closed-form value is known for K_{n:k}: k >= 2,
/// n >= 2k+1 and n >= k(k+1)/2 + 1.
constexpr bool in_formula_region(int n, int k) noexcept {
  return k >= 2 && n >= 2 * k + 1 && 2 * static_cast<std::int64_t>(n) >= static_cast<std::int64_t>(k) * (k + 1) + 2;
}

/// Least d with floor(d(k+1)/2) >= edges.
constexpr std::int64_t min_order_for_edges(std::int64_t edges, std::int64_t k) noexcept {
  std::int64_t d = 1;
  while (max_edges(d, k) < edges) ++d;
  return d;
}

inline DetResult det_number(int n, int k) {
  const KneserParams params(n, k);  // rejects n < 2k and n > 64
  (void)params;

  if (k == 1) {
    const std::int64_t v = n - 1;
    return {v, v, v, DetMethod::complete_graph};
  }
  if (n == 2 * k) {
    const auto v = static_cast<std::int64_t>(binomial(2 * k, k) / 2);
    return {v, v, v, DetMethod::half_vertices};
  }
  if (in_formula_region(n, k)) {
    const std::int64_t d = min_order_for_edges(n - 1, k);
    const bool on_curve = max_edges(d, k) == n - 1;
    // The closed form is valid throughout this region.
    if (!(d > 2 && k <= d) || (!on_curve && !(k + 1 <= d)) || !(max_edges(d - 1, k) < n - 1))
      throw std::logic_error("formula-region hypotheses violated at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
    return {d, d, d, on_curve ? DetMethod::discretes : DetMethod::gaps};
  }
  // 2k+1 <= n <= k(k+1)/2: only the log bound and the k-vertex construction.
  const std::int64_t lower = ceil_log2(static_cast<std::uint64_t>(n) + 1);
  const std::int64_t upper = std::min<std::int64_t>(k, n - k);
  return {std::nullopt, lower, upper, DetMethod::bounds_only};
}

/// Det(K_{n:k}) = n - k holds exactly for k = 1, K_{5:2} and K_{6:2}.
inline bool is_det_n_minus_k(int n, int k) {
  const KneserParams params(n, k);
  if (!params.strictly_above_half()) throw domain_error("is_det_n_minus_k requires n >= 2k+1");
  return k == 1 || (k == 2 && (n == 5 || n == 6));
}

}  // namespace kneser
