#pragma once

// Exhaustive existence search for k-regular simple hypergraphs of prescribed
// order and size, and the classification of Kneser graphs by determining
// number built on it.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <span>
#include <string_view>
#include <thread>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/detnum.hpp"

namespace kneser {

struct ExistenceQuery {
  int d = 0;  ///< order
  int k = 0;  ///< common degree
  int m = 0;  ///< edge count
};

inline constexpr int kMaxSearchOrder = 20;

struct SearchOptions {
  /// Reject up front via the size-sum cuts for m > d + C(d,2) (and
  /// m > d + C(d,2) + C(d,3)). Never changes an answer.
  bool counting_cuts = true;
  /// Answer k > 2^(d-2) through the complementary query
  /// (d, 2^(d-1) - k, 2^d - 1 - m).
  bool complement_symmetry = true;
  /// Remember failed (position, count, degrees) states.
  bool memoize = true;
  std::size_t memo_limit = std::size_t{1} << 23;
};

/// Necessary conditions from counting edge sizes. With the edges sorted by
/// size, at most d are loops, at most C(d,2) have size 2, ... so
/// kd = sum of sizes >= d + 2C(d,2) + 3(m - d - C(d,2)) when m > d + C(d,2).
constexpr bool passes_counting_cuts(int d, int k, int m) noexcept {
  const std::int64_t kd = static_cast<std::int64_t>(k) * d;
  const auto c2 = static_cast<std::int64_t>(binomial(d, 2));
  const auto c3 = static_cast<std::int64_t>(binomial(d, 3));
  if (m > d + c2 && kd < 3 * m - 2 * d - c2) return false;
  if (m > d + c2 + c3 && kd < 4 * m - 3 * d - 2 * c2 - c3) return false;
  return true;
}

namespace detail {

class ExistenceSearch {
public:
  ExistenceSearch(int d, int k, int m, const SearchOptions& opts) : d_(d), k_(k), m_(m), opts_(opts) {
    const mask_t full = low_bits(d);
    for (int s = 1; s <= d; ++s) {
      mask_t e = low_bits(s);
      while (true) {
        cand_.push_back(e);
        if (e == (full & ~low_bits(d - s))) break;  // highest s-subset
        e = next_same_popcount(e);
      }
    }
    const std::size_t n = cand_.size();
    size_prefix_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) size_prefix_[i + 1] = size_prefix_[i] + std::popcount(cand_[i]);
    avail_.assign((n + 1) * static_cast<std::size_t>(d), 0);
    for (std::size_t i = n; i-- > 0;)
      for (int v = 0; v < d; ++v)
        avail_[i * d + v] = avail_[(i + 1) * d + v] + static_cast<std::uint32_t>((cand_[i] >> v) & 1U);
    deg_.assign(static_cast<std::size_t>(d), 0);

    idx_bits_ = std::bit_width(n + 1);
    deg_bits_ = std::bit_width(static_cast<unsigned>(k));
    use_memo_ = opts.memoize && 2 * idx_bits_ + d * deg_bits_ + 1 <= 64;
  }

  std::optional<std::vector<mask_t>> run() {
    needed_ = static_cast<std::int64_t>(k_) * d_;
    if (dfs(0, false)) return chosen_;
    return std::nullopt;
  }

private:
  bool dfs(std::size_t idx, bool loops_closed) {
    const auto count = static_cast<int>(chosen_.size());
    if (count == m_) return needed_ == 0;
    const std::size_t n = cand_.size();
    const auto r = static_cast<std::size_t>(m_ - count);
    if (n - idx < r) return false;
    // Candidates are sorted by size, so the cheapest and dearest r-subsets of
    // what remains bracket the degree mass still missing.
    if (size_prefix_[idx + r] - size_prefix_[idx] > needed_) return false;
    if (size_prefix_[n] - size_prefix_[n - r] < needed_) return false;
    for (int v = 0; v < d_; ++v)
      if (deg_[v] + static_cast<int>(avail_[idx * d_ + v]) < k_) return false;

    std::uint64_t key = 0;
    if (use_memo_) {
      key = pack(idx, count, loops_closed && idx < static_cast<std::size_t>(d_));
      if (failed_.count(key)) return false;
    }

    const mask_t e = cand_[idx];
    const bool is_loop = idx < static_cast<std::size_t>(d_);
    // Looped vertices can be relabeled to form a prefix 0..l-1.
    if (!(is_loop && loops_closed) && fits(e)) {
      apply(e, +1);
      chosen_.push_back(e);
      if (dfs(idx + 1, loops_closed)) return true;
      chosen_.pop_back();
      apply(e, -1);
    }
    if (dfs(idx + 1, loops_closed || is_loop)) return true;

    if (use_memo_ && failed_.size() < opts_.memo_limit) failed_.insert(key);
    return false;
  }

  bool fits(mask_t e) const {
    for (mask_t b = e; b != 0; b &= b - 1)
      if (deg_[static_cast<std::size_t>(std::countr_zero(b))] >= k_) return false;
    return true;
  }

  void apply(mask_t e, int sign) {
    for (mask_t b = e; b != 0; b &= b - 1) deg_[static_cast<std::size_t>(std::countr_zero(b))] += sign;
    needed_ -= sign * std::popcount(e);
  }

  std::uint64_t pack(std::size_t idx, int count, bool closed) const {
    std::uint64_t key = idx;
    key = (key << idx_bits_) | static_cast<std::uint64_t>(count);
    for (int v = 0; v < d_; ++v) key = (key << deg_bits_) | static_cast<std::uint64_t>(deg_[v]);
    return (key << 1) | (closed ? 1U : 0U);
  }

  int d_, k_, m_;
  SearchOptions opts_;
  std::vector<mask_t> cand_;
  std::vector<std::int64_t> size_prefix_;
  std::vector<std::uint32_t> avail_;
  std::vector<int> deg_;
  std::vector<mask_t> chosen_;
  std::int64_t needed_ = 0;
  int idx_bits_ = 0, deg_bits_ = 0;
  bool use_memo_ = false;
  std::unordered_set<std::uint64_t> failed_;
};

inline Hypergraph from_masks(int d, const std::vector<mask_t>& edges) {
  Hypergraph h(d);
  for (mask_t e : edges) {
    Hypergraph::Edge edge;
    for (mask_t b = e; b != 0; b &= b - 1) edge.push_back(std::countr_zero(b));
    h.add_edge(std::move(edge));
  }
  return h;
}

}  // namespace detail

/// A k-regular simple hypergraph with d vertices and m edges, or nothing if
/// none exists. Exhaustive: edges are tried in (size, bit pattern) order.
inline std::optional<Hypergraph> exists_hypergraph(const ExistenceQuery& q, const SearchOptions& opts = {}) {
  if (q.d < 1 || q.k < 1 || q.m < 1) throw domain_error("existence query needs positive d, k, m");
  if (q.d > kMaxSearchOrder) throw guard_error("existence search limited to d <= 20, got d=" + std::to_string(q.d));

  const std::int64_t all_edges = (std::int64_t{1} << q.d) - 1;
  const std::int64_t half_degree = std::int64_t{1} << (q.d - 1);
  if (q.k > half_degree || q.m > all_edges) return std::nullopt;
  if (static_cast<std::int64_t>(q.k) * q.d < q.m || q.m < q.k) return std::nullopt;
  if (opts.counting_cuts && !passes_counting_cuts(q.d, q.k, q.m)) return std::nullopt;

  std::optional<std::vector<mask_t>> edges;
  if (opts.complement_symmetry && 2 * static_cast<std::int64_t>(q.k) > half_degree) {
    // Every vertex lies in exactly 2^(d-1) nonempty subsets, so the
    // complementary edge set of a solution is a solution of the dual query.
    const int dual_k = static_cast<int>(half_degree - q.k);
    const int dual_m = static_cast<int>(all_edges - q.m);
    std::optional<std::vector<mask_t>> dual;
    if (dual_m == 0 && dual_k == 0)
      dual.emplace();  // the dual is the empty hypergraph
    else if (dual_m > 0 && dual_k > 0)
      dual = detail::ExistenceSearch(q.d, dual_k, dual_m, opts).run();
    if (dual) {
      std::vector<char> taken(static_cast<std::size_t>(all_edges + 1), 0);
      for (mask_t e : *dual) taken[e] = 1;
      edges.emplace();
      for (mask_t e = 1; e <= static_cast<mask_t>(all_edges); ++e)
        if (!taken[e]) edges->push_back(e);
      std::stable_sort(edges->begin(), edges->end(),
                       [](mask_t a, mask_t b) { return std::popcount(a) < std::popcount(b); });
    }
  } else {
    edges = detail::ExistenceSearch(q.d, q.k, q.m, opts).run();
  }
  if (!edges) return std::nullopt;

  auto h = detail::from_masks(q.d, *edges);
  if (!h.is_simple() || !h.is_k_regular(q.k) || h.size() != static_cast<std::size_t>(q.m))
    throw std::logic_error("existence search returned an invalid witness");
  return h;
}

struct MinOrder {
  int order = 0;
  int edges = 0;  ///< the edge count (from the requested choices) that was met
  Hypergraph witness;
};

/// Least order d <= max_order admitting a k-regular simple hypergraph whose
/// edge count is one of m_choices.
inline std::optional<MinOrder> min_order(int k, std::span<const int> m_choices, int max_order,
                                         const SearchOptions& opts = {}) {
  if (m_choices.empty()) throw domain_error("min_order needs at least one edge count");
  std::vector<int> ms(m_choices.begin(), m_choices.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  std::int64_t start = order_lower_bound(ms.front(), k);
  for (int m : ms) start = std::min(start, order_lower_bound(m, k));
  for (int d = static_cast<int>(std::max<std::int64_t>(1, start)); d <= max_order; ++d)
    for (int m : ms)
      if (auto h = exists_hypergraph({d, k, m}, opts)) return MinOrder{d, m, std::move(*h)};
  return std::nullopt;
}

/// Default search ceiling: max(k, ceil(2 max(m) / (k+1))) + 2.
inline std::optional<MinOrder> min_order(int k, std::span<const int> m_choices, const SearchOptions& opts = {}) {
  if (m_choices.empty()) throw domain_error("min_order needs at least one edge count");
  const int top = *std::max_element(m_choices.begin(), m_choices.end());
  const auto ceiling = std::max<std::int64_t>(k, order_lower_bound(top, k)) + 2;
  return min_order(k, m_choices, static_cast<int>(std::min<std::int64_t>(ceiling, kMaxSearchOrder)), opts);
}

inline constexpr int kMaxDetSearchOrder = 8;

/// Det(K_{n:k}) as the least order of a k-regular simple hypergraph with n-1
/// or n edges. Refuses when that order exceeds 8.
inline int det_exact_by_search(int n, int k, const SearchOptions& opts = {}) {
  const KneserParams params(n, k);
  if (!params.strictly_above_half()) throw domain_error("det_exact_by_search requires n >= 2k+1");
  const int ms[] = {n - 1, n};
  if (auto r = min_order(k, ms, kMaxDetSearchOrder, opts)) return r->order;
  throw guard_error("det_exact_by_search: determining number exceeds the d <= 8 search guard (n=" +
                    std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

// ---------------------------------------------------------------------------
// Fixed determining number
// ---------------------------------------------------------------------------

enum class ResolvedBy { formula, search };

constexpr std::string_view to_string(ResolvedBy r) noexcept {
  return r == ResolvedBy::formula ? "formula" : "search";
}

struct FixedDetEntry {
  int n = 0;
  int k = 0;
  ResolvedBy resolved_by = ResolvedBy::formula;

  friend bool operator==(const FixedDetEntry&, const FixedDetEntry&) = default;
};

struct FixedDetOptions {
  int max_supported = 5;  ///< raise to 6 to allow the d = 6 classification
  unsigned jobs = 1;
  SearchOptions search{};
};

struct FixedDetReport {
  std::vector<FixedDetEntry> entries;  ///< sorted by (k, n)
  std::size_t candidates = 0;          ///< (n,k) pairs with k >= 2 examined
  std::size_t formula_candidates = 0;  ///< of which inside the closed-form region
};

/// Every K_{n:k} with n >= 2k+1 and Det(K_{n:k}) = d.
///
/// Candidates with k >= 2 satisfy k <= 2^(d-1) and n - 1 <= 2^d - 1. Those in
/// the closed-form region are decided by det_number; the rest by searching
/// orders up to d.
inline FixedDetReport enumerate_fixed_det(int d, const FixedDetOptions& opts = {}) {
  if (d < 2 || d > 6) throw domain_error("enumerate supports 2 <= d <= 6, got d=" + std::to_string(d));
  if (d > opts.max_supported)
    throw guard_error("d=" + std::to_string(d) + " exceeds the enabled search range (max " +
                      std::to_string(opts.max_supported) + ")");

  struct Candidate {
    int n, k;
  };
  std::vector<Candidate> search_queue;
  FixedDetReport report;
  report.entries.push_back({d + 1, 1, ResolvedBy::formula});

  const int max_k = 1 << (d - 1);
  const int max_n = std::min(1 << d, kMaxGround);
  for (int k = 2; k <= max_k; ++k)
    for (int n = 2 * k + 1; n <= max_n; ++n) {
      ++report.candidates;
      if (in_formula_region(n, k)) {
        ++report.formula_candidates;
        if (det_number(n, k).value == d) report.entries.push_back({n, k, ResolvedBy::formula});
      } else {
        search_queue.push_back({n, k});
      }
    }

  std::vector<char> hit(search_queue.size(), 0);
  auto resolve = [&](std::size_t i) {
    const auto [n, k] = search_queue[i];
    const int ms[] = {n - 1, n};
    const auto r = min_order(k, ms, d, opts.search);
    hit[i] = r && r->order == d;
  };

  const unsigned jobs = std::max(1U, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < search_queue.size(); ++i) resolve(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < search_queue.size(); i = next++) resolve(i);
      }));
    for (auto& f : workers) f.get();
  }
  for (std::size_t i = 0; i < search_queue.size(); ++i)
    if (hit[i]) report.entries.push_back({search_queue[i].n, search_queue[i].k, ResolvedBy::search});

  std::sort(report.entries.begin(), report.entries.end(),
            [](const FixedDetEntry& a, const FixedDetEntry& b) { return std::tie(a.k, a.n) < std::tie(b.k, b.n); });
  return report;
}

}  // namespace kneser
