#pragma once

// Domain types shared by every other header: Kneser parameters, k-subsets of
// the ground set, vertex families and (multi-)hypergraphs.
//
// The ground set [n] = {1..n} is 1-based in every public accessor and in all
// serialized forms. Internally element e occupies bit e-1 of a 64-bit word,
// which caps n at 64.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kneser/errors.hpp"

namespace kneser {

using mask_t = std::uint64_t;

inline constexpr int kMaxGround = 64;

/// Bit mask with the low `count` bits set.
constexpr mask_t low_bits(int count) noexcept {
  return count >= 64 ? ~mask_t{0} : (mask_t{1} << count) - 1;
}

/// C(n, r) in 64 bits; exact for every n <= 64.
constexpr std::uint64_t binomial(int n, int r) noexcept {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 0; i < r; ++i) acc = acc * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
  return static_cast<std::uint64_t>(acc);
}

/// Smallest integer c with 2^c >= x, for x >= 1.
constexpr int ceil_log2(std::uint64_t x) noexcept {
  return x <= 1 ? 0 : 64 - std::countl_zero(x - 1);
}

/// Next mask with the same popcount in increasing numeric order (Gosper).
constexpr mask_t next_same_popcount(mask_t v) noexcept {
  const mask_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

/// 1-based element labels of a mask, ascending.
inline std::vector<int> elements_of(mask_t m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

struct KneserParams {
  int n = 0;
  int k = 0;

  KneserParams() = default;

  /// Accepts 1 <= k, 2k <= n <= 64. Operations that need n > 2k check it
  /// themselves.
  KneserParams(int n_, int k_) : n(n_), k(k_) {
    if (k < 1) throw domain_error("k must be at least 1, got " + std::to_string(k));
    if (n < 2 * k)
      throw domain_error("n < 2k unsupported (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    if (n > kMaxGround)
      throw domain_error("n > 64 exceeds the word-width ceiling (n=" + std::to_string(n) + ")");
  }

  mask_t ground() const noexcept { return low_bits(n); }
  bool strictly_above_half() const noexcept { return n >= 2 * k + 1; }

  friend bool operator==(const KneserParams&, const KneserParams&) = default;
};

/// A vertex of K_{n:k}: a k-element subset of [n].
class KSubset {
public:
  KSubset(KneserParams params, mask_t bits) : params_(params), bits_(bits) {
    if ((bits_ & ~params_.ground()) != 0)
      throw domain_error("subset has elements outside [1, " + std::to_string(params_.n) + "]");
    if (std::popcount(bits_) != params_.k)
      throw domain_error("subset has " + std::to_string(std::popcount(bits_)) + " elements, expected k=" +
                         std::to_string(params_.k));
  }

  static KSubset from_elements(KneserParams params, std::span<const int> elements) {
    mask_t bits = 0;
    for (int e : elements) {
      if (e < 1 || e > params.n)
        throw domain_error("element " + std::to_string(e) + " outside [1, " + std::to_string(params.n) + "]");
      const mask_t bit = mask_t{1} << (e - 1);
      if (bits & bit) throw domain_error("repeated element " + std::to_string(e) + " in subset");
      bits |= bit;
    }
    return KSubset(params, bits);
  }

  static KSubset from_elements(KneserParams params, std::initializer_list<int> elements) {
    return from_elements(params, std::span<const int>(elements.begin(), elements.size()));
  }

  const KneserParams& params() const noexcept { return params_; }
  mask_t bits() const noexcept { return bits_; }
  bool contains(int element) const noexcept {
    return element >= 1 && element <= params_.n && ((bits_ >> (element - 1)) & 1U);
  }
  std::vector<int> elements() const { return elements_of(bits_); }

  friend bool operator==(const KSubset& a, const KSubset& b) noexcept {
    return a.bits_ == b.bits_ && a.params_ == b.params_;
  }
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) noexcept {
    return a.bits_ <=> b.bits_;
  }

private:
  KneserParams params_;
  mask_t bits_;
};

/// [n] \ v, an (n-k)-subset.
inline mask_t complement(const KSubset& v) noexcept { return v.params().ground() & ~v.bits(); }

/// Ordered list of pairwise distinct k-subsets sharing one set of parameters.
class VertexFamily {
public:
  explicit VertexFamily(KneserParams params) : params_(params) {}

  VertexFamily(KneserParams params, std::vector<KSubset> members) : params_(params), members_(std::move(members)) {
    std::vector<mask_t> seen;
    seen.reserve(members_.size());
    for (const auto& m : members_) {
      if (!(m.params() == params_)) throw domain_error("family member has mismatching Kneser parameters");
      seen.push_back(m.bits());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw domain_error("family contains a repeated vertex");
  }

  static VertexFamily from_lists(KneserParams params, const std::vector<std::vector<int>>& lists) {
    std::vector<KSubset> members;
    members.reserve(lists.size());
    for (const auto& l : lists) members.push_back(KSubset::from_elements(params, l));
    return VertexFamily(params, std::move(members));
  }

  const KneserParams& params() const noexcept { return params_; }
  const std::vector<KSubset>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  /// Copy with one more member appended.
  VertexFamily with(const KSubset& extra) const {
    auto m = members_;
    m.push_back(extra);
    return VertexFamily(params_, std::move(m));
  }

  friend bool operator==(const VertexFamily&, const VertexFamily&) = default;

private:
  KneserParams params_;
  std::vector<KSubset> members_;
};

/// Membership of one ground element across the members of a family (a column
/// of the characteristic matrix). Bit i corresponds to members()[i].
class IncidencePattern {
public:
  explicit IncidencePattern(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

  std::size_t size() const noexcept { return length_; }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / 64] |= mask_t{1} << (i % 64); }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](mask_t w) { return w == 0; });
  }

  /// "1"/"0" per member, member 0 first.
  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const IncidencePattern&, const IncidencePattern&) = default;
  friend auto operator<=>(const IncidencePattern&, const IncidencePattern&) = default;

private:
  std::size_t length_;
  std::vector<mask_t> words_;
};

inline IncidencePattern incidence_pattern(const VertexFamily& family, int element) {
  if (element < 1 || element > family.params().n)
    throw domain_error("element " + std::to_string(element) + " outside [1, " +
                       std::to_string(family.params().n) + "]");
  IncidencePattern p(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family.members()[i].contains(element)) p.set(i);
  return p;
}

/// Finite hypergraph on vertices {0..order-1}. Edges form an ordered multiset;
/// each edge is a sorted list of distinct vertices. Size-1 edges are loops.
class Hypergraph {
public:
  using Edge = std::vector<int>;

  Hypergraph() = default;

  explicit Hypergraph(int order, std::vector<Edge> edges = {}) : order_(order) {
    if (order < 1) throw domain_error("hypergraph order must be positive");
    edges_.reserve(edges.size());
    for (auto& e : edges) add_edge(std::move(e));
  }

  void add_edge(Edge e) {
    std::sort(e.begin(), e.end());
    if (e.empty()) throw domain_error("hyperedges must be nonempty");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw domain_error("hyperedge repeats a vertex");
    if (e.front() < 0 || e.back() >= order_)
      throw domain_error("hyperedge vertex outside [0, " + std::to_string(order_ - 1) + "]");
    edges_.push_back(std::move(e));
  }

  int order() const noexcept { return order_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(order_), 0);
    for (const auto& e : edges_)
      for (int v : e) ++deg[static_cast<std::size_t>(v)];
    return deg;
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
    return d;
  }

  /// Edge cardinalities, nonincreasing.
  std::vector<int> size_sequence() const {
    std::vector<int> r;
    r.reserve(edges_.size());
    for (const auto& e : edges_) r.push_back(static_cast<int>(e.size()));
    std::sort(r.begin(), r.end(), std::greater<>());
    return r;
  }

  bool is_simple() const {
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  bool is_k_regular(int k) const {
    const auto deg = degrees();
    return std::all_of(deg.begin(), deg.end(), [k](int d) { return d == k; });
  }

  /// The common degree when every vertex has the same degree.
  std::optional<int> regular_degree() const {
    const auto deg = degrees();
    if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) return std::nullopt;
    return deg.front();
  }

  /// Edges as a sorted multiset, for comparisons that ignore edge order.
  std::vector<Edge> sorted_edges() const {
    auto s = edges_;
    std::sort(s.begin(), s.end());
    return s;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
  int order_ = 0;
  std::vector<Edge> edges_;
};

inline bool equal_up_to_edge_order(const Hypergraph& a, const Hypergraph& b) {
  return a.order() == b.order() && a.sorted_edges() == b.sorted_edges();
}

}  // namespace kneser
