#pragma once

// Explicit k-regular simple hypergraphs and their realization as determining
// sets of Kneser graphs.
//
// Every constructor here re-checks its output (simple, k-regular, exact edge
// count) before returning; a failed check is a defect and throws
// std::logic_error.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/detnum.hpp"

namespace kneser {

/// An edge of a complete graph. In a Hamiltonian cycle the orientation
/// follows the traversal: cycle[j] = {c_j, c_{j+1}}.
using GraphEdge = std::pair<int, int>;

// ---------------------------------------------------------------------------
// Decompositions of K_d
// ---------------------------------------------------------------------------

/// d-1 pairwise edge-disjoint perfect matchings of K_d (round-robin circle
/// method, vertex d-1 fixed). Each matching is sorted; matching 0 is
/// {0,d-1}, {1,d-2}, ...
inline std::vector<std::vector<GraphEdge>> perfect_matchings(int d) {
  if (d < 2 || d % 2 != 0) throw domain_error("perfect_matchings needs an even d >= 2, got " + std::to_string(d));
  const int m = d - 1;
  std::vector<std::vector<GraphEdge>> rounds;
  rounds.reserve(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    std::vector<GraphEdge> matching;
    matching.emplace_back(std::min(r, m), std::max(r, m));
    for (int i = 1; i < d / 2; ++i) {
      const int a = (r + i) % m;
      const int b = ((r - i) % m + m) % m;
      matching.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(matching.begin(), matching.end());
    rounds.push_back(std::move(matching));
  }
  return rounds;
}

/// (d-1)/2 pairwise edge-disjoint Hamiltonian cycles of K_d (Walecki). Each
/// cycle is the ordered edge list e_1..e_d; e_1 and e_d meet at
/// cycle.front().first.
inline std::vector<std::vector<GraphEdge>> hamiltonian_cycles(int d) {
  if (d < 3 || d % 2 == 0) throw domain_error("hamiltonian_cycles needs an odd d >= 3, got " + std::to_string(d));
  const int m = d - 1;  // rim vertices 0..m-1, hub m
  std::vector<std::vector<GraphEdge>> cycles;
  for (int i = 0; i < m / 2; ++i) {
    std::vector<int> tour{m, i};
    for (int j = 1; static_cast<int>(tour.size()) < d; ++j) {
      tour.push_back((i + j) % m);
      if (static_cast<int>(tour.size()) < d) tour.push_back(((i - j) % m + m) % m);
    }
    std::vector<GraphEdge> cycle;
    cycle.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) cycle.emplace_back(tour[static_cast<std::size_t>(j)], tour[static_cast<std::size_t>((j + 1) % d)]);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// Merging
// ---------------------------------------------------------------------------

struct MergePlan {
  std::vector<std::size_t> edge_indices;
};

enum class MergeMode {
  preserve_regularity,  ///< merged edges must be pairwise disjoint
  allow_overlap,
};

/// Replace the planned edges by their union. The union takes the position of
/// the smallest planned index; the other edges keep their relative order.
/// |E'| = |E| - t + 1.
inline Hypergraph merge(const Hypergraph& h, const MergePlan& plan,
                        MergeMode mode = MergeMode::preserve_regularity) {
  const auto& idx = plan.edge_indices;
  if (idx.size() < 2) throw domain_error("a merge plan needs at least two edges");
  auto sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw domain_error("merge plan repeats an edge index");
  if (sorted.back() >= h.size()) throw domain_error("merge plan index out of range");

  std::vector<char> used(static_cast<std::size_t>(h.order()), 0);
  Hypergraph::Edge merged;
  for (std::size_t i : sorted) {
    for (int v : h.edges()[i]) {
      if (used[static_cast<std::size_t>(v)]) {
        if (mode == MergeMode::preserve_regularity)
          throw domain_error("merge plan edges overlap at vertex " + std::to_string(v));
        continue;
      }
      used[static_cast<std::size_t>(v)] = 1;
      merged.push_back(v);
    }
  }

  Hypergraph out(h.order());
  std::size_t next = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (next < sorted.size() && sorted[next] == i) {
      if (next == 0) out.add_edge(merged);
      ++next;
      continue;
    }
    out.add_edge(h.edges()[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Base and gap hypergraphs
// ---------------------------------------------------------------------------

namespace detail {

inline void self_check(const Hypergraph& h, int k, std::size_t edges, const char* what) {
  if (!h.is_simple() || !h.is_k_regular(k) || h.size() != edges)
    throw std::logic_error(std::string(what) + " produced an invalid hypergraph (k=" + std::to_string(k) +
                           ", order=" + std::to_string(h.order()) + ")");
}

inline Hypergraph::Edge pair_edge(GraphEdge e) { return {e.first, e.second}; }

/// H_{k,d} plus an ordered pool of pairwise-disjoint edge indices whose
/// leading r+1 entries are merged to close the gaps between consecutive
/// closed-form values.
struct BaseLayout {
  Hypergraph hypergraph;
  std::vector<std::size_t> merge_pool;
};

inline BaseLayout base_layout(int k, int d) {
  BaseLayout out{Hypergraph(d), {}};
  auto& h = out.hypergraph;

  if (d % 2 == 0) {
    // Loops plus k-1 perfect matchings; the first matching is the pool.
    for (int v = 0; v < d; ++v) h.add_edge({v});
    const auto matchings = perfect_matchings(d);
    for (int i = 0; i < k - 1; ++i) {
      for (const auto& e : matchings[static_cast<std::size_t>(i)]) {
        if (i == 0) out.merge_pool.push_back(h.size());
        h.add_edge(pair_edge(e));
      }
    }
    return out;
  }

  const auto cycles = hamiltonian_cycles(d);
  if (k % 2 == 1) {
    // Loops plus (k-1)/2 Hamiltonian cycles. Pool: the loop where e_1 and
    // e_d of the first cycle meet, then that cycle's even-labeled edges.
    for (int v = 0; v < d; ++v) h.add_edge({v});
    for (int c = 0; c < (k - 1) / 2; ++c) {
      const auto& cyc = cycles[static_cast<std::size_t>(c)];
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        if (c == 0 && j % 2 == 1 && j + 1 < cyc.size()) out.merge_pool.push_back(h.size());
        h.add_edge(pair_edge(cyc[j]));
      }
    }
    if (k >= 3) out.merge_pool.insert(out.merge_pool.begin(), static_cast<std::size_t>(cycles[0].front().first));
    return out;
  }

  // d odd, k even: take H_{k+1,d}, drop the even-labeled edges of its first
  // cycle C and the loop where e_1 and e_d meet. Pool: odd-labeled edges of C
  // except e_d.
  const auto& first = cycles[0];
  const int hub = first.front().first;
  for (int v = 0; v < d; ++v)
    if (v != hub) h.add_edge({v});
  for (int c = 0; c < k / 2; ++c) {
    const auto& cyc = cycles[static_cast<std::size_t>(c)];
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (c == 0 && j % 2 == 1) continue;  // e_2, e_4, ... (0-based odd)
      if (c == 0 && j + 1 < cyc.size()) out.merge_pool.push_back(h.size());
      h.add_edge(pair_edge(cyc[j]));
    }
  }
  return out;
}

}  // namespace detail

/// H_{k,d}: k-regular simple hypergraph on d vertices with floor(d(k+1)/2)
/// edges. Requires 1 <= k <= d and d > 2.
inline Hypergraph base_hypergraph(int k, int d) {
  if (k < 1 || k > d || d <= 2)
    throw domain_error("base_hypergraph needs 1 <= k <= d and d > 2 (k=" + std::to_string(k) +
                       ", d=" + std::to_string(d) + ")");
  auto layout = detail::base_layout(k, d);
  detail::self_check(layout.hypergraph, k, static_cast<std::size_t>(max_edges(d, k)), "base_hypergraph");
  return std::move(layout.hypergraph);
}

/// Largest r accepted by gap_hypergraph(k, d, r).
constexpr int max_gap(int k, int d) noexcept { return (d % 2 == 0 && k % 2 == 0) ? k / 2 : (k - 1) / 2; }

/// H_{k,d} with r+1 pairwise-disjoint edges merged: k-regular, simple,
/// floor(d(k+1)/2) - r edges. Requires 2 <= k, k+1 <= d, 0 <= r <= max_gap.
inline Hypergraph gap_hypergraph(int k, int d, int r) {
  if (k < 2 || k + 1 > d || d < 3)
    throw domain_error("gap_hypergraph needs 2 <= k and k+1 <= d (k=" + std::to_string(k) + ", d=" +
                       std::to_string(d) + ")");
  if (r < 0 || r > max_gap(k, d))
    throw domain_error("gap r=" + std::to_string(r) + " outside [0, " + std::to_string(max_gap(k, d)) + "]");
  auto layout = detail::base_layout(k, d);
  Hypergraph h = std::move(layout.hypergraph);
  if (r > 0) {
    if (layout.merge_pool.size() < static_cast<std::size_t>(r) + 1)
      throw std::logic_error("gap merge pool too small");
    MergePlan plan{{layout.merge_pool.begin(), layout.merge_pool.begin() + r + 1}};
    h = merge(h, plan);
  }
  detail::self_check(h, k, static_cast<std::size_t>(max_edges(d, k) - r), "gap_hypergraph");
  return h;
}

// ---------------------------------------------------------------------------
// k-vertex hypergraphs with fewer edges
// ---------------------------------------------------------------------------

struct TaggedHypergraph {
  Hypergraph hypergraph;
  std::string method;
};

namespace detail {

inline int mod(int a, int k) { return ((a % k) + k) % k; }

inline std::size_t find_edge(const Hypergraph& h, Hypergraph::Edge e) {
  std::sort(e.begin(), e.end());
  const auto it = std::find(h.edges().begin(), h.edges().end(), e);
  if (it == h.edges().end()) throw std::logic_error("merge family refers to a missing edge");
  return static_cast<std::size_t>(it - h.edges().begin());
}

/// Starting from H_{k,k}, merge families in order until exactly `target`
/// edges remain; the last family may be merged only partially. Returns the
/// label of the stage in which the target was hit.
inline TaggedHypergraph merge_down_to(int k, std::size_t target) {
  Hypergraph h = base_hypergraph(k, k);

  struct Stage {
    std::string label;
    std::vector<std::vector<Hypergraph::Edge>> families;
  };
  std::vector<Stage> stages;
  auto pair = [k](int a, int b) { return Hypergraph::Edge{mod(a, k), mod(b, k)}; };

  if (k % 2 == 1) {
    Stage first{"lemma-nk-case1.1", {}}, rest{"lemma-nk-case1.2", {}};
    for (int i = 0; i < k; ++i) {
      std::vector<Hypergraph::Edge> fam;
      for (int j = 1; j <= (k - 1) / 2; ++j) fam.push_back(pair(i - j, i + j));
      (i == 0 ? first : rest).families.push_back(std::move(fam));
    }
    stages.push_back(std::move(first));
    stages.push_back(std::move(rest));
  } else {
    Stage f{"lemma-nk-case2.1", {}}, fp{"lemma-nk-case2.2", {}}, fpp{"lemma-nk-case2.3", {}};
    for (int i = 0; i < k / 2; ++i) {
      std::vector<Hypergraph::Edge> fam;
      for (int j = 1; j <= k / 2 - 1; ++j) fam.push_back(pair(i - j, i + j));
      f.families.push_back(std::move(fam));
    }
    for (int i = 0; i < k / 2; ++i) {
      std::vector<Hypergraph::Edge> fam;
      for (int j = 1; j <= k / 2 - 2; ++j) fam.push_back(pair(i - j, i + j + 1));
      fp.families.push_back(std::move(fam));
    }
    for (int i = 0; i < k; ++i) fpp.families.push_back({{i}, pair(i + 1, i + 2)});
    stages.push_back(std::move(f));
    stages.push_back(std::move(fp));
    stages.push_back(std::move(fpp));
  }

  for (std::size_t s = 0; s < stages.size(); ++s) {
    const auto& stage = stages[s];
    for (std::size_t fi = 0; fi < stage.families.size(); ++fi) {
      const auto& fam = stage.families[fi];
      if (h.size() == target) break;
      if (fam.size() < 2) continue;
      std::size_t take = fam.size();
      if (h.size() - (take - 1) < target) take = h.size() - target + 1;
      MergePlan plan;
      for (std::size_t j = 0; j < take; ++j) plan.edge_indices.push_back(find_edge(h, fam[j]));
      h = merge(h, plan);
      if (h.size() == target) {
        std::string label = stage.label;
        // Odd k: hitting the target inside E_0 with a partial merge is the
        // short case; a full E_0 merge already belongs to the general one.
        if (k % 2 == 1 && s == 0 && take == fam.size()) label = "lemma-nk-case1.2";
        return {std::move(h), std::move(label)};
      }
    }
  }
  throw std::logic_error("merge families exhausted before reaching " + std::to_string(target) + " edges");
}

}  // namespace detail

/// k-regular simple hypergraph on d = k vertices with exactly n_edges edges,
/// for 2k <= n_edges < k(k+1)/2. Absent when the preconditions fail.
inline std::optional<Hypergraph> small_order_hypergraph(int k, int n_edges, int d) {
  if (d != k || k < 1 || n_edges < 2 * k || 2 * static_cast<std::int64_t>(n_edges) >= static_cast<std::int64_t>(k) * (k + 1))
    return std::nullopt;
  auto tagged = detail::merge_down_to(k, static_cast<std::size_t>(n_edges));
  detail::self_check(tagged.hypergraph, k, static_cast<std::size_t>(n_edges), "small_order_hypergraph");
  return std::move(tagged.hypergraph);
}

// ---------------------------------------------------------------------------
// Realization and witnesses
// ---------------------------------------------------------------------------

/// Label edge i with ground element i+1 and vertex v with the labels of its
/// edges. The result is a determining set of K_{n:k} whose associated
/// hypergraph is h with the same edge order.
inline VertexFamily realize(const Hypergraph& h, int n) {
  const auto k = h.regular_degree();
  if (!k || *k < 1) throw domain_error("realize: hypergraph is not regular");
  if (!h.is_simple()) throw domain_error("realize: hypergraph is not simple");
  const auto m = static_cast<int>(h.size());
  if (m != n && m != n - 1)
    throw domain_error("realize: hypergraph has " + std::to_string(m) + " edges, expected n or n-1 with n=" +
                       std::to_string(n));
  if (n < 2 * *k + 1) throw domain_error("realize: needs n >= 2k+1 (n=" + std::to_string(n) + ", k=" + std::to_string(*k) + ")");
  if (n > kMaxGround) throw domain_error("realize: n > 64 exceeds the word-width ceiling");

  std::vector<mask_t> labels(static_cast<std::size_t>(h.order()), 0);
  for (int i = 0; i < m; ++i)
    for (int v : h.edges()[static_cast<std::size_t>(i)]) labels[static_cast<std::size_t>(v)] |= mask_t{1} << i;

  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw domain_error("realize: two vertices lie in exactly the same edges");

  const KneserParams params(n, *k);
  std::vector<KSubset> members;
  members.reserve(labels.size());
  for (mask_t l : labels) members.emplace_back(params, l);
  return VertexFamily(params, std::move(members));
}

struct Witness {
  VertexFamily family;
  Hypergraph hypergraph;
  std::string method;
};

/// A determining set of K_{n:k}. Minimum whenever k = 1 or n >= k(k+1)/2 + 1;
/// otherwise a k-member set from the k-vertex construction.
inline Witness witness(int n, int k) {
  const KneserParams params(n, k);
  if (!params.strictly_above_half())
    throw domain_error("witness requires n >= 2k+1 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");

  if (k == 1) {
    std::vector<KSubset> members;
    for (int e = 1; e < n; ++e) members.emplace_back(params, mask_t{1} << (e - 1));
    VertexFamily fam(params, std::move(members));
    Hypergraph h(n - 1);
    for (int v = 0; v < n - 1; ++v) h.add_edge({v});
    return {std::move(fam), std::move(h), "complete-graph"};
  }

  if (in_formula_region(n, k)) {
    const auto det = det_number(n, k);
    const int d = static_cast<int>(*det.value);
    Hypergraph h;
    std::string method;
    if (det.method == DetMethod::discretes) {
      h = base_hypergraph(k, d);
      const int c = d % 2 == 0 ? 1 : (k % 2 == 1 ? 2 : 3);
      method = "discretes-case" + std::to_string(c);
    } else {
      const int r = static_cast<int>(max_edges(d, k) - (n - 1));
      h = gap_hypergraph(k, d, r);
      const int c = d % 2 == 0 ? (k % 2 == 0 ? 1 : 2) : (k % 2 == 1 ? 3 : 4);
      method = "gaps-case" + std::to_string(c);
    }
    auto fam = realize(h, n);
    return {std::move(fam), std::move(h), std::move(method)};
  }

  // 2k+1 <= n <= k(k+1)/2, which forces k >= 4.
  auto tagged = detail::merge_down_to(k, static_cast<std::size_t>(n - 1));
  detail::self_check(tagged.hypergraph, k, static_cast<std::size_t>(n - 1), "witness");
  auto fam = realize(tagged.hypergraph, n);
  return {std::move(fam), std::move(tagged.hypergraph), std::move(tagged.method)};
}

}  // namespace kneser
