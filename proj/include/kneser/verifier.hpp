#pragma once

// Determining-set tests for K_{n:k} with n >= 2k+1.
//
// Two independent criteria are offered and must always agree:
//  - pairs: no two ground elements share an incidence pattern;
//  - hypergraph: the associated hypergraph H_S is simple with n or n-1 edges.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kneser/core.hpp"

namespace kneser {

struct Verdict {
  bool determining = false;
  /// Lexicographically least pair (a, b), a < b, of 1-based ground elements
  /// whose incidence patterns coincide. Absent iff determining.
  std::optional<std::pair<int, int>> violation;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// H_S together with the ground element that produced each edge.
struct AssociatedHypergraph {
  Hypergraph hypergraph;
  std::vector<int> edge_element;  ///< edge index -> 1-based ground element
};

namespace detail {

inline void require_above_half(const KneserParams& p) {
  if (!p.strictly_above_half())
    throw domain_error("determining-set criteria require n >= 2k+1 (n=" + std::to_string(p.n) +
                       ", k=" + std::to_string(p.k) + ")");
}

}  // namespace detail

inline Verdict is_determining_pairs(const VertexFamily& family) {
  detail::require_above_half(family.params());
  const int n = family.params().n;
  std::vector<IncidencePattern> patterns;
  patterns.reserve(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) patterns.push_back(incidence_pattern(family, e));

  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (patterns[static_cast<std::size_t>(a - 1)] == patterns[static_cast<std::size_t>(b - 1)])
        return Verdict{false, std::make_pair(a, b)};
  return Verdict{true, std::nullopt};
}

/// One vertex per member; one edge per ground element that occurs in some
/// member, listed by ascending element label.
inline AssociatedHypergraph hypergraph_of(const VertexFamily& family) {
  if (family.empty()) throw domain_error("hypergraph_of needs a nonempty family");
  AssociatedHypergraph out{Hypergraph(static_cast<int>(family.size())), {}};
  for (int e = 1; e <= family.params().n; ++e) {
    Hypergraph::Edge edge;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (family.members()[i].contains(e)) edge.push_back(static_cast<int>(i));
    if (edge.empty()) continue;
    out.hypergraph.add_edge(std::move(edge));
    out.edge_element.push_back(e);
  }
  return out;
}

/// Same decision as is_determining_pairs, reached through H_S. When the
/// answer is negative the reported pair is recovered from repeated edges or,
/// failing that, from the (at least two) elements missing from every member.
inline Verdict is_determining_hypergraph(const VertexFamily& family) {
  detail::require_above_half(family.params());
  const int n = family.params().n;
  if (family.empty()) return Verdict{false, std::make_pair(1, 2)};

  const auto assoc = hypergraph_of(family);
  const auto& h = assoc.hypergraph;
  const auto edges = static_cast<int>(h.size());
  const bool ok = h.is_simple() && h.is_k_regular(family.params().k) && (edges == n || edges == n - 1);
  if (ok) return Verdict{true, std::nullopt};

  // Group ground elements by their edge (missing elements share the empty edge).
  std::map<Hypergraph::Edge, std::vector<int>> classes;
  std::size_t next = 0;
  for (int e = 1; e <= n; ++e) {
    if (next < assoc.edge_element.size() && assoc.edge_element[next] == e) {
      classes[h.edges()[next]].push_back(e);
      ++next;
    } else {
      classes[Hypergraph::Edge{}].push_back(e);
    }
  }
  std::optional<std::pair<int, int>> best;
  for (const auto& [edge, elems] : classes) {
    if (elems.size() < 2) continue;
    const std::pair<int, int> cand{elems[0], elems[1]};
    if (!best || cand < *best) best = cand;
  }
  return Verdict{false, best};
}

}  // namespace kneser
