#pragma once

// JSON shapes (1-based labels throughout) and DOT rendering.
//
//   KSubset      [e1, e2, ...]                      ascending
//   VertexFamily {"n":int, "k":int, "vertices":[[...], ...]}
//   Hypergraph   {"order":int, "edges":[[...], ...]} vertices 1..order

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kneser/constructions.hpp"
#include "kneser/core.hpp"
#include "kneser/detnum.hpp"
#include "kneser/enumeration.hpp"
#include "kneser/verifier.hpp"

namespace kneser {

using json = nlohmann::json;

namespace detail {

inline int require_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw domain_error(std::string("expected integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

inline std::vector<std::vector<int>> require_lists(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw domain_error(std::string("expected array field \"") + key + "\"");
  std::vector<std::vector<int>> out;
  for (const auto& row : j.at(key)) {
    if (!row.is_array()) throw domain_error(std::string("\"") + key + "\" entries must be arrays of integers");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw domain_error(std::string("\"") + key + "\" entries must be arrays of integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

inline json to_json(const KSubset& v) { return v.elements(); }

inline json to_json(const VertexFamily& f) {
  json vertices = json::array();
  for (const auto& m : f.members()) vertices.push_back(to_json(m));
  return {{"n", f.params().n}, {"k", f.params().k}, {"vertices", std::move(vertices)}};
}

inline json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges()) {
    json edge = json::array();
    for (int v : e) edge.push_back(v + 1);
    edges.push_back(std::move(edge));
  }
  return {{"order", h.order()}, {"edges", std::move(edges)}};
}

inline json to_json(const Verdict& v) {
  json out{{"determining", v.determining}, {"violation", nullptr}};
  if (v.violation) out["violation"] = {v.violation->first, v.violation->second};
  return out;
}

inline json to_json(int n, int k, const DetResult& r) {
  json out{{"n", n}, {"k", k}, {"lower", r.lower}, {"upper", r.upper},
           {"method", std::string(to_string(r.method))}, {"value", nullptr}};
  if (r.value) out["value"] = *r.value;
  return out;
}

/// The family's own keys plus "hypergraph" and "method", so that the output
/// is itself a valid VertexFamily document.
inline json to_json(const Witness& w) {
  json out = to_json(w.family);
  out["hypergraph"] = to_json(w.hypergraph);
  out["method"] = w.method;
  return out;
}

inline json to_json(const FixedDetEntry& e, int det) {
  return {{"n", e.n}, {"k", e.k}, {"det", det}, {"resolved_by", std::string(to_string(e.resolved_by))}};
}

inline VertexFamily family_from_json(const json& j) {
  const KneserParams params(detail::require_int(j, "n"), detail::require_int(j, "k"));
  return VertexFamily::from_lists(params, detail::require_lists(j, "vertices"));
}

inline Hypergraph hypergraph_from_json(const json& j) {
  const int order = detail::require_int(j, "order");
  auto edges = detail::require_lists(j, "edges");
  for (auto& e : edges)
    for (int& v : e) --v;
  return Hypergraph(order, std::move(edges));
}

/// Bipartite incidence rendering: one node per vertex (v1..), one per edge
/// (e1..), one arc per incidence. One statement per line.
inline std::string to_dot(const Hypergraph& h) {
  std::ostringstream os;
  os << "graph hypergraph {\n";
  for (int v = 0; v < h.order(); ++v) os << "  v" << v + 1 << " [shape=circle];\n";
  for (std::size_t i = 0; i < h.size(); ++i) os << "  e" << i + 1 << " [shape=box];\n";
  for (std::size_t i = 0; i < h.size(); ++i)
    for (int v : h.edges()[i]) os << "  e" << i + 1 << " -- v" << v + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kneser
