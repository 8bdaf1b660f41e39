#pragma once

// Command-line front end. Exit codes: 0 success, 2 domain or input error,
// 3 resource guard exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kneser/io.hpp"
#include "kneser/kneser.hpp"

namespace kneser::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGuard = 3;

namespace detail {

inline json read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw domain_error("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw domain_error(std::string("malformed JSON: ") + e.what());
  }
}

/// Hypergraph document, witness document, or vertex family.
inline Hypergraph hypergraph_from_document(const json& doc) {
  if (doc.is_object() && doc.contains("hypergraph")) return hypergraph_from_json(doc.at("hypergraph"));
  if (doc.is_object() && doc.contains("order")) return hypergraph_from_json(doc);
  if (doc.is_object() && doc.contains("vertices")) return hypergraph_of(family_from_json(doc)).hypergraph;
  throw domain_error("expected a hypergraph, witness or vertex-family document");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determining sets and determining numbers of Kneser graphs", "kneser"};
  app.require_subcommand(1);

  int n = 0, k = 0, d = 0;
  int max_d_search = 5;
  unsigned jobs = 1;
  std::optional<int> max_size;
  std::string path, format = "json";

  auto* det = app.add_subcommand("det", "Determining number (exact value or bounds)");
  det->add_option("n", n)->required();
  det->add_option("k", k)->required();

  auto* wit = app.add_subcommand("witness", "Explicit determining set with its hypergraph");
  wit->add_option("n", n)->required();
  wit->add_option("k", k)->required();

  auto* ver = app.add_subcommand("verify", "Check a vertex family (file or - for stdin)");
  ver->add_option("file", path)->required();

  auto* en = app.add_subcommand("enumerate", "All Kneser graphs with determining number d");
  en->add_option("d", d)->required();
  en->add_option("--max-d-search", max_d_search, "Largest d the search may classify (5, or 6)");
  en->add_option("--jobs", jobs, "Worker threads for existence queries");

  auto* orc = app.add_subcommand("oracle", "Brute-force determining number");
  orc->add_option("n", n)->required();
  orc->add_option("k", k)->required();
  orc->add_option("--max-size", max_size, "Largest family size to try (default n-k)");

  auto* exp = app.add_subcommand("export", "Render a hypergraph as JSON or DOT");
  exp->add_option("file", path)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  std::vector<const char*> argv{"kneser"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (det->parsed()) {
      out << to_json(n, k, det_number(n, k)).dump() << "\n";
    } else if (wit->parsed()) {
      out << to_json(witness(n, k)).dump() << "\n";
    } else if (ver->parsed()) {
      const auto family = family_from_json(detail::read_document(path, in));
      out << to_json(is_determining_pairs(family)).dump() << "\n";
    } else if (en->parsed()) {
      FixedDetOptions opts;
      opts.max_supported = max_d_search;
      opts.jobs = jobs;
      const auto report = enumerate_fixed_det(d, opts);
      json arr = json::array();
      for (const auto& e : report.entries) arr.push_back(to_json(e, d));
      out << arr.dump() << "\n";
      err << "candidates with k >= 2: " << report.candidates << " (" << report.formula_candidates
          << " in the closed-form region)\n";
    } else if (orc->parsed()) {
      const int cap = max_size.value_or(n - k);
      const auto value = oracle_det(n, k, cap);
      json o{{"n", n}, {"k", k}, {"max_size", cap}, {"det", nullptr}};
      if (value) o["det"] = *value;
      out << o.dump() << "\n";
    } else if (exp->parsed()) {
      const auto h = detail::hypergraph_from_document(detail::read_document(path, in));
      if (format == "dot")
        out << to_dot(h);
      else
        out << to_json(h).dump() << "\n";
    }
  } catch (const guard_error& e) {
    err << e.what() << "\n";
    return kExitGuard;
  } catch (const domain_error& e) {
    err << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace kneser::cli
