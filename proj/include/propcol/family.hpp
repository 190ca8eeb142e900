#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "propcol/graph.hpp"

namespace propcol {

enum class FamilyName {
  Complete,            // [n]
  Star,                // [m]: center 0, leaves 1..m
  Path,                // [n]: 0-1-...-(n-1)
  Cycle,               // [n], n >= 3
  BalancedBipartite,   // [m]: sides 0..m-1 and m..2m-1
  DoubledMultipartite, // [m]: partite sets {2i, 2i+1}
  StarForest,          // [k] (k copies of K_{1,k}) or [t, m] (t copies of K_{1,m})
  CliqueUnion,         // one size per clique
};

struct FamilySpec {
  FamilyName name = FamilyName::Complete;
  std::vector<std::size_t> params;
};

inline std::string_view family_name(FamilyName name) {
  switch (name) {
    case FamilyName::Complete: return "complete";
    case FamilyName::Star: return "star";
    case FamilyName::Path: return "path";
    case FamilyName::Cycle: return "cycle";
    case FamilyName::BalancedBipartite: return "balanced_bipartite";
    case FamilyName::DoubledMultipartite: return "doubled_multipartite";
    case FamilyName::StarForest: return "star_forest";
    case FamilyName::CliqueUnion: return "clique_union";
  }
  return "?";
}

/// Accepts both underscore and dash spellings.
inline std::optional<FamilyName> parse_family_name(std::string_view text) {
  std::string s(text);
  for (char& ch : s) {
    if (ch == '-') ch = '_';
  }
  for (FamilyName f : {FamilyName::Complete, FamilyName::Star, FamilyName::Path, FamilyName::Cycle,
                       FamilyName::BalancedBipartite, FamilyName::DoubledMultipartite,
                       FamilyName::StarForest, FamilyName::CliqueUnion}) {
    if (family_name(f) == s) return f;
  }
  return std::nullopt;
}

namespace detail {

inline void add_clique(std::vector<Edge>& edges, Vertex first, std::size_t size) {
  for (Vertex u = first; u < first + size; ++u) {
    for (Vertex v = u + 1; v < first + size; ++v) edges.push_back(Edge{u, v});
  }
}

inline void add_star(std::vector<Edge>& edges, Vertex center, std::size_t leaves) {
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back(Edge{center, center + i});
}

inline void require_arity(const FamilySpec& spec, std::size_t arity) {
  if (spec.params.size() != arity) {
    throw InputError(std::string(family_name(spec.name)) + " takes " + std::to_string(arity) +
                     " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

inline void require_positive(const FamilySpec& spec) {
  for (std::size_t p : spec.params) {
    if (p == 0) throw InputError(std::string(family_name(spec.name)) + " parameters must be positive");
  }
}

}  // namespace detail

/// Builds a named family with a fixed vertex numbering (see FamilyName).
inline Graph build_family(const FamilySpec& spec) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  detail::require_positive(spec);
  switch (spec.name) {
    case FamilyName::Complete:
      detail::require_arity(spec, 1);
      n = spec.params[0];
      detail::add_clique(edges, 0, n);
      break;
    case FamilyName::Star:
      detail::require_arity(spec, 1);
      n = spec.params[0] + 1;
      detail::add_star(edges, 0, spec.params[0]);
      break;
    case FamilyName::Path:
      detail::require_arity(spec, 1);
      n = spec.params[0];
      for (Vertex v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
      break;
    case FamilyName::Cycle:
      detail::require_arity(spec, 1);
      n = spec.params[0];
      if (n < 3) throw InputError("cycle needs at least 3 vertices");
      for (Vertex v = 0; v < n; ++v) edges.push_back(Edge{v, (v + 1) % n});
      break;
    case FamilyName::BalancedBipartite: {
      detail::require_arity(spec, 1);
      std::size_t m = spec.params[0];
      n = 2 * m;
      for (Vertex a = 0; a < m; ++a) {
        for (Vertex b = m; b < n; ++b) edges.push_back(Edge{a, b});
      }
      break;
    }
    case FamilyName::DoubledMultipartite: {
      detail::require_arity(spec, 1);
      n = 2 * spec.params[0];
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (u / 2 != v / 2) edges.push_back(Edge{u, v});
        }
      }
      break;
    }
    case FamilyName::StarForest: {
      if (spec.params.size() != 1 && spec.params.size() != 2) {
        throw InputError("star_forest takes [k] or [copies, leaves]");
      }
      std::size_t copies = spec.params[0];
      std::size_t leaves = spec.params.size() == 2 ? spec.params[1] : spec.params[0];
      for (std::size_t i = 0; i < copies; ++i) {
        detail::add_star(edges, n, leaves);
        n += leaves + 1;
      }
      break;
    }
    case FamilyName::CliqueUnion:
      if (spec.params.empty()) throw InputError("clique_union needs at least one clique size");
      for (std::size_t size : spec.params) {
        detail::add_clique(edges, n, size);
        n += size;
      }
      break;
  }
  return Graph::from_edges(n, edges);
}

}  // namespace propcol
