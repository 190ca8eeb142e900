#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "propcol/error.hpp"

namespace propcol {

using Vertex = std::size_t;
using Color = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Unordered vertex pair, stored with first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Finite simple undirected graph on vertices 0..n-1.
 *
 * Immutable once built. Edges are kept sorted lexicographically; each vertex
 * also carries a sorted neighbor list and an adjacency bitset row.
 */
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes. Throws InputError on loops, duplicates or
  /// out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.rows_.assign(n * g.words_, 0);
    g.neighbors_.assign(n, {});
    g.edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
      if (raw.first >= n || raw.second >= n) {
        throw InputError("edge (" + std::to_string(raw.first) + "," + std::to_string(raw.second) +
                         ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      }
      if (raw.first == raw.second) {
        throw InputError("loop at vertex " + std::to_string(raw.first));
      }
      Edge e{std::min(raw.first, raw.second), std::max(raw.first, raw.second)};
      if (g.adjacent(e.first, e.second)) {
        throw InputError("duplicate edge (" + std::to_string(e.first) + "," +
                         std::to_string(e.second) + ")");
      }
      g.set_bit(e.first, e.second);
      g.set_bit(e.second, e.first);
      g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (const Edge& e : g.edges_) {
      g.neighbors_[e.first].push_back(e.second);
      g.neighbors_[e.second].push_back(e.first);
    }
    for (auto& row : g.neighbors_) std::sort(row.begin(), row.end());
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static Graph edgeless(std::size_t n) { return from_edges(n, std::span<const Edge>{}); }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& row : neighbors_) best = std::max(best, row.size());
    return best;
  }

  bool is_complete() const { return 2 * edges_.size() == n_ * (n_ == 0 ? 0 : n_ - 1); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void set_bit(Vertex u, Vertex v) { rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
};

/// Convenience wrapper taking (u, v) pairs.
inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back(Edge{u, v});
  return Graph::from_edges(n, edges);
}

/// Blocks are laid out in order; part i's vertex v becomes offset_i + v.
inline Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (const Graph& part : parts) {
    for (const Edge& e : part.edges()) edges.push_back(Edge{e.first + n, e.second + n});
    n += part.order();
  }
  return Graph::from_edges(n, edges);
}

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

struct InducedSubgraph {
  Graph graph;
  /// old vertex -> new vertex, kNoVertex when dropped.
  std::vector<Vertex> old_to_new;
  /// new vertex -> old vertex, ascending.
  std::vector<Vertex> new_to_old;
};

/// Kept vertices are renumbered in ascending order of their old index.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), kNoVertex);
  out.new_to_old.assign(keep.begin(), keep.end());
  std::sort(out.new_to_old.begin(), out.new_to_old.end());
  out.new_to_old.erase(std::unique(out.new_to_old.begin(), out.new_to_old.end()),
                       out.new_to_old.end());
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
    Vertex old = out.new_to_old[i];
    if (old >= g.order()) {
      throw InputError("vertex " + std::to_string(old) + " is not in the graph");
    }
    out.old_to_new[old] = i;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = out.old_to_new[e.first];
    Vertex b = out.old_to_new[e.second];
    if (a != kNoVertex && b != kNoVertex) edges.push_back(Edge{a, b});
  }
  out.graph = Graph::from_edges(out.new_to_old.size(), edges);
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::initializer_list<Vertex> keep) {
  return induced_subgraph(g, std::span<const Vertex>(keep.begin(), keep.size()));
}

/// Connected components, each sorted, listed by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace propcol
