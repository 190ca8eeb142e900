#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "propcol/assignment.hpp"
#include "propcol/coloring.hpp"
#include "propcol/error.hpp"
#include "propcol/graph.hpp"
#include "propcol/matching.hpp"

namespace propcol {

inline constexpr Color kUncolored = std::numeric_limits<Color>::max();

/// Throws InternalError unless f verifies in `mode`. Every solver passes its
/// result through here before returning it.
inline const Labelling& require_verified(const Graph& g, const ListAssignment& L,
                                         const Labelling& f, VerifyMode mode,
                                         const char* solver) {
  Verdict v = verify(g, L, f, mode);
  if (!v.ok) {
    throw InternalError(std::string(solver) + " produced a labelling that fails " +
                        std::string(mode_name(mode)) + " (" +
                        std::to_string(v.violations.size()) + " violations)");
  }
  return f;
}

/**
 * Digraph on V(G) with an arc u -> v whenever u is colored and f(u) is in
 * L(v). Loops are kept. Uncolored vertices (kUncolored) have no out-arcs.
 */
struct AuxDigraph {
  std::vector<std::vector<Vertex>> out;
  std::vector<std::vector<Vertex>> in;

  static AuxDigraph build(const ListAssignment& L, const std::vector<Color>& f,
                          const std::vector<char>* active = nullptr) {
    const std::size_t n = L.vertex_count();
    AuxDigraph d;
    d.out.assign(n, {});
    d.in.assign(n, {});
    for (Vertex u = 0; u < n; ++u) {
      if (f[u] == kUncolored || (active && !(*active)[u])) continue;
      const ColorProfile* p = L.profile(f[u]);
      if (!p) continue;
      for (Vertex v : p->support) {
        if (active && !(*active)[v]) continue;
        d.out[u].push_back(v);
        d.in[v].push_back(u);
      }
    }
    return d;
  }

  std::size_t out_degree(Vertex u) const { return out[u].size(); }

  /// Vertices reachable from `sources` (paths of length 0 included).
  std::vector<char> reachable(const std::vector<Vertex>& sources) const {
    std::vector<char> seen(out.size(), 0);
    std::vector<Vertex> stack(sources.begin(), sources.end());
    for (Vertex s : sources) seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : out[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return seen;
  }

  /**
   * Lexicographically smallest among the shortest directed paths from a
   * vertex in `sources` to a vertex with is_target set. Empty if none.
   */
  std::vector<Vertex> shortest_path(const std::vector<Vertex>& sources,
                                    const std::vector<char>& is_target) const {
    const std::size_t n = out.size();
    constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
    // distance to the nearest target, by BFS along reversed arcs
    std::vector<std::size_t> dist(n, kFar);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
      if (is_target[v]) {
        dist[v] = 0;
        queue.push_back(v);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex u : in[v]) {
        if (dist[u] == kFar) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    Vertex start = kNoVertex;
    for (Vertex s : sources) {
      if (dist[s] == kFar) continue;
      if (start == kNoVertex || dist[s] < dist[start] || (dist[s] == dist[start] && s < start)) {
        start = s;
      }
    }
    if (start == kNoVertex) return {};
    std::vector<Vertex> path{start};
    while (dist[path.back()] > 0) {
      Vertex cur = path.back();
      Vertex next = kNoVertex;
      for (Vertex v : out[cur]) {
        if (dist[v] + 1 == dist[cur] && (next == kNoVertex || v < next)) next = v;
      }
      path.push_back(next);
    }
    return path;
  }
};

/**
 * Moves colors one step along `path` (v_i takes the old color of v_{i-1})
 * and gives the first vertex `head_color`.
 */
inline void shift_along(std::vector<Color>& f, const std::vector<Vertex>& path, Color head_color) {
  for (std::size_t i = path.size(); i-- > 1;) f[path[i]] = f[path[i - 1]];
  f[path.front()] = head_color;
}

/**
 * Pairwise distinct colors for `vertices`, each from its own list, via a
 * saturating matching. nullopt when Hall's condition fails.
 */
inline std::optional<std::vector<Color>> distinct_representatives(
    const std::vector<std::vector<Color>>& lists) {
  std::vector<Color> colors;
  for (const auto& l : lists) colors.insert(colors.end(), l.begin(), l.end());
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  BipartiteMultigraph b(lists.size(), colors);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (Color c : lists[i]) {
      auto y = static_cast<std::size_t>(std::lower_bound(colors.begin(), colors.end(), c) -
                                        colors.begin());
      b.set_mult(i, y, 1);
    }
  }
  auto result = saturating_matching(b);
  auto* m = std::get_if<Matching>(&result);
  if (!m) return std::nullopt;
  std::vector<Color> out(lists.size());
  for (auto [x, y] : *m) out[x] = colors[y];
  return out;
}

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace propcol
