#pragma once

#include <algorithm>
#include <vector>

#include "propcol/solvers/common.hpp"

namespace propcol {

namespace detail {

/// Smallest color of L(v) outside `taken`, or kUncolored.
inline Color first_free(const ListAssignment& L, Vertex v, const std::vector<Color>& taken) {
  for (Color c : L.list(v)) {
    if (std::find(taken.begin(), taken.end(), c) == taken.end()) return c;
  }
  return kUncolored;
}

inline Labelling order_bound_large_k(const ListAssignment& L) {
  const std::size_t n = L.vertex_count();
  const std::size_t k = L.k();
  // With k = n a color in every list must be used exactly once.
  std::vector<Color> forced;
  for (const ColorProfile& p : L.profiles()) {
    if (p.eta >= k) forced.push_back(p.color);
  }
  Labelling f{std::vector<Color>(n, kUncolored)};
  std::vector<Color> taken;
  for (std::size_t i = 0; i < forced.size(); ++i) {
    f[i] = forced[i];
    taken.push_back(forced[i]);
  }
  for (Vertex v = forced.size(); v < n; ++v) {
    f[v] = first_free(L, v, taken);
    taken.push_back(f[v]);
  }
  return f;
}

inline Labelling order_bound_one_less(const Graph& g, const ListAssignment& L) {
  const std::size_t n = L.vertex_count();
  const std::size_t k = L.k();
  Labelling f{std::vector<Color>(n, kUncolored)};
  if (k == 1) {
    // two nonadjacent vertices, each with its single color
    f[0] = L.list(0)[0];
    f[1] = L.list(1)[0];
    return f;
  }
  // a nonadjacent pair, lexicographically first
  Vertex a = kNoVertex, b = kNoVertex;
  for (Vertex u = 0; u < n && a == kNoVertex; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) {
        a = u;
        b = v;
        break;
      }
    }
  }
  if (L.is_constant()) {
    const auto& list = L.list(0);
    f[a] = f[b] = list[0];
    std::size_t next = 1;
    for (Vertex v = 0; v < n; ++v) {
      if (v != a && v != b) f[v] = list[next++];
    }
    return f;
  }

  // colors every proportional coloring must use
  std::vector<Color> forced;
  for (const ColorProfile& p : L.profiles()) {
    if (p.eta >= k) forced.push_back(p.color);
  }
  const std::size_t m = forced.size();
  if (m == k + 1) {
    // Every k-subset of the k+1 colors is the list of exactly one vertex;
    // the vertex missing forced[i] takes forced[i+1], the last one forced[0].
    for (Vertex v = 0; v < n; ++v) {
      std::size_t i = 0;
      while (i < m && L.contains(v, forced[i])) ++i;
      f[v] = forced[(i + 1) % m];
    }
    return f;
  }

  std::vector<Vertex> holder(m, kNoVertex);
  std::vector<char> placed(n, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (Vertex v = 0; v < n; ++v) {
      if (!placed[v] && L.contains(v, forced[j])) {
        holder[j] = v;
        placed[v] = 1;
        f[v] = forced[j];
        break;
      }
    }
    if (holder[j] == kNoVertex) throw InternalError("forced color has no free vertex");
  }
  auto without_forced = [&](Vertex v) {
    std::vector<Color> out;
    for (Color c : L.list(v)) {
      if (!std::binary_search(forced.begin(), forced.end(), c)) out.push_back(c);
    }
    return out;
  };
  // Distinct colors outside the forced set on the unplaced vertices.
  auto fill_rest = [&]() {
    std::vector<Vertex> rest;
    std::vector<std::vector<Color>> lists;
    for (Vertex v = 0; v < n; ++v) {
      if (!placed[v]) {
        rest.push_back(v);
        lists.push_back(without_forced(v));
      }
    }
    auto sdr = distinct_representatives(lists);
    if (!sdr) return false;
    for (std::size_t i = 0; i < rest.size(); ++i) f[rest[i]] = (*sdr)[i];
    return true;
  };
  if (fill_rest()) return f;

  // The reduced lists are all the same set B, so every unplaced vertex has
  // list B plus all forced colors. Hand a forced color whose holder has a
  // different list to an unplaced vertex and free the holder.
  Vertex u = 0;
  while (placed[u]) ++u;
  const auto common = L.list(u);
  for (std::size_t i = 0; i < m; ++i) {
    if (std::ranges::equal(L.list(holder[i]), common)) continue;
    f[u] = forced[i];
    placed[u] = 1;
    placed[holder[i]] = 0;
    f[holder[i]] = kUncolored;
    if (fill_rest()) return f;
    break;
  }
  throw InternalError("no distinct representatives after the swap");
}

}  // namespace detail

/**
 * Proportional L-coloring when k >= n, or when k = n - 1 and G is not
 * complete.
 */
inline Labelling solve_order_bound(const Graph& g, const ListAssignment& L) {
  const std::size_t n = g.order();
  const std::size_t k = L.k();
  if (L.vertex_count() != n) throw PreconditionError("assignment does not match the graph");
  Labelling f;
  if (k >= n) {
    f = detail::order_bound_large_k(L);
  } else if (k + 1 == n && !g.is_complete()) {
    f = detail::order_bound_one_less(g, L);
  } else {
    throw PreconditionError("order bound needs k >= n, or k = n - 1 on a non-complete graph");
  }
  return require_verified(g, L, f, VerifyMode::ProportionalColoring, "solve_order_bound");
}

}  // namespace propcol
