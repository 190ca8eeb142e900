#pragma once

#include <atomic>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <vector>

#include "propcol/bounded_search.hpp"
#include "propcol/solvers/common.hpp"

namespace propcol {

/// Exact positive rational num/den.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Rational normalized() const {
    std::int64_t g = std::gcd(num, den);
    return g == 0 ? *this : Rational{num / g, den / g};
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
};

struct NoExcessStats {
  std::size_t direct = 0;
  std::size_t swaps = 0;
  std::size_t splits = 0;
  std::size_t shifts = 0;
  std::size_t fallbacks = 0;
};

/// Fallbacks taken by color_without_excess across the process.
inline std::atomic<std::size_t>& no_excess_fallback_counter() {
  static std::atomic<std::size_t> counter{0};
  return counter;
}

namespace detail {

class NoExcessBuilder {
 public:
  NoExcessBuilder(const Graph& g, const ListAssignment& L, NoExcessStats& stats)
      : g_(g), L_(L), stats_(stats) {}

  /// Colors exactly the vertices of W (sorted); other entries stay kUncolored.
  std::vector<Color> build(const std::vector<Vertex>& W) {
    const std::size_t n = g_.order();
    const std::size_t k = L_.k();
    std::vector<Color> f(n, kUncolored);
    if (W.size() <= k) {
      // distinct colors, greedily; each vertex sees fewer than k used ones
      std::vector<Color> taken;
      for (Vertex v : W) {
        for (Color c : L_.list(v)) {
          if (std::find(taken.begin(), taken.end(), c) == taken.end()) {
            f[v] = c;
            taken.push_back(c);
            break;
          }
        }
      }
      return f;
    }

    std::vector<char> in_w(n, 0);
    for (Vertex v : W) in_w[v] = 1;
    std::map<Color, std::size_t> cap;
    for (Vertex v : W) {
      for (Color c : L_.list(v)) ++cap[c];
    }
    for (auto& [c, e] : cap) e = ceil_div(e, k);

    const Vertex y = W.front();
    std::vector<Vertex> rest(W.begin() + 1, W.end());
    f = build(rest);

    for (int pass = 0; pass < 2; ++pass) {
      std::map<Color, std::size_t> used;
      for (Vertex v : rest) ++used[f[v]];
      auto count = [&](Color c) {
        auto it = used.find(c);
        return it == used.end() ? std::size_t{0} : it->second;
      };

      std::vector<Color> available;  // L(y) minus colors on neighbors of y
      for (Color c : L_.list(y)) {
        bool blocked = false;
        for (Vertex w : g_.neighbors(y)) {
          if (in_w[w] && f[w] == c) {
            blocked = true;
            break;
          }
        }
        if (!blocked) available.push_back(c);
      }
      for (Color c : available) {
        if (count(c) < cap[c]) {
          f[y] = c;
          ++stats_.direct;
          return f;
        }
      }

      std::optional<Color> single;  // used once, may be used twice
      for (auto& [c, e] : cap) {
        if (count(c) == 1 && e >= 2) {
          single = c;
          break;
        }
      }
      if (single) {
        if (try_swap(W, y, *single, available, f)) {
          ++stats_.swaps;
          return f;
        }
        return fallback(W);
      }

      std::vector<Color> unused_colors;
      for (auto& [c, e] : cap) {
        if (count(c) == 0) unused_colors.push_back(c);
      }
      if (unused_colors.empty() || pass == 1) return fallback(W);
      std::vector<Vertex> sources;
      for (Vertex v : W) {
        for (Color c : L_.list(v)) {
          if (std::binary_search(unused_colors.begin(), unused_colors.end(), c)) {
            sources.push_back(v);
            break;
          }
        }
      }
      AuxDigraph d = AuxDigraph::build(L_, f, &in_w);
      std::vector<char> reach = d.reachable(sources);
      if (!reach[y]) {
        std::vector<Vertex> outside;
        for (Vertex v : W) {
          if (!reach[v]) outside.push_back(v);
        }
        std::vector<Color> g2 = build(outside);
        for (Vertex v : outside) f[v] = g2[v];
        ++stats_.splits;
        return check_or_fallback(W, f);
      }
      std::vector<char> is_target(n, 0);
      is_target[y] = 1;
      for (Vertex v : rest) {
        if (count(f[v]) >= 2) is_target[v] = 1;
      }
      std::vector<Vertex> path = d.shortest_path(sources, is_target);
      if (path.size() < 2) return fallback(W);
      Color head = kUncolored;
      for (Color c : L_.list(path.front())) {
        if (std::binary_search(unused_colors.begin(), unused_colors.end(), c)) {
          head = c;
          break;
        }
      }
      shift_along(f, path, head);
      ++stats_.shifts;
      if (path.back() == y) return check_or_fallback(W, f);
      // the end of the path now carries a color used once; try again
    }
    return fallback(W);
  }

 private:
  bool try_swap(const std::vector<Vertex>& W, Vertex y, Color single,
                const std::vector<Color>& available, std::vector<Color>& f) {
    Vertex holder = kNoVertex;
    for (Vertex v : W) {
      if (v != y && f[v] == single) holder = v;
    }
    for (Vertex x : W) {
      if (x == y || x == holder || g_.adjacent(x, holder) || !L_.contains(x, single)) continue;
      if (std::find(available.begin(), available.end(), f[x]) == available.end()) continue;
      f[y] = f[x];
      f[x] = single;
      return true;
    }
    return false;
  }

  bool valid_on(const std::vector<Vertex>& W, const std::vector<Color>& f) const {
    ListAssignment sub = restrict(L_, std::span<const Vertex>(W));
    InducedSubgraph h = induced_subgraph(g_, std::span<const Vertex>(W));
    Labelling part{std::vector<Color>(W.size())};
    for (std::size_t i = 0; i < W.size(); ++i) part[i] = f[W[i]];
    if (!verify(h.graph, sub, part, VerifyMode::Proper).ok) return false;
    for (const auto& [c, u] : color_counts(part)) {
      if (u > sub.profile(c)->ceil_share()) return false;
    }
    return true;
  }

  std::vector<Color> check_or_fallback(const std::vector<Vertex>& W, const std::vector<Color>& f) {
    return valid_on(W, f) ? f : fallback(W);
  }

  std::vector<Color> fallback(const std::vector<Vertex>& W) {
    ++stats_.fallbacks;
    ++no_excess_fallback_counter();
    std::clog << "propcol: color_without_excess fell back to exhaustive search on "
              << W.size() << " vertices\n";
    ListAssignment sub = restrict(L_, std::span<const Vertex>(W));
    InducedSubgraph h = induced_subgraph(g_, std::span<const Vertex>(W));
    auto found = find_windowed_coloring(h.graph, sub, CountWindow::NoExcess,
                                        std::numeric_limits<double>::infinity());
    if (!found) throw InternalError("no coloring without excessive colors exists");
    std::vector<Color> f(g_.order(), kUncolored);
    for (std::size_t i = 0; i < W.size(); ++i) f[W[i]] = (*found)[i];
    return f;
  }

  const Graph& g_;
  const ListAssignment& L_;
  NoExcessStats& stats_;
};

}  // namespace detail

/**
 * Proper L-coloring with no excessive color, for k-assignments of graphs
 * with k >= l * Delta and n <= 2k(1 - 1/l), l >= 2.
 *
 * Works by induction on the vertex set: color G - y, then place y directly,
 * by a swap with a color used once, by splitting off the part reachable in
 * the auxiliary digraph from the unused colors, or by shifting along a
 * shortest path of that digraph. Any branch the argument does not cover
 * falls back to exhaustive search and is counted in `stats` and in
 * no_excess_fallback_counter().
 */
inline Labelling color_without_excess(const Graph& g, const ListAssignment& L, Rational l,
                                      NoExcessStats* stats = nullptr) {
  const std::size_t n = g.order();
  const auto k = static_cast<std::int64_t>(L.k());
  if (L.vertex_count() != n) throw PreconditionError("assignment does not match the graph");
  if (l.num <= 0 || l.den <= 0) throw PreconditionError("l must be positive");
  const auto delta = static_cast<std::int64_t>(g.max_degree());
  const auto order = static_cast<std::int64_t>(n);
  if (l.num < 2 * l.den) throw PreconditionError("l must be at least 2");
  if (k * l.den < l.num * delta) throw PreconditionError("needs k >= l * Delta");
  // n <= 2k(1 - 1/l)  <=>  n * num <= 2k(num - den)
  if (order * l.num > 2 * k * (l.num - l.den)) throw PreconditionError("needs n <= 2k(1 - 1/l)");

  NoExcessStats local;
  detail::NoExcessBuilder builder(g, L, stats ? *stats : local);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  Labelling f{builder.build(all)};
  require_verified(g, L, f, VerifyMode::Proper, "color_without_excess");
  for (const auto& [c, u] : color_counts(f)) {
    if (u > L.profile(c)->ceil_share()) {
      throw InternalError("color_without_excess produced an excessive color");
    }
  }
  return f;
}

}  // namespace propcol
