#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "propcol/assignment.hpp"
#include "propcol/coloring.hpp"
#include "propcol/error.hpp"
#include "propcol/graph.hpp"

namespace propcol {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    prunes += o.prunes;
    return *this;
  }
};

/**
 * Backtracking over proper list colorings whose color counts lie in
 * per-color windows [lo, hi].
 *
 * Colors are dense indices 0..C-1 and lists are sorted. Vertices are
 * colored in ascending order and each list is tried in ascending order, so
 * solutions are produced lexicographically. Two prunes apply at every node:
 * a color that can no longer reach its lower bound with the vertices still
 * listing it, and a total outstanding demand larger than the number of
 * uncolored vertices.
 *
 * The object keeps its buffers between runs; reuse it in hot loops.
 */
class BoundedSearch {
 public:
  static constexpr std::uint32_t kUnbounded = 0xffffffffU;

  void reset(const Graph& g, std::span<const std::vector<std::uint32_t>> lists,
             std::span<const std::uint32_t> lo, std::span<const std::uint32_t> hi) {
    n_ = g.order();
    lists_ = lists;
    lo_.assign(lo.begin(), lo.end());
    hi_.assign(hi.begin(), hi.end());
    const std::size_t colors = lo_.size();
    count_.assign(colors, 0);
    supply_.assign(colors, 0);
    for (const auto& list : lists_) {
      for (auto c : list) ++supply_[c];
    }
    deficit_ = 0;
    for (std::size_t c = 0; c < colors; ++c) deficit_ += lo_[c];
    coloring_.assign(n_, 0);
    earlier_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      earlier_[v].clear();
      for (Vertex w : g.neighbors(v)) {
        if (w < v) earlier_[v].push_back(w);
      }
    }
    stats_ = {};
  }

  /// Calls visit(coloring) for each solution until it returns true.
  /// Returns whether visit asked to stop.
  template <class Visit>
  bool run(Visit&& visit) {
    return descend(0, visit);
  }

  const SearchStats& stats() const { return stats_; }

 private:
  template <class Visit>
  bool descend(Vertex v, Visit& visit) {
    ++stats_.nodes;
    if (v == n_) return visit(static_cast<const std::vector<std::uint32_t>&>(coloring_));
    const auto& list = lists_[v];
    for (auto c : list) --supply_[c];
    bool stop = false;
    const std::size_t remaining = n_ - v - 1;
    for (auto c : list) {
      if (count_[c] >= hi_[c]) {
        ++stats_.prunes;
        continue;
      }
      bool clash = false;
      for (Vertex w : earlier_[v]) {
        if (coloring_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      ++count_[c];
      const bool filled = count_[c] <= lo_[c];
      if (filled) --deficit_;
      bool feasible = deficit_ <= remaining;
      for (auto d : list) {
        if (count_[d] + supply_[d] < lo_[d]) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        coloring_[v] = c;
        stop = descend(v + 1, visit);
      } else {
        ++stats_.prunes;
      }
      if (filled) ++deficit_;
      --count_[c];
      if (stop) break;
    }
    for (auto c : list) ++supply_[c];
    return stop;
  }

  std::size_t n_ = 0;
  std::span<const std::vector<std::uint32_t>> lists_;
  std::vector<std::uint32_t> lo_, hi_, count_, supply_, coloring_;
  std::vector<std::vector<Vertex>> earlier_;
  std::size_t deficit_ = 0;
  SearchStats stats_;
};

/// Per-color count window used by the list-based searches.
enum class CountWindow {
  /// [floor(eta/k), ceil(eta/k)]
  Proportional,
  /// [0, ceil(eta/k)]
  NoExcess,
  /// [0, ceil(n/k)]
  EquitableList,
  /// [0, unbounded]: plain proper L-coloring
  Unbounded,
};

/// Product of list sizes, saturating.
inline double search_space(const ListAssignment& L) {
  return std::pow(static_cast<double>(L.k()), static_cast<double>(L.vertex_count()));
}

struct DenseInstance {
  std::vector<Color> palette;
  std::vector<std::vector<std::uint32_t>> lists;
  std::vector<std::uint32_t> lo, hi;
};

inline DenseInstance make_dense_instance(const ListAssignment& L, CountWindow window) {
  DenseInstance d;
  d.palette = L.palette();
  d.lists.resize(L.vertex_count());
  for (Vertex v = 0; v < L.vertex_count(); ++v) {
    for (Color c : L.list(v)) {
      d.lists[v].push_back(static_cast<std::uint32_t>(
          std::lower_bound(d.palette.begin(), d.palette.end(), c) - d.palette.begin()));
    }
    // multi-assignments: one entry per distinct color
    d.lists[v].erase(std::unique(d.lists[v].begin(), d.lists[v].end()), d.lists[v].end());
  }
  const std::size_t n = L.vertex_count();
  const std::size_t k = L.k();
  for (const ColorProfile& p : L.profiles()) {
    switch (window) {
      case CountWindow::Proportional:
        d.lo.push_back(static_cast<std::uint32_t>(p.floor_share()));
        d.hi.push_back(static_cast<std::uint32_t>(p.ceil_share()));
        break;
      case CountWindow::NoExcess:
        d.lo.push_back(0);
        d.hi.push_back(static_cast<std::uint32_t>(p.ceil_share()));
        break;
      case CountWindow::EquitableList:
        d.lo.push_back(0);
        d.hi.push_back(static_cast<std::uint32_t>((n + k - 1) / k));
        break;
      case CountWindow::Unbounded:
        d.lo.push_back(0);
        d.hi.push_back(BoundedSearch::kUnbounded);
        break;
    }
  }
  return d;
}

/**
 * Visits every proper L-coloring whose counts lie in the window, in
 * lexicographic order, until visit returns true. Throws ResourceError when
 * the product of list sizes exceeds `cap`.
 */
template <class Visit>
SearchStats for_each_windowed_coloring(const Graph& g, const ListAssignment& L, CountWindow window,
                                       double cap, Visit&& visit) {
  if (L.vertex_count() != g.order()) throw InputError("assignment does not match the graph order");
  if (search_space(L) > cap) {
    throw ResourceError("search space k^n = " + std::to_string(search_space(L)) +
                        " exceeds the cap " + std::to_string(cap));
  }
  DenseInstance d = make_dense_instance(L, window);
  BoundedSearch search;
  search.reset(g, d.lists, d.lo, d.hi);
  search.run([&](const std::vector<std::uint32_t>& dense) {
    Labelling f{std::vector<Color>(dense.size())};
    for (std::size_t v = 0; v < dense.size(); ++v) f[v] = d.palette[dense[v]];
    return visit(f);
  });
  return search.stats();
}

/// First windowed coloring in lexicographic order.
inline std::optional<Labelling> find_windowed_coloring(const Graph& g, const ListAssignment& L,
                                                       CountWindow window, double cap,
                                                       SearchStats* stats = nullptr) {
  std::optional<Labelling> found;
  SearchStats s = for_each_windowed_coloring(g, L, window, cap, [&](const Labelling& f) {
    found = f;
    return true;
  });
  if (stats) *stats = s;
  return found;
}

}  // namespace propcol
