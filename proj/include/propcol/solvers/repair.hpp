#pragma once

#include <optional>
#include <set>
#include <vector>

#include "propcol/solvers/common.hpp"

namespace propcol {

struct RepairStep {
  std::size_t deficient = 0;
  std::size_t excessive = 0;

  friend bool operator==(const RepairStep&, const RepairStep&) = default;
};

/// Counts before the first iteration and after each one.
struct RepairTrace {
  std::vector<RepairStep> steps;
  std::size_t iterations() const { return steps.empty() ? 0 : steps.size() - 1; }
};

namespace detail {

inline RepairStep usage_counts(const ListAssignment& L, const std::vector<std::size_t>& used,
                               std::vector<Color>* deficient_colors = nullptr) {
  RepairStep s;
  const auto palette = L.palette();
  for (std::size_t i = 0; i < palette.size(); ++i) {
    const ColorProfile& p = *L.profile(palette[i]);
    if (used[i] < p.floor_share()) {
      ++s.deficient;
      if (deficient_colors) deficient_colors->push_back(p.color);
    }
    if (used[i] > p.ceil_share()) ++s.excessive;
  }
  return s;
}

}  // namespace detail

/**
 * Repairs deficient colors of a proper L-coloring with every eta(c) < 2k and
 * at most t excessive colors. Each round shifts colors along a shortest
 * path of the auxiliary digraph from a vertex that can take a deficient
 * color to a vertex whose color is used more than its floor share. The
 * number of deficient colors drops every round and the number of excessive
 * colors never grows; the result has no deficient color and at most t
 * excessive ones.
 */
inline Labelling repair_deficiencies(const Graph& g, const ListAssignment& L, Labelling f,
                                     std::size_t t, RepairTrace* trace = nullptr) {
  const std::size_t n = g.order();
  const std::size_t k = L.k();
  if (L.vertex_count() != n) throw PreconditionError("assignment does not match the graph");
  if (L.max_eta() >= 2 * k) throw PreconditionError("repair needs eta(c) < 2k for every color");
  if (!verify(g, L, f, VerifyMode::Proper).ok) {
    throw PreconditionError("repair needs a proper L-coloring");
  }
  const auto palette = L.palette();
  auto index_of = [&](Color c) {
    return static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) -
                                    palette.begin());
  };
  std::vector<std::size_t> used(palette.size(), 0);
  for (Color c : f.colors) ++used[index_of(c)];

  std::vector<Color> deficient;
  RepairStep state = detail::usage_counts(L, used, &deficient);
  if (state.excessive > t) throw PreconditionError("coloring has more than t excessive colors");
  if (trace) trace->steps = {state};

  while (state.deficient > 0) {
    std::set<Color> deficient_set(deficient.begin(), deficient.end());
    std::vector<Vertex> sources;
    for (Vertex v = 0; v < n; ++v) {
      for (Color c : L.list(v)) {
        if (deficient_set.count(c)) {
          sources.push_back(v);
          break;
        }
      }
    }
    std::vector<char> is_target(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      is_target[v] = used[index_of(f[v])] > L.profile(f[v])->floor_share();
    }
    AuxDigraph d = AuxDigraph::build(L, f.colors);
    std::vector<Vertex> path = d.shortest_path(sources, is_target);
    if (path.empty()) throw InternalError("repair found no path to an overused color");

    Color head = kUncolored;
    for (Color c : L.list(path.front())) {
      if (deficient_set.count(c)) {
        head = c;
        break;
      }
    }
    --used[index_of(f[path.back()])];
    ++used[index_of(head)];
    shift_along(f.colors, path, head);

    deficient.clear();
    RepairStep next = detail::usage_counts(L, used, &deficient);
    if (next.deficient >= state.deficient || next.excessive > state.excessive) {
      throw InternalError("repair round did not make progress");
    }
    state = next;
    if (trace) trace->steps.push_back(state);
  }

  if (!verify(g, L, f, VerifyMode::Proper).ok) throw InternalError("repair broke properness");
  return f;
}

}  // namespace propcol
