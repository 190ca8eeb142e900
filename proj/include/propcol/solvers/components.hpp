#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "propcol/huing.hpp"
#include "propcol/solvers/huing_labelling.hpp"

namespace propcol {

/// Component sizes of G[V_c] per color, for graphs whose components have
/// at most k vertices.
struct ComponentProfile {
  /// a[c][j]: number of components of G[V_c] with j vertices (index 0 unused).
  std::map<Color, std::vector<std::size_t>> a;
  /// delta(c) = -a_1 + sum_{j >= 2} (k - j) a_j
  std::map<Color, std::int64_t> delta;
  /// sum of max(delta(c), 0)
  std::int64_t sigma = 0;
};

inline std::size_t largest_component(const Graph& g) {
  std::size_t best = 0;
  for (const auto& comp : components(g)) best = std::max(best, comp.size());
  return best;
}

inline ComponentProfile component_profile(const Graph& g, const ListAssignment& L) {
  const std::size_t k = L.k();
  if (largest_component(g) > k) throw PreconditionError("a component has more than k vertices");
  ComponentProfile out;
  for (const ColorProfile& p : L.profiles()) {
    InducedSubgraph h = induced_subgraph(g, std::span<const Vertex>(p.support));
    std::vector<std::size_t> a(k + 1, 0);
    for (const auto& comp : components(h.graph)) ++a[comp.size()];
    std::int64_t d = -static_cast<std::int64_t>(a[1]);
    for (std::size_t j = 2; j <= k; ++j) {
      d += static_cast<std::int64_t>((k - j) * a[j]);
    }
    out.a[p.color] = std::move(a);
    out.delta[p.color] = d;
    out.sigma += std::max<std::int64_t>(d, 0);
  }
  return out;
}

/**
 * Good huing for sigma = 0: every nontrivial component of G[V_c] shares one
 * hue with k - j isolated vertices of V_c; leftover isolated vertices are
 * grouped k at a time.
 */
inline Huing component_huing(const Graph& g, const ListAssignment& L) {
  const std::size_t k = L.k();
  HueGrouping grouping;
  for (const ColorProfile& p : L.profiles()) {
    InducedSubgraph h = induced_subgraph(g, std::span<const Vertex>(p.support));
    std::vector<Vertex> isolated;
    std::vector<std::vector<Vertex>> nontrivial;
    for (const auto& comp : components(h.graph)) {
      if (comp.size() == 1) {
        isolated.push_back(h.new_to_old[comp[0]]);
      } else {
        std::vector<Vertex> orig;
        for (Vertex v : comp) orig.push_back(h.new_to_old[v]);
        nontrivial.push_back(std::move(orig));
      }
    }
    std::sort(isolated.begin(), isolated.end());
    std::size_t next_isolated = 0;
    HueBlocks blocks;
    for (const auto& comp : nontrivial) {
      std::vector<Slot> block;
      for (Vertex v : comp) block.push_back(Slot{v, 0});
      for (std::size_t i = comp.size(); i < k; ++i) {
        if (next_isolated == isolated.size()) {
          throw PreconditionError("too few isolated vertices for a component hue");
        }
        block.push_back(Slot{isolated[next_isolated++], 0});
      }
      blocks.push_back(std::move(block));
    }
    while (next_isolated < isolated.size()) {
      std::vector<Slot> block;
      while (block.size() < k && next_isolated < isolated.size()) {
        block.push_back(Slot{isolated[next_isolated++], 0});
      }
      blocks.push_back(std::move(block));
    }
    grouping[p.color] = std::move(blocks);
  }
  return make_huing(L, grouping);
}

struct ComponentsTrace {
  /// sigma before each augmentation and at the final instance
  std::vector<std::int64_t> sigma;
};

/**
 * Proportional L-coloring of a graph whose components have at most k
 * vertices. While sigma > 0, k isolated vertices with lists
 * {z_1, ..., z_{k-1}, c} (fresh z's, delta(c) > 0) are added, which lowers
 * sigma by at least one; at sigma = 0 the component huing is good and the
 * matching labelling is a coloring. The added vertices are dropped at the
 * end.
 */
inline Labelling solve_components(const Graph& g, const ListAssignment& L,
                                  ComponentsTrace* trace = nullptr) {
  if (L.vertex_count() != g.order()) throw PreconditionError("assignment does not match the graph");
  const std::size_t k = L.k();
  Graph cur_g = g;
  ListAssignment cur_l = L;
  ComponentProfile prof = component_profile(cur_g, cur_l);
  if (trace) trace->sigma = {prof.sigma};
  while (prof.sigma > 0) {
    Color c = 0;
    for (const auto& [color, d] : prof.delta) {
      if (d > 0) {
        c = color;
        break;
      }
    }
    Color z = cur_l.max_color() + 1;
    std::vector<Color> extra;
    for (std::size_t i = 0; i + 1 < k; ++i) extra.push_back(z + static_cast<Color>(i));
    extra.push_back(c);
    std::vector<std::vector<Color>> lists = cur_l.lists();
    for (std::size_t i = 0; i < k; ++i) lists.push_back(extra);
    cur_g = disjoint_union({cur_g, Graph::edgeless(k)});
    cur_l = ListAssignment(k, std::move(lists));
    ComponentProfile next = component_profile(cur_g, cur_l);
    if (next.sigma >= prof.sigma) throw InternalError("augmentation did not lower sigma");
    prof = std::move(next);
    if (trace) trace->sigma.push_back(prof.sigma);
  }
  Huing h = component_huing(cur_g, cur_l);
  if (!is_good_huing(cur_g, h).good) throw InternalError("component huing is not good");
  Labelling big = proportional_labelling_via_huing(cur_g, cur_l, h);
  Labelling f{std::vector<Color>(big.colors.begin(),
                                 big.colors.begin() + static_cast<std::ptrdiff_t>(g.order()))};
  return require_verified(g, L, f, VerifyMode::ProportionalColoring, "solve_components");
}

}  // namespace propcol
