#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "propcol/huing.hpp"
#include "propcol/matching.hpp"
#include "propcol/solvers/common.hpp"

namespace propcol {

using Anchor = std::pair<Vertex, Color>;

/**
 * Proportional L-labelling through a perfect matching.
 *
 * Expands L so every color is well distributed, carries the huing over (the
 * slots of c on v_c take the scarce hue of c; padding slots are grouped into
 * fresh hues of k slots each), matches vertices to hues in the resulting
 * k-regular multigraph, then drops the added vertices and maps hues back to
 * colors. With an anchor (v0, c0) the matching is forced through a hue of c0
 * at v0. When the huing is good the labelling is also proper.
 */
inline Labelling proportional_labelling_via_huing(const Graph& g, const ListAssignment& L,
                                                  const Huing& h,
                                                  std::optional<Anchor> anchor = std::nullopt) {
  const std::size_t n = g.order();
  const std::size_t k = L.k();
  if (L.vertex_count() != n) throw PreconditionError("assignment does not match the graph");
  if (anchor && (anchor->first >= n || !L.contains(anchor->first, anchor->second))) {
    throw PreconditionError("anchor color is not in the anchor vertex's list");
  }
  if (!(h.project() == L)) throw PreconditionError("huing does not project onto the assignment");

  ExpansionRecord ex = well_distributed_expansion(g, L, StarMode::Shared);

  std::vector<std::vector<Color>> lists = h.hued.lists();
  Color next_hue = std::max(h.hued.max_color(), ex.assignment.max_color()) + 1;
  Color padding_hue = next_hue;
  std::size_t padding_used = 0;
  for (const auto& [c, vc] : ex.added_vertex) {
    (void)vc;
    const std::size_t r = L.profile(c)->r;
    std::optional<Color> scarce = h.scarce_hue(c);
    if (!scarce) throw InternalError("expanded color without a scarce hue");
    std::vector<Color> list(k - r, *scarce);
    for (std::size_t i = 0; i < r; ++i) {
      if (padding_used == k) {
        padding_hue = ++next_hue;
        padding_used = 0;
      }
      list.push_back(padding_hue);
      ++padding_used;
    }
    lists.push_back(std::move(list));
  }
  ListAssignment hued(k, std::move(lists), true);

  BipartiteMultigraph b = build_color_vertex_multigraph(ex.graph, hued);
  if (!b.is_regular(k)) throw InternalError("expanded hue multigraph is not regular");

  Matching m;
  if (anchor) {
    auto [v0, c0] = *anchor;
    Color h0 = kUncolored;
    for (Color hue : h.hued.list(v0)) {
      if (h.parent.at(hue) == c0) {
        h0 = hue;
        break;
      }
    }
    const auto& labels = b.right_labels();
    auto y0 = static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), h0) -
                                       labels.begin());
    m = perfect_matching_with_forced_edge(b, k, {v0, y0});
  } else {
    auto result = saturating_matching(b);
    auto* pm = std::get_if<Matching>(&result);
    if (!pm) throw InternalError("regular hue multigraph without a perfect matching");
    m = std::move(*pm);
  }

  Labelling f{std::vector<Color>(n, 0)};
  for (auto [x, y] : m) {
    if (x < n) f[x] = h.parent.at(b.right_labels()[y]);
  }
  require_verified(g, L, f, VerifyMode::ProportionalLabelling, "proportional_labelling_via_huing");
  if (is_good_huing(g, h).good) {
    require_verified(g, L, f, VerifyMode::ProportionalColoring, "proportional_labelling_via_huing");
  }
  return f;
}

using KSolver = std::function<Labelling(const Graph&, const ListAssignment&)>;

/**
 * Turns a solver for k-assignments into one for (k+1)-assignments: take a
 * proportional labelling phi from the default huing, drop phi(v) from each
 * list, and solve the resulting k-assignment.
 */
inline Labelling lift_monotone(const Graph& g, const ListAssignment& L, const KSolver& solve_k) {
  if (L.k() < 2) throw PreconditionError("lift_monotone needs lists of size at least 2");
  Labelling phi = proportional_labelling_via_huing(g, L, make_huing(L));
  std::vector<std::vector<Color>> reduced(L.vertex_count());
  for (Vertex v = 0; v < L.vertex_count(); ++v) {
    for (Color c : L.list(v)) {
      if (c != phi[v]) reduced[v].push_back(c);
    }
  }
  Labelling f = solve_k(g, ListAssignment(L.k() - 1, std::move(reduced)));
  return require_verified(g, L, f, VerifyMode::ProportionalColoring, "lift_monotone");
}

}  // namespace propcol
