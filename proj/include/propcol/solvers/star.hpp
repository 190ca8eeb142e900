#pragma once

#include "propcol/family.hpp"
#include "propcol/huing.hpp"
#include "propcol/solvers/huing_labelling.hpp"
#include "propcol/solvers/order_bound.hpp"
#include "propcol/solvers/repair.hpp"

namespace propcol {

/**
 * Proportional L-coloring of K_{1,m} (center 0, leaves 1..m) for any
 * k-assignment with k >= 1 + ceil(m/2).
 *
 * If some center color a has eta(a) <= k, a labelling anchored at (0, a)
 * is already proper. Otherwise the center takes c1, two leaves take c2, one
 * leaf each takes c3..ck, the remaining leaves get distinct colors outside
 * {c1, c2}, and repair_deficiencies removes the deficient colors.
 */
inline Labelling solve_star(std::size_t m, const ListAssignment& L) {
  const Graph g = build_family({FamilyName::Star, {m}});
  const std::size_t k = L.k();
  if (L.vertex_count() != m + 1) throw PreconditionError("assignment does not match K_{1,m}");
  if (k < 1 + ceil_div(m, 2)) throw PreconditionError("star solver needs k >= 1 + ceil(m/2)");
  if (k >= m) return solve_order_bound(g, L);

  const auto& center = L.list(0);
  for (Color a : center) {
    if (L.eta(a) <= k) {
      Labelling f = proportional_labelling_via_huing(g, L, make_huing(L), Anchor{0, a});
      return require_verified(g, L, f, VerifyMode::ProportionalColoring, "solve_star");
    }
  }

  Labelling f{std::vector<Color>(m + 1, kUncolored)};
  f[0] = center[0];
  auto take_leaf = [&](Color c) {
    for (Vertex z = 1; z <= m; ++z) {
      if (f[z] == kUncolored && L.contains(z, c)) {
        f[z] = c;
        return;
      }
    }
    throw InternalError("no free leaf lists a center color");
  };
  take_leaf(center[1]);
  take_leaf(center[1]);
  for (std::size_t r = 2; r < k; ++r) take_leaf(center[r]);
  std::vector<Color> taken;
  for (Vertex z = 1; z <= m; ++z) {
    if (f[z] != kUncolored) continue;
    for (Color c : L.list(z)) {
      if (c == center[0] || c == center[1]) continue;
      if (std::find(taken.begin(), taken.end(), c) != taken.end()) continue;
      f[z] = c;
      taken.push_back(c);
      break;
    }
    if (f[z] == kUncolored) throw InternalError("leaf left without a distinct color");
  }
  f = repair_deficiencies(g, L, std::move(f), 0);
  return require_verified(g, L, f, VerifyMode::ProportionalColoring, "solve_star");
}

}  // namespace propcol
