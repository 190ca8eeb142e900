#pragma once

#include "propcol/solvers/no_excess.hpp"
#include "propcol/solvers/order_bound.hpp"
#include "propcol/solvers/repair.hpp"

namespace propcol {

/**
 * Proportional L-coloring for k >= Delta + ceil(n/2), Delta >= 1.
 * Small instances (n <= k) go through the order bound; otherwise a coloring
 * without excessive colors, with l = 1 + n / (2 Delta), is repaired.
 */
inline Labelling solve_smallorder(const Graph& g, const ListAssignment& L,
                                  NoExcessStats* stats = nullptr) {
  const std::size_t n = g.order();
  const std::size_t k = L.k();
  const std::size_t delta = g.max_degree();
  if (L.vertex_count() != n) throw PreconditionError("assignment does not match the graph");
  if (delta == 0) throw PreconditionError("small-order solver needs at least one edge");
  if (k < delta + ceil_div(n, 2)) throw PreconditionError("needs k >= Delta + ceil(n/2)");
  if (n <= k) return solve_order_bound(g, L);
  const Rational l{static_cast<std::int64_t>(2 * delta + n), static_cast<std::int64_t>(2 * delta)};
  Labelling f = color_without_excess(g, L, l, stats);
  f = repair_deficiencies(g, L, std::move(f), 0);
  return require_verified(g, L, f, VerifyMode::ProportionalColoring, "solve_smallorder");
}

}  // namespace propcol
