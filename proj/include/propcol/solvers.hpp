#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "propcol/bounded_search.hpp"
#include "propcol/solvers/common.hpp"
#include "propcol/solvers/components.hpp"
#include "propcol/solvers/huing_labelling.hpp"
#include "propcol/solvers/no_excess.hpp"
#include "propcol/solvers/order_bound.hpp"
#include "propcol/solvers/repair.hpp"
#include "propcol/solvers/smallorder.hpp"
#include "propcol/solvers/star.hpp"

namespace propcol {

enum class Strategy { Auto, Star, Components, SmallOrder, Order, Oracle };

inline std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Star: return "star";
    case Strategy::Components: return "components";
    case Strategy::SmallOrder: return "smallorder";
    case Strategy::Order: return "order";
    case Strategy::Oracle: return "oracle";
  }
  return "auto";
}

inline std::optional<Strategy> parse_strategy(std::string_view text) {
  for (Strategy s : {Strategy::Auto, Strategy::Star, Strategy::Components, Strategy::SmallOrder,
                     Strategy::Order, Strategy::Oracle}) {
    if (strategy_name(s) == text) return s;
  }
  return std::nullopt;
}

/// Center of a star K_{1,m} with m >= 1, or kNoVertex.
inline Vertex star_center(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() != n - 1) return kNoVertex;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return v;
  }
  return kNoVertex;
}

/// solve_star for any vertex numbering of a star.
inline Labelling solve_star_graph(const Graph& g, const ListAssignment& L) {
  const Vertex center = star_center(g);
  if (center == kNoVertex) throw PreconditionError("graph is not a star");
  const std::size_t n = g.order();
  std::vector<Vertex> order{center};
  for (Vertex v = 0; v < n; ++v) {
    if (v != center) order.push_back(v);
  }
  std::vector<std::vector<Color>> lists;
  for (Vertex v : order) lists.emplace_back(L.list(v).begin(), L.list(v).end());
  Labelling local = solve_star(n - 1, ListAssignment(L.k(), std::move(lists), L.multi()));
  Labelling f{std::vector<Color>(n)};
  for (std::size_t i = 0; i < n; ++i) f[order[i]] = local[i];
  return require_verified(g, L, f, VerifyMode::ProportionalColoring, "solve_star");
}

struct SolveResult {
  Strategy used = Strategy::Auto;
  /// Empty only when the oracle proves that no proportional coloring exists.
  std::optional<Labelling> coloring;
};

/**
 * Picks the first applicable constructive solver (order bound, star,
 * components, small order) or, for Auto, falls back to the exhaustive
 * oracle. An explicit strategy that does not apply throws PreconditionError.
 */
inline SolveResult solve(const Graph& g, const ListAssignment& L, Strategy strategy = Strategy::Auto,
                         double cap = 1e10) {
  if (L.vertex_count() != g.order()) throw InputError("assignment does not match the graph order");
  const std::size_t n = g.order();
  const std::size_t k = L.k();
  auto order_applies = [&] { return k >= n || (k + 1 == n && !g.is_complete()); };
  auto star_applies = [&] {
    return star_center(g) != kNoVertex && k >= 1 + ceil_div(n - 1, 2);
  };
  auto components_applies = [&] { return largest_component(g) <= k; };
  auto smallorder_applies = [&] {
    return g.max_degree() >= 1 && k >= g.max_degree() + ceil_div(n, 2);
  };
  auto oracle = [&]() -> SolveResult {
    return {Strategy::Oracle,
            find_windowed_coloring(g, L, CountWindow::Proportional, cap)};
  };
  switch (strategy) {
    case Strategy::Order: return {strategy, solve_order_bound(g, L)};
    case Strategy::Star: return {strategy, solve_star_graph(g, L)};
    case Strategy::Components: return {strategy, solve_components(g, L)};
    case Strategy::SmallOrder: return {strategy, solve_smallorder(g, L)};
    case Strategy::Oracle: return oracle();
    case Strategy::Auto: break;
  }
  if (order_applies()) return {Strategy::Order, solve_order_bound(g, L)};
  if (star_applies()) return {Strategy::Star, solve_star_graph(g, L)};
  if (components_applies()) return {Strategy::Components, solve_components(g, L)};
  if (smallorder_applies()) return {Strategy::SmallOrder, solve_smallorder(g, L)};
  return oracle();
}

}  // namespace propcol
