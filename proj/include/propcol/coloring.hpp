#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "propcol/assignment.hpp"
#include "propcol/graph.hpp"

namespace propcol {

/// Total map vertex -> color.
struct Labelling {
  std::vector<Color> colors;

  std::size_t size() const { return colors.size(); }
  Color operator[](Vertex v) const { return colors[v]; }
  Color& operator[](Vertex v) { return colors[v]; }

  friend bool operator==(const Labelling&, const Labelling&) = default;
};

/// Number of vertices receiving each color.
inline std::map<Color, std::size_t> color_counts(const Labelling& f) {
  std::map<Color, std::size_t> counts;
  for (Color c : f.colors) ++counts[c];
  return counts;
}

enum class VerifyMode {
  Proper,
  ProportionalLabelling,
  ProportionalColoring,
  EquitableKColoring,
  EquitableLColoring,
};

inline std::string_view mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::Proper: return "proper";
    case VerifyMode::ProportionalLabelling: return "proportional-labelling";
    case VerifyMode::ProportionalColoring: return "proportional";
    case VerifyMode::EquitableKColoring: return "equitable-k";
    case VerifyMode::EquitableLColoring: return "equitable-l";
  }
  return "?";
}

inline std::optional<VerifyMode> parse_mode(std::string_view s) {
  for (VerifyMode m : {VerifyMode::Proper, VerifyMode::ProportionalLabelling,
                       VerifyMode::ProportionalColoring, VerifyMode::EquitableKColoring,
                       VerifyMode::EquitableLColoring}) {
    if (mode_name(m) == s) return m;
  }
  return std::nullopt;
}

enum class ViolationKind {
  WrongLength,        // labelling size differs from the graph order
  NotInList,          // f(v) not in L(v)
  MonochromaticEdge,  // f(u) == f(v) on an edge
  Underused,          // count < floor(eta/k), or an equitable class too small
  Overused,           // count above its bound
  TooManyColors,      // more than k distinct colors in a k-coloring
};

inline std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::WrongLength: return "wrong_length";
    case ViolationKind::NotInList: return "not_in_list";
    case ViolationKind::MonochromaticEdge: return "monochromatic_edge";
    case ViolationKind::Underused: return "underused";
    case ViolationKind::Overused: return "overused";
    case ViolationKind::TooManyColors: return "too_many_colors";
  }
  return "?";
}

struct Violation {
  ViolationKind kind = ViolationKind::NotInList;
  /// Vertex for NotInList, edge for MonochromaticEdge.
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
  /// Color and its count / violated bound for usage violations.
  std::optional<Color> color;
  std::size_t count = 0;
  std::size_t bound = 0;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct Verdict {
  VerifyMode mode = VerifyMode::Proper;
  bool ok = true;
  std::vector<Violation> violations;
};

namespace detail {

inline void check_lists(const ListAssignment& L, const Labelling& f, std::vector<Violation>& out) {
  for (Vertex v = 0; v < f.size(); ++v) {
    if (!L.contains(v, f[v])) {
      out.push_back(Violation{ViolationKind::NotInList, v, std::nullopt, f[v], 0, 0});
    }
  }
}

inline void check_edges(const Graph& g, const Labelling& f, std::vector<Violation>& out) {
  for (const Edge& e : g.edges()) {
    if (f[e.first] == f[e.second]) {
      out.push_back(Violation{ViolationKind::MonochromaticEdge, std::nullopt, e, f[e.first], 0, 0});
    }
  }
}

inline void check_shares(const ListAssignment& L, const Labelling& f, std::vector<Violation>& out) {
  auto counts = color_counts(f);
  for (const ColorProfile& p : L.profiles()) {
    auto it = counts.find(p.color);
    std::size_t used = it == counts.end() ? 0 : it->second;
    if (used < p.floor_share()) {
      out.push_back(Violation{ViolationKind::Underused, std::nullopt, std::nullopt, p.color, used,
                              p.floor_share()});
    } else if (used > p.ceil_share()) {
      out.push_back(Violation{ViolationKind::Overused, std::nullopt, std::nullopt, p.color, used,
                              p.ceil_share()});
    }
  }
}

}  // namespace detail

/**
 * Checks f against one of the coloring notions. All violations are
 * collected and returned sorted; nothing is thrown for a bad labelling.
 *
 * EquitableKColoring takes k from L and counts empty classes, so every one
 * of the k classes must have size floor(n/k) or ceil(n/k).
 */
inline Verdict verify(const Graph& g, const ListAssignment& L, const Labelling& f, VerifyMode mode) {
  Verdict out;
  out.mode = mode;
  auto& vs = out.violations;
  const std::size_t n = g.order();
  if (f.size() != n || (mode != VerifyMode::EquitableKColoring && L.vertex_count() != n)) {
    vs.push_back(Violation{ViolationKind::WrongLength, std::nullopt, std::nullopt, std::nullopt,
                           f.size(), n});
    out.ok = false;
    return out;
  }
  const std::size_t k = L.k();
  switch (mode) {
    case VerifyMode::Proper:
      detail::check_lists(L, f, vs);
      detail::check_edges(g, f, vs);
      break;
    case VerifyMode::ProportionalLabelling:
      detail::check_lists(L, f, vs);
      detail::check_shares(L, f, vs);
      break;
    case VerifyMode::ProportionalColoring:
      detail::check_lists(L, f, vs);
      detail::check_edges(g, f, vs);
      detail::check_shares(L, f, vs);
      break;
    case VerifyMode::EquitableKColoring: {
      detail::check_edges(g, f, vs);
      auto counts = color_counts(f);
      const std::size_t lo = n / k;
      const std::size_t hi = (n + k - 1) / k;
      if (counts.size() > k) {
        vs.push_back(Violation{ViolationKind::TooManyColors, std::nullopt, std::nullopt,
                               std::nullopt, counts.size(), k});
      } else if (counts.size() < k && lo > 0) {
        // an empty class is too small whenever floor(n/k) > 0
        vs.push_back(Violation{ViolationKind::Underused, std::nullopt, std::nullopt, std::nullopt, 0,
                               lo});
      }
      for (const auto& [c, used] : counts) {
        if (used < lo) {
          vs.push_back(Violation{ViolationKind::Underused, std::nullopt, std::nullopt, c, used, lo});
        } else if (used > hi) {
          vs.push_back(Violation{ViolationKind::Overused, std::nullopt, std::nullopt, c, used, hi});
        }
      }
      break;
    }
    case VerifyMode::EquitableLColoring: {
      detail::check_lists(L, f, vs);
      detail::check_edges(g, f, vs);
      const std::size_t hi = (n + k - 1) / k;
      for (const auto& [c, used] : color_counts(f)) {
        if (used > hi) {
          vs.push_back(Violation{ViolationKind::Overused, std::nullopt, std::nullopt, c, used, hi});
        }
      }
      break;
    }
  }
  std::sort(vs.begin(), vs.end());
  out.ok = vs.empty();
  return out;
}

inline bool is_proportional_coloring(const Graph& g, const ListAssignment& L, const Labelling& f) {
  return verify(g, L, f, VerifyMode::ProportionalColoring).ok;
}

enum class UsageClass { PerfectlyUsed, AlmostExcessive, AlmostDeficient, Excessive, Deficient };

inline std::string_view usage_name(UsageClass u) {
  switch (u) {
    case UsageClass::PerfectlyUsed: return "perfectly_used";
    case UsageClass::AlmostExcessive: return "almost_excessive";
    case UsageClass::AlmostDeficient: return "almost_deficient";
    case UsageClass::Excessive: return "excessive";
    case UsageClass::Deficient: return "deficient";
  }
  return "?";
}

inline UsageClass classify(const ColorProfile& p, std::size_t used) {
  if (used > p.ceil_share()) return UsageClass::Excessive;
  if (used < p.floor_share()) return UsageClass::Deficient;
  if (p.well_distributed()) return UsageClass::PerfectlyUsed;
  return used == p.q + 1 ? UsageClass::AlmostExcessive : UsageClass::AlmostDeficient;
}

/// Usage class of every palette color under f.
inline std::map<Color, UsageClass> classify_usage(const ListAssignment& L, const Labelling& f) {
  auto counts = color_counts(f);
  std::map<Color, UsageClass> out;
  for (const ColorProfile& p : L.profiles()) {
    auto it = counts.find(p.color);
    out[p.color] = classify(p, it == counts.end() ? 0 : it->second);
  }
  return out;
}

struct CountingIdentity {
  std::size_t almost_excessive = 0;
  /// (1/k) * sum of remainders; always an integer since sum(eta) = k*n.
  std::size_t remainder_sum_over_k = 0;
  bool equal = false;
};

/// For a proportional L-coloring f, the number of almost excessive colors
/// equals (1/k) sum_c r_c. Throws PreconditionError if f is not proportional.
inline CountingIdentity count_almost_excessive_identity(const Graph& g, const ListAssignment& L,
                                                        const Labelling& f) {
  if (!verify(g, L, f, VerifyMode::ProportionalColoring).ok) {
    throw PreconditionError("labelling is not a proportional L-coloring");
  }
  CountingIdentity out;
  std::size_t remainder_sum = 0;
  for (const ColorProfile& p : L.profiles()) remainder_sum += p.r;
  out.remainder_sum_over_k = remainder_sum / L.k();
  for (const auto& [c, u] : classify_usage(L, f)) {
    if (u == UsageClass::AlmostExcessive) ++out.almost_excessive;
  }
  out.equal = out.almost_excessive * L.k() == remainder_sum;
  return out;
}

/**
 * Joins a proportional coloring f1 of G - S with a coloring f2 of G[S].
 *
 * f1 is indexed by V(G) - S in ascending order and f2 by S in ascending order.
 * Requires, for every color a appearing in lists of S, that exactly m_a * k
 * vertices of S list a; that f2 avoids the f1-colors of outside neighbors and
 * uses each a exactly m_a times. Throws PreconditionError naming the clause
 * that fails.
 */
inline Labelling combine_extension(const Graph& g, const ListAssignment& L,
                                   std::span<const Vertex> S, const Labelling& f1,
                                   const Labelling& f2, const std::map<Color, std::size_t>& m) {
  const std::size_t n = g.order();
  std::vector<bool> in_s(n, false);
  for (Vertex v : S) {
    if (v >= n) throw PreconditionError("S contains vertex " + std::to_string(v) + " outside G");
    in_s[v] = true;
  }
  std::vector<Vertex> inside, outside;
  for (Vertex v = 0; v < n; ++v) (in_s[v] ? inside : outside).push_back(v);
  if (f1.size() != outside.size()) throw PreconditionError("f1 must label exactly G - S");
  if (f2.size() != inside.size()) throw PreconditionError("f2 must label exactly G[S]");

  std::map<Color, std::size_t> listed;
  for (Vertex v : inside) {
    for (Color a : L.list(v)) ++listed[a];
  }
  for (const auto& [a, count] : listed) {
    auto it = m.find(a);
    if (it == m.end() || count != it->second * L.k()) {
      throw PreconditionError("multiplicity clause: color " + std::to_string(a) + " appears in " +
                              std::to_string(count) + " lists of S, not m_a * k");
    }
  }

  auto rest = induced_subgraph(g, outside);
  if (!verify(rest.graph, restrict(L, outside), f1, VerifyMode::ProportionalColoring).ok) {
    throw PreconditionError("f1 is not a proportional coloring of G - S");
  }

  Labelling out{std::vector<Color>(n, 0)};
  for (std::size_t i = 0; i < outside.size(); ++i) out[outside[i]] = f1[i];
  for (std::size_t i = 0; i < inside.size(); ++i) out[inside[i]] = f2[i];

  std::map<Color, std::size_t> used;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    Vertex v = inside[i];
    Color c = f2[i];
    if (!L.contains(v, c)) {
      throw PreconditionError("f2 gives vertex " + std::to_string(v) + " a color outside its list");
    }
    for (Vertex w : g.neighbors(v)) {
      if (out[w] == c) {
        throw PreconditionError(std::string(in_s[w] ? "f2 is not proper on G[S]"
                                                    : "f2 reuses an outside neighbor's color") +
                                " at vertex " + std::to_string(v));
      }
    }
    ++used[c];
  }
  for (const auto& [a, count] : listed) {
    if (used[a] != m.at(a)) {
      throw PreconditionError("usage clause: f2 uses color " + std::to_string(a) + " " +
                              std::to_string(used[a]) + " times, m_a = " +
                              std::to_string(m.at(a)));
    }
  }
  if (!verify(g, L, out, VerifyMode::ProportionalColoring).ok) {
    throw InternalError("combined labelling is not a proportional coloring");
  }
  return out;
}

}  // namespace propcol
