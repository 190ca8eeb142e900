#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "propcol/assignment.hpp"
#include "propcol/graph.hpp"

namespace propcol {

/// How the padding colors of a well-distributed expansion are allocated.
enum class StarMode {
  /// One fresh color shared by every added vertex; its multiplicity is the
  /// sum of the remainders, which is a multiple of k.
  Shared,
  /// One fresh color per expanded color; only the original colors are
  /// guaranteed to become well distributed.
  PerColor,
};

struct ExpansionRecord {
  Graph graph;
  /// k-multi-assignment of `graph`; original vertices keep their lists.
  ListAssignment assignment;
  /// Expanded color c -> its added isolated vertex v_c.
  std::map<Color, Vertex> added_vertex;
  /// Expanded color c -> the padding color used on v_c.
  std::map<Color, Color> star_color;
};

/**
 * Adds an isolated vertex v_c for each color c with r_c > 0, listing k - r_c
 * copies of c and r_c copies of a fresh padding color. Added vertices follow
 * the original ones in ascending color order.
 */
inline ExpansionRecord well_distributed_expansion(const Graph& g, const ListAssignment& L,
                                                  StarMode mode = StarMode::Shared) {
  ExpansionRecord out;
  const std::size_t k = L.k();
  std::vector<std::vector<Color>> lists = L.lists();
  Color next_fresh = L.max_color() + 1;
  const Color shared_star = next_fresh;
  Vertex next_vertex = g.order();
  for (const ColorProfile& p : L.profiles()) {
    if (p.well_distributed()) continue;
    Color star = shared_star;
    if (mode == StarMode::PerColor) star = next_fresh++;
    std::vector<Color> list(k - p.r, p.color);
    list.insert(list.end(), p.r, star);
    lists.push_back(std::move(list));
    out.added_vertex[p.color] = next_vertex++;
    out.star_color[p.color] = star;
  }
  out.graph = disjoint_union({g, Graph::edgeless(out.added_vertex.size())});
  out.assignment = ListAssignment(k, std::move(lists), true);
  return out;
}

/// One list slot: the `occurrence`-th copy of a color in L(vertex).
struct Slot {
  Vertex vertex = 0;
  std::size_t occurrence = 0;

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

using HueBlocks = std::vector<std::vector<Slot>>;
/// Color -> partition of its slots into hue blocks. Colors left out are
/// grouped greedily in vertex order.
using HueGrouping = std::map<Color, HueBlocks>;

struct Huing {
  /// Assignment over hue ids; each hue has multiplicity k except scarce ones.
  ListAssignment hued;
  /// Hue -> original color.
  std::map<Color, Color> parent;
  /// Original color -> its hues, in block order.
  std::map<Color, std::vector<Color>> hues_of;
  /// Hues of multiplicity r_c > 0, ascending.
  std::vector<Color> scarce;

  /// The scarce hue of c, if c has one.
  std::optional<Color> scarce_hue(Color c) const {
    auto it = hues_of.find(c);
    if (it == hues_of.end()) return std::nullopt;
    for (Color h : it->second) {
      if (std::binary_search(scarce.begin(), scarce.end(), h)) return h;
    }
    return std::nullopt;
  }

  /// Replaces every hue by its parent color.
  ListAssignment project() const {
    std::vector<std::vector<Color>> lists;
    lists.reserve(hued.vertex_count());
    for (const auto& list : hued.lists()) {
      std::vector<Color> mapped;
      mapped.reserve(list.size());
      for (Color h : list) mapped.push_back(parent.at(h));
      lists.push_back(std::move(mapped));
    }
    return ListAssignment(hued.k(), std::move(lists), hued.multi());
  }
};

/// Slots of c in vertex order.
inline std::vector<Slot> color_slots(const ListAssignment& L, const ColorProfile& p) {
  std::vector<Slot> slots;
  slots.reserve(p.eta);
  for (Vertex v : p.support) {
    std::size_t copies = L.copies(v, p.color);
    for (std::size_t i = 0; i < copies; ++i) slots.push_back(Slot{v, i});
  }
  return slots;
}

inline HueBlocks default_hue_blocks(const ListAssignment& L, const ColorProfile& p) {
  HueBlocks blocks;
  std::vector<Slot> slots = color_slots(L, p);
  for (std::size_t i = 0; i < slots.size(); i += L.k()) {
    std::size_t end = std::min(slots.size(), i + L.k());
    blocks.emplace_back(slots.begin() + static_cast<std::ptrdiff_t>(i),
                        slots.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return blocks;
}

/**
 * Builds a huing of L. Hue ids start at `first_hue` (default: one past the
 * palette maximum) and are numbered by color, then block. Throws InputError
 * when a supplied block structure is not (k, ..., k, r_c) up to order or
 * does not partition the color's slots.
 */
inline Huing make_huing(const ListAssignment& L, const HueGrouping& grouping = {},
                        std::optional<Color> first_hue = std::nullopt) {
  const std::size_t k = L.k();
  Huing out;
  Color next = first_hue.value_or(L.max_color() + 1);
  // hue per slot, indexed [vertex][position in sorted list]
  std::vector<std::vector<Color>> slot_hue(L.vertex_count());
  for (Vertex v = 0; v < L.vertex_count(); ++v) slot_hue[v].assign(k, 0);

  for (const ColorProfile& p : L.profiles()) {
    auto it = grouping.find(p.color);
    HueBlocks blocks = it != grouping.end() ? it->second : default_hue_blocks(L, p);
    const std::string who = "hue grouping of color " + std::to_string(p.color);
    std::size_t expected_blocks = (p.eta + k - 1) / k;
    if (blocks.size() != expected_blocks) {
      throw InputError(who + " has " + std::to_string(blocks.size()) + " blocks, expected " +
                       std::to_string(expected_blocks));
    }
    std::size_t short_blocks = 0;
    std::vector<Slot> seen;
    for (const auto& block : blocks) {
      if (block.size() != k) {
        if (p.r == 0 || block.size() != p.r || ++short_blocks > 1) {
          throw InputError(who + " has a block of size " + std::to_string(block.size()));
        }
      }
      seen.insert(seen.end(), block.begin(), block.end());
    }
    std::sort(seen.begin(), seen.end());
    if (seen != color_slots(L, p)) {
      throw InputError(who + " does not partition the slots of the color");
    }
    auto& hues = out.hues_of[p.color];
    for (const auto& block : blocks) {
      Color hue = next++;
      hues.push_back(hue);
      out.parent[hue] = p.color;
      if (block.size() != k) out.scarce.push_back(hue);
      for (const Slot& s : block) {
        auto list = L.list(s.vertex);
        auto pos = static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), p.color) -
                                            list.begin());
        slot_hue[s.vertex][pos + s.occurrence] = hue;
      }
    }
  }
  std::sort(out.scarce.begin(), out.scarce.end());
  out.hued = ListAssignment(k, std::move(slot_hue), L.multi());
  return out;
}

struct HuingCheck {
  bool good = true;
  /// First edge (lexicographic) whose ends hold different hues of one color.
  std::optional<Edge> witness;
};

inline HuingCheck is_good_huing(const Graph& g, const Huing& h) {
  for (const Edge& e : g.edges()) {
    for (Color a : h.hued.list(e.first)) {
      for (Color b : h.hued.list(e.second)) {
        if (a != b && h.parent.at(a) == h.parent.at(b)) return HuingCheck{false, e};
      }
    }
  }
  return HuingCheck{};
}

}  // namespace propcol
