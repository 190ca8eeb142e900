#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "propcol/graph.hpp"

namespace propcol {

/// Multiplicity bookkeeping for one palette color: eta = k*q + r, 0 <= r < k.
struct ColorProfile {
  Color color = 0;
  std::size_t eta = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  /// Vertices whose list contains the color (once each, ascending).
  std::vector<Vertex> support;

  bool well_distributed() const { return r == 0; }
  std::size_t floor_share() const { return q; }
  std::size_t ceil_share() const { return r == 0 ? q : q + 1; }

  friend bool operator==(const ColorProfile&, const ColorProfile&) = default;
};

/**
 * A k-assignment (or k-multi-assignment when `multi` is set).
 *
 * Each list is stored sorted. Profiles for the whole palette are derived at
 * construction and sorted by color.
 */
class ListAssignment {
 public:
  ListAssignment() = default;

  ListAssignment(std::size_t k, std::vector<std::vector<Color>> lists, bool multi = false)
      : k_(k), multi_(multi), lists_(std::move(lists)) {
    if (k_ == 0) throw InputError("list size k must be at least 1");
    for (std::size_t v = 0; v < lists_.size(); ++v) {
      auto& list = lists_[v];
      if (list.size() != k_) {
        throw InputError("list of vertex " + std::to_string(v) + " has " +
                         std::to_string(list.size()) + " entries, expected " + std::to_string(k_));
      }
      std::sort(list.begin(), list.end());
      if (!multi_ && std::adjacent_find(list.begin(), list.end()) != list.end()) {
        throw InputError("list of vertex " + std::to_string(v) + " repeats a color");
      }
    }
    derive_profiles();
  }

  std::size_t k() const { return k_; }
  bool multi() const { return multi_; }
  std::size_t vertex_count() const { return lists_.size(); }
  const std::vector<std::vector<Color>>& lists() const { return lists_; }
  std::span<const Color> list(Vertex v) const { return lists_.at(v); }

  bool contains(Vertex v, Color c) const {
    const auto& l = lists_.at(v);
    return std::binary_search(l.begin(), l.end(), c);
  }

  /// Number of copies of c in L(v).
  std::size_t copies(Vertex v, Color c) const {
    const auto& l = lists_.at(v);
    auto [lo, hi] = std::equal_range(l.begin(), l.end(), c);
    return static_cast<std::size_t>(hi - lo);
  }

  const std::vector<ColorProfile>& profiles() const { return profiles_; }

  std::vector<Color> palette() const {
    std::vector<Color> out;
    out.reserve(profiles_.size());
    for (const auto& p : profiles_) out.push_back(p.color);
    return out;
  }

  /// Profile of c, or nullptr when c is not in the palette.
  const ColorProfile* profile(Color c) const {
    auto it = std::lower_bound(profiles_.begin(), profiles_.end(), c,
                               [](const ColorProfile& p, Color x) { return p.color < x; });
    return it != profiles_.end() && it->color == c ? &*it : nullptr;
  }

  std::size_t eta(Color c) const {
    const ColorProfile* p = profile(c);
    return p ? p->eta : 0;
  }

  /// Largest palette color, or 0 for an empty palette.
  Color max_color() const { return profiles_.empty() ? 0 : profiles_.back().color; }

  std::size_t max_eta() const {
    std::size_t best = 0;
    for (const auto& p : profiles_) best = std::max(best, p.eta);
    return best;
  }

  bool is_constant() const {
    return std::adjacent_find(lists_.begin(), lists_.end(), std::not_equal_to<>()) == lists_.end();
  }

  friend bool operator==(const ListAssignment& a, const ListAssignment& b) {
    return a.k_ == b.k_ && a.multi_ == b.multi_ && a.lists_ == b.lists_;
  }

 private:
  void derive_profiles() {
    std::vector<std::pair<Color, Vertex>> slots;
    slots.reserve(lists_.size() * k_);
    for (Vertex v = 0; v < lists_.size(); ++v) {
      for (Color c : lists_[v]) slots.emplace_back(c, v);
    }
    std::sort(slots.begin(), slots.end());
    profiles_.clear();
    for (const auto& [c, v] : slots) {
      if (profiles_.empty() || profiles_.back().color != c) {
        profiles_.push_back(ColorProfile{c, 0, 0, 0, {}});
      }
      auto& p = profiles_.back();
      ++p.eta;
      if (p.support.empty() || p.support.back() != v) p.support.push_back(v);
    }
    for (auto& p : profiles_) {
      p.q = p.eta / k_;
      p.r = p.eta % k_;
    }
  }

  std::size_t k_ = 1;
  bool multi_ = false;
  std::vector<std::vector<Color>> lists_;
  std::vector<ColorProfile> profiles_;
};

/// Builds an assignment for g; k is taken from the lists.
inline ListAssignment build_assignment(const Graph& g, std::vector<std::vector<Color>> lists,
                                       bool multi = false) {
  if (lists.size() != g.order()) {
    throw InputError("assignment has " + std::to_string(lists.size()) + " lists for " +
                     std::to_string(g.order()) + " vertices");
  }
  if (lists.empty()) throw InputError("cannot infer k from an empty assignment");
  std::size_t k = lists.front().size();
  return ListAssignment(k, std::move(lists), multi);
}

inline const std::vector<ColorProfile>& multiplicity_profile(const ListAssignment& L) {
  return L.profiles();
}

/// Lists of the kept vertices, renumbered ascending (matches induced_subgraph).
inline ListAssignment restrict(const ListAssignment& L, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<Color>> lists;
  lists.reserve(sorted.size());
  for (Vertex v : sorted) {
    if (v >= L.vertex_count()) throw InputError("vertex " + std::to_string(v) + " is out of range");
    lists.emplace_back(L.list(v).begin(), L.list(v).end());
  }
  return ListAssignment(L.k(), std::move(lists), L.multi());
}

inline ListAssignment restrict(const ListAssignment& L, std::initializer_list<Vertex> keep) {
  return restrict(L, std::span<const Vertex>(keep.begin(), keep.size()));
}

/// Every vertex gets {first, ..., first + k - 1}.
inline ListAssignment constant_assignment(std::size_t n, std::size_t k, Color first = 1) {
  std::vector<Color> list(k);
  std::iota(list.begin(), list.end(), first);
  return ListAssignment(k, std::vector<std::vector<Color>>(n, list));
}

/// Uniform k-subsets of {1..palette_size} per vertex.
template <class Rng>
ListAssignment random_assignment(std::size_t n, std::size_t k, std::size_t palette_size, Rng& rng) {
  if (palette_size < k) throw InputError("palette smaller than k");
  std::vector<Color> pool(palette_size);
  std::iota(pool.begin(), pool.end(), Color{1});
  std::vector<std::vector<Color>> lists(n);
  for (auto& list : lists) {
    // partial Fisher-Yates
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, palette_size - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    list.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return ListAssignment(k, std::move(lists));
}

}  // namespace propcol
