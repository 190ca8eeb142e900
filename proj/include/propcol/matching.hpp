#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "propcol/assignment.hpp"
#include "propcol/error.hpp"
#include "propcol/graph.hpp"

namespace propcol {

/**
 * Bipartite multigraph with left side 0..|X|-1 and right side 0..|Y|-1.
 * Right vertices carry a label (the color or hue they stand for).
 * Multiplicities are stored densely; instances here are small.
 */
class BipartiteMultigraph {
 public:
  BipartiteMultigraph() = default;
  BipartiteMultigraph(std::size_t left, std::vector<Color> right_labels)
      : left_(left), labels_(std::move(right_labels)), mult_(left_ * labels_.size(), 0) {}

  std::size_t left_size() const { return left_; }
  std::size_t right_size() const { return labels_.size(); }
  const std::vector<Color>& right_labels() const { return labels_; }

  std::size_t mult(std::size_t x, std::size_t y) const { return mult_[x * labels_.size() + y]; }
  void set_mult(std::size_t x, std::size_t y, std::size_t m) {
    mult_[x * labels_.size() + y] = static_cast<std::uint32_t>(m);
  }
  void add_edge(std::size_t x, std::size_t y, std::size_t copies = 1) {
    set_mult(x, y, mult(x, y) + copies);
  }

  std::size_t left_degree(std::size_t x) const {
    std::size_t d = 0;
    for (std::size_t y = 0; y < right_size(); ++y) d += mult(x, y);
    return d;
  }
  std::size_t right_degree(std::size_t y) const {
    std::size_t d = 0;
    for (std::size_t x = 0; x < left_; ++x) d += mult(x, y);
    return d;
  }
  std::size_t edge_count() const {
    std::size_t total = 0;
    for (auto m : mult_) total += m;
    return total;
  }

  bool is_regular(std::size_t k) const {
    for (std::size_t x = 0; x < left_; ++x) {
      if (left_degree(x) != k) return false;
    }
    for (std::size_t y = 0; y < right_size(); ++y) {
      if (right_degree(y) != k) return false;
    }
    return true;
  }

  BipartiteMultigraph transposed() const {
    std::vector<Color> labels(left_);
    for (std::size_t x = 0; x < left_; ++x) labels[x] = static_cast<Color>(x);
    BipartiteMultigraph t(right_size(), std::move(labels));
    for (std::size_t x = 0; x < left_; ++x) {
      for (std::size_t y = 0; y < right_size(); ++y) t.set_mult(y, x, mult(x, y));
    }
    return t;
  }

  friend bool operator==(const BipartiteMultigraph&, const BipartiteMultigraph&) = default;

 private:
  std::size_t left_ = 0;
  std::vector<Color> labels_;
  std::vector<std::uint32_t> mult_;
};

/// Sorted (left, right) index pairs.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

/// Left: graph vertices. Right: palette colors in ascending order.
inline BipartiteMultigraph build_color_vertex_multigraph(const Graph& g, const ListAssignment& L) {
  (void)g;
  std::vector<Color> palette = L.palette();
  BipartiteMultigraph b(L.vertex_count(), palette);
  for (Vertex v = 0; v < L.vertex_count(); ++v) {
    for (Color c : L.list(v)) {
      auto y = static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) -
                                        palette.begin());
      b.add_edge(v, y);
    }
  }
  return b;
}

enum class Side { Left, Right };

/// Hall violator: |N(set)| < |set|.
struct HallViolator {
  std::vector<std::size_t> set;
  std::vector<std::size_t> neighborhood;
};

namespace detail {

/// Kuhn's augmenting paths, right vertices scanned in ascending order.
class Augmenter {
 public:
  explicit Augmenter(const BipartiteMultigraph& b)
      : b_(b), match_left_(b.left_size(), kNoVertex), match_right_(b.right_size(), kNoVertex) {}

  bool augment(std::size_t x) {
    seen_left_.assign(b_.left_size(), false);
    seen_right_.assign(b_.right_size(), false);
    return dfs(x);
  }

  const std::vector<bool>& seen_left() const { return seen_left_; }
  const std::vector<bool>& seen_right() const { return seen_right_; }

  Matching matching() const {
    Matching out;
    for (std::size_t x = 0; x < match_left_.size(); ++x) {
      if (match_left_[x] != kNoVertex) out.emplace_back(x, match_left_[x]);
    }
    return out;
  }

 private:
  bool dfs(std::size_t x) {
    seen_left_[x] = true;
    for (std::size_t y = 0; y < b_.right_size(); ++y) {
      if (b_.mult(x, y) == 0 || seen_right_[y]) continue;
      seen_right_[y] = true;
      if (match_right_[y] == kNoVertex || dfs(match_right_[y])) {
        match_left_[x] = y;
        match_right_[y] = x;
        return true;
      }
    }
    return false;
  }

  const BipartiteMultigraph& b_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> seen_left_;
  std::vector<bool> seen_right_;
};

}  // namespace detail

/**
 * A matching saturating the chosen side, or a Hall violator certifying that
 * none exists. Vertices are tried in ascending order, so output is
 * deterministic. For Side::Right the returned pairs are still (left, right).
 */
inline std::variant<Matching, HallViolator> saturating_matching(const BipartiteMultigraph& b,
                                                                Side side = Side::Left) {
  if (side == Side::Right) {
    auto result = saturating_matching(b.transposed(), Side::Left);
    if (auto* m = std::get_if<Matching>(&result)) {
      Matching flipped;
      for (auto [y, x] : *m) flipped.emplace_back(x, y);
      std::sort(flipped.begin(), flipped.end());
      return flipped;
    }
    return result;
  }
  detail::Augmenter aug(b);
  for (std::size_t x = 0; x < b.left_size(); ++x) {
    if (aug.augment(x)) continue;
    // Everything reached by alternating paths from x: every reached right
    // vertex is matched back into the reached set, so |N(S)| = |S| - 1.
    HallViolator v;
    for (std::size_t i = 0; i < b.left_size(); ++i) {
      if (aug.seen_left()[i]) v.set.push_back(i);
    }
    for (std::size_t y = 0; y < b.right_size(); ++y) {
      if (aug.seen_right()[y]) v.neighborhood.push_back(y);
    }
    return v;
  }
  return aug.matching();
}

inline void require_regular(const BipartiteMultigraph& b, std::size_t k) {
  if (b.left_size() != b.right_size() || !b.is_regular(k)) {
    throw PreconditionError("bipartite multigraph is not " + std::to_string(k) + "-regular");
  }
}

/// Partitions the edges of a k-regular bipartite multigraph into k perfect
/// matchings, peeling one perfect matching per round.
inline std::vector<Matching> decompose_regular(const BipartiteMultigraph& b, std::size_t k) {
  require_regular(b, k);
  BipartiteMultigraph rest = b;
  std::vector<Matching> out;
  for (std::size_t round = 0; round < k; ++round) {
    auto result = saturating_matching(rest);
    auto* m = std::get_if<Matching>(&result);
    if (m == nullptr || m->size() != rest.left_size()) {
      throw InternalError("regular bipartite multigraph without a perfect matching");
    }
    for (auto [x, y] : *m) rest.set_mult(x, y, rest.mult(x, y) - 1);
    out.push_back(std::move(*m));
  }
  return out;
}

/// Perfect matching of a k-regular bipartite multigraph containing (x0, y0).
inline Matching perfect_matching_with_forced_edge(const BipartiteMultigraph& b, std::size_t k,
                                                  std::pair<std::size_t, std::size_t> forced) {
  require_regular(b, k);
  auto [x0, y0] = forced;
  if (x0 >= b.left_size() || y0 >= b.right_size() || b.mult(x0, y0) == 0) {
    throw PreconditionError("forced edge is not in the multigraph");
  }
  // B - x0 - y0 keeps a perfect matching by the regular decomposition.
  std::vector<std::size_t> left_ids, right_ids;
  for (std::size_t x = 0; x < b.left_size(); ++x) {
    if (x != x0) left_ids.push_back(x);
  }
  std::vector<Color> labels;
  for (std::size_t y = 0; y < b.right_size(); ++y) {
    if (y != y0) {
      right_ids.push_back(y);
      labels.push_back(b.right_labels()[y]);
    }
  }
  BipartiteMultigraph reduced(left_ids.size(), std::move(labels));
  for (std::size_t i = 0; i < left_ids.size(); ++i) {
    for (std::size_t j = 0; j < right_ids.size(); ++j) {
      reduced.set_mult(i, j, b.mult(left_ids[i], right_ids[j]));
    }
  }
  auto result = saturating_matching(reduced);
  auto* m = std::get_if<Matching>(&result);
  if (m == nullptr) throw InternalError("no perfect matching through the forced edge");
  Matching out{{x0, y0}};
  for (auto [i, j] : *m) out.emplace_back(left_ids[i], right_ids[j]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace propcol
