#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "propcol/assignment.hpp"
#include "propcol/family.hpp"

namespace propcol {

enum class GallerySource { StarOdd, DoubledMultipartite, StarForest, BalancedBipartite };

inline std::string_view gallery_source_name(GallerySource s) {
  switch (s) {
    case GallerySource::StarOdd: return "star-odd";
    case GallerySource::DoubledMultipartite: return "doubled-multipartite";
    case GallerySource::StarForest: return "star-forest";
    case GallerySource::BalancedBipartite: return "balanced-bipartite";
  }
  return "star-odd";
}

inline std::optional<GallerySource> parse_gallery_source(std::string_view text) {
  std::string s(text);
  for (char& ch : s) {
    if (ch == '_') ch = '-';
  }
  for (GallerySource g : {GallerySource::StarOdd, GallerySource::DoubledMultipartite,
                          GallerySource::StarForest, GallerySource::BalancedBipartite}) {
    if (gallery_source_name(g) == s) return g;
  }
  return std::nullopt;
}

/// A (graph, assignment) pair with no proportional coloring.
struct GalleryInstance {
  GallerySource source = GallerySource::StarOdd;
  std::size_t param = 0;
  Graph graph;
  ListAssignment assignment;
};

namespace detail {

inline std::vector<Color> color_range(Color first, Color last) {
  std::vector<Color> out;
  for (Color c = first; c <= last; ++c) out.push_back(c);
  return out;
}

}  // namespace detail

/**
 * Hard instances, vertex numbering as in build_family:
 *  - StarOdd(k): K_{1,2k-1}, every list {1..k}.
 *  - DoubledMultipartite(m): K_{2*m}, both vertices of part i get
 *    {1..m-1} + {m-1+i}.
 *  - StarForest(k): k copies of K_{1,k}; centers get {1..k}, leaves of star
 *    i get {1} + {i(k-1)+2 .. (i+1)(k-1)+1}.
 *  - BalancedBipartite(m): K_{m,m}; side A gets {1..m}, side B gets
 *    {1} + {m+1 .. 2m-1}.
 * Parameters below 2 (1 for StarOdd) throw InputError.
 */
inline GalleryInstance gallery_instance(GallerySource source, std::size_t param) {
  using detail::color_range;
  const std::size_t minimum = source == GallerySource::StarOdd ? 1 : 2;
  if (param < minimum) {
    throw InputError(std::string(gallery_source_name(source)) + " needs a parameter of at least " +
                     std::to_string(minimum));
  }
  const auto p = static_cast<Color>(param);
  GalleryInstance out;
  out.source = source;
  out.param = param;
  std::vector<std::vector<Color>> lists;
  switch (source) {
    case GallerySource::StarOdd:
      out.graph = build_family({FamilyName::Star, {2 * param - 1}});
      lists.assign(2 * param, color_range(1, p));
      break;
    case GallerySource::DoubledMultipartite:
      out.graph = build_family({FamilyName::DoubledMultipartite, {param}});
      for (Color i = 1; i <= p; ++i) {
        std::vector<Color> list = color_range(1, p - 1);
        list.push_back(p - 1 + i);
        lists.push_back(list);
        lists.push_back(list);
      }
      break;
    case GallerySource::StarForest:
      out.graph = build_family({FamilyName::StarForest, {param}});
      for (Color i = 1; i <= p; ++i) {
        lists.push_back(color_range(1, p));
        std::vector<Color> leaf{1};
        for (Color c : color_range(i * (p - 1) + 2, (i + 1) * (p - 1) + 1)) leaf.push_back(c);
        for (std::size_t j = 0; j < param; ++j) lists.push_back(leaf);
      }
      break;
    case GallerySource::BalancedBipartite: {
      out.graph = build_family({FamilyName::BalancedBipartite, {param}});
      lists.assign(param, color_range(1, p));
      std::vector<Color> b{1};
      for (Color c : color_range(p + 1, 2 * p - 1)) b.push_back(c);
      for (std::size_t j = 0; j < param; ++j) lists.push_back(b);
      break;
    }
  }
  const std::size_t k = lists.front().size();
  out.assignment = ListAssignment(k, std::move(lists));
  return out;
}

}  // namespace propcol
