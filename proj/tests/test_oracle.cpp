#include <gtest/gtest.h>

#include <set>

#include "propcol/family.hpp"
#include "propcol/gallery.hpp"
#include "propcol/oracle.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace propcol;

namespace {

Graph family(FamilyName name, std::vector<std::size_t> params) {
  return build_family({name, std::move(params)});
}

std::vector<std::vector<Color>> lists_of(const ListAssignment& L) { return L.lists(); }

/// Renames colors in first-use order (new colors of one list ascending).
std::vector<std::vector<Color>> first_use_renaming(const std::vector<std::vector<Color>>& lists) {
  std::map<Color, Color> rename;
  std::vector<std::vector<Color>> out;
  for (const auto& list : lists) {
    std::vector<Color> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    for (Color c : sorted) {
      if (!rename.count(c)) rename.emplace(c, static_cast<Color>(rename.size() + 1));
    }
    std::vector<Color> mapped;
    for (Color c : sorted) mapped.push_back(rename.at(c));
    std::sort(mapped.begin(), mapped.end());
    out.push_back(mapped);
  }
  return out;
}

}  // namespace

TEST(Exists, Examples) {
  auto dm = gallery_instance(GallerySource::DoubledMultipartite, 2);
  EXPECT_FALSE(exists_proportional_coloring(dm.graph, dm.assignment).exists);

  Graph k3 = family(FamilyName::Complete, {3});
  ExistenceResult r = exists_proportional_coloring(k3, constant_assignment(3, 3));
  EXPECT_TRUE(r.exists);
  ASSERT_TRUE(r.coloring.has_value());
  EXPECT_EQ(*r.coloring, (Labelling{{1, 2, 3}}));

  auto bb = gallery_instance(GallerySource::BalancedBipartite, 3);
  EXPECT_FALSE(exists_proportional_coloring(bb.graph, bb.assignment).exists);
}

TEST(Exists, CapIsEnforced) {
  Graph p = family(FamilyName::Path, {12});
  EXPECT_THROW(exists_proportional_coloring(p, constant_assignment(12, 3), 1e5), ResourceError);
  EXPECT_NO_THROW(exists_proportional_coloring(p, constant_assignment(12, 3), 1e6));
}

TEST(Exists, FirstSolutionMatchesNaiveLexicographicScan) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t n = gen::uniform(rng, 1, 6);
    std::size_t k = gen::uniform(rng, 1, 3);
    Graph g = gen::random_graph(n, 0.4, rng);
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, 2 * k + 1), rng);
    auto naive = oracle::naive_first_proportional(g, L);
    ExistenceResult r = exists_proportional_coloring(g, L);
    ASSERT_EQ(r.exists, naive.has_value());
    if (naive) EXPECT_EQ(r.coloring->colors, *naive);
  }
}

TEST(Choosability, Examples) {
  ChoosabilityVerdict k2 = decide_proportional_k_choosability(family(FamilyName::Complete, {2}), 1);
  EXPECT_FALSE(k2.decision);
  ASSERT_TRUE(k2.witness.has_value());
  EXPECT_EQ(lists_of(*k2.witness), (std::vector<std::vector<Color>>{{1}, {1}}));

  ChoosabilityVerdict star = decide_proportional_k_choosability(family(FamilyName::Star, {2}), 2);
  EXPECT_TRUE(star.decision);
  EXPECT_FALSE(star.witness.has_value());
  EXPECT_GT(star.stats.assignments, 0u);

  ChoosabilityVerdict dm =
      decide_proportional_k_choosability(family(FamilyName::DoubledMultipartite, {2}), 2);
  EXPECT_FALSE(dm.decision);
  ASSERT_TRUE(dm.witness.has_value());
  EXPECT_EQ(lists_of(*dm.witness), (std::vector<std::vector<Color>>{{1, 2}, {1, 2}, {1, 3}, {1, 3}}));
  EXPECT_FALSE(exists_proportional_coloring(family(FamilyName::DoubledMultipartite, {2}), *dm.witness).exists);
}

TEST(Choosability, CapIsEnforced) {
  Graph k5 = family(FamilyName::Complete, {5});
  EXPECT_THROW(decide_proportional_k_choosability(k5, 4), ResourceError);
  OracleOptions tiny;
  tiny.max_nk = 5;
  EXPECT_THROW(decide_proportional_k_choosability(family(FamilyName::Path, {3}), 2, tiny), ResourceError);
  EXPECT_THROW(decide_proportional_k_choosability(k5, 0), InputError);
}

TEST(Choosability, ThreadCountDoesNotChangeResults) {
  for (const Graph& g : {family(FamilyName::DoubledMultipartite, {2}), family(FamilyName::Star, {3}),
                         family(FamilyName::Cycle, {4}), family(FamilyName::Path, {4})}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      OracleOptions one, many;
      many.threads = 3;
      ChoosabilityVerdict a = decide_proportional_k_choosability(g, k, one);
      ChoosabilityVerdict b = decide_proportional_k_choosability(g, k, many);
      EXPECT_EQ(a.decision, b.decision);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(a.stats, b.stats);
    }
  }
}

TEST(Choosability, CanonicalAgreesWithNaiveEnumeration) {
  struct Case {
    std::size_t n, k;
  };
  for (Case c : {Case{1, 1}, Case{2, 1}, Case{3, 1}, Case{4, 1}, Case{5, 1}, Case{1, 4}, Case{2, 2},
                 Case{2, 3}, Case{2, 4}, Case{3, 2}, Case{4, 2}}) {
    for (const Graph& g : gen::graphs_up_to_isomorphism(c.n)) {
      bool naive = oracle::naive_proportionally_choosable(g, c.k);
      EXPECT_EQ(decide_proportional_k_choosability(g, c.k).decision, naive)
          << "n=" << c.n << " k=" << c.k << " edges=" << g.size();
    }
  }
}

TEST(Canonical, DistinctAndCoverEveryAssignment) {
  for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}, std::pair{2, 4}}) {
    std::set<std::vector<std::vector<Color>>> produced;
    std::size_t count = 0;
    for_each_canonical_assignment(n, k, [&](const std::vector<std::vector<Color>>& lists) {
      ++count;
      produced.insert(lists);
      for (const auto& l : lists) EXPECT_TRUE(std::is_sorted(l.begin(), l.end()));
      return false;
    });
    EXPECT_EQ(produced.size(), count);
    gen::Rng rng(42 + n * 10 + k);
    for (int trial = 0; trial < 2000; ++trial) {
      ListAssignment L = random_assignment(n, k, n * k, rng);
      EXPECT_TRUE(produced.count(first_use_renaming(L.lists())));
    }
  }
}

TEST(Canonical, EnumerationSizes) {
  auto count = [](std::size_t n, std::size_t k) {
    std::size_t c = 0;
    for_each_canonical_assignment(n, k, [&](const std::vector<std::vector<Color>>&) {
      ++c;
      return false;
    });
    return c;
  };
  // k = 1: one canonical form per set partition of the vertices (Bell numbers)
  EXPECT_EQ(count(1, 1), 1u);
  EXPECT_EQ(count(3, 1), 5u);
  EXPECT_EQ(count(5, 1), 52u);
  // n = 2, k = 2: second list is one of {1,2},{1,3},{2,3},{3,4}
  EXPECT_EQ(count(2, 2), 4u);
}

TEST(ChiPc, Examples) {
  ChiPcResult k3 = chi_pc(family(FamilyName::Complete, {3}), 4);
  EXPECT_EQ(k3.status, ChiPcStatus::Exact);
  EXPECT_EQ(k3.value, 3u);
  EXPECT_EQ(k3.verdicts.size(), 3u);

  ChiPcResult star = chi_pc(family(FamilyName::Star, {3}), 4);
  EXPECT_EQ(star.value, 3u);

  ChiPcResult p3 = chi_pc(family(FamilyName::Path, {3}), 3);
  EXPECT_EQ(p3.value, 2u);
}

TEST(ChiPc, AboveCapAndResourceLimit) {
  ChiPcResult low = chi_pc(family(FamilyName::Complete, {3}), 2);
  EXPECT_EQ(low.status, ChiPcStatus::AboveCap);
  EXPECT_FALSE(low.value.has_value());
  EXPECT_EQ(low.lower_bound, 3u);

  ChiPcResult big = chi_pc(family(FamilyName::Complete, {5}), 5);
  EXPECT_EQ(big.status, ChiPcStatus::ResourceLimit);
  EXPECT_EQ(big.lower_bound, 4u);
  EXPECT_EQ(big.verdicts.size(), 3u);
  EXPECT_FALSE(big.message.empty());
}

TEST(Equitable, Examples) {
  EXPECT_FALSE(equitable_oracles(family(FamilyName::Star, {6}), 3, EquitableMode::Colorable));
  Graph k33 = family(FamilyName::BalancedBipartite, {3});
  EXPECT_TRUE(equitable_oracles(k33, 2, EquitableMode::Colorable));
  EXPECT_FALSE(equitable_oracles(k33, 3, EquitableMode::Colorable));
  EXPECT_FALSE(equitable_oracles(family(FamilyName::Star, {3}), 2, EquitableMode::Colorable));
}

TEST(Equitable, ColorableMatchesNaive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : gen::graphs_up_to_isomorphism(n)) {
      for (std::size_t k = 1; k <= 4; ++k) {
        EXPECT_EQ(equitable_oracles(g, k, EquitableMode::Colorable),
                  oracle::naive_equitably_colorable(g, k));
      }
    }
  }
}

TEST(Equitable, ChoosableOnSmallGraphs) {
  EXPECT_FALSE(equitable_oracles(family(FamilyName::Complete, {2}), 1, EquitableMode::Choosable));
  EXPECT_TRUE(equitable_oracles(family(FamilyName::Complete, {2}), 2, EquitableMode::Choosable));
  EXPECT_TRUE(equitable_oracles(family(FamilyName::Star, {3}), 3, EquitableMode::Choosable));
  EXPECT_FALSE(equitable_oracles(family(FamilyName::Star, {3}), 2, EquitableMode::Choosable));
}

TEST(Gallery, ListsMatchTheConstructions) {
  auto bb = gallery_instance(GallerySource::BalancedBipartite, 3);
  EXPECT_EQ(bb.graph, family(FamilyName::BalancedBipartite, {3}));
  EXPECT_EQ(bb.assignment.lists(), (std::vector<std::vector<Color>>{
                                       {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 4, 5}, {1, 4, 5}, {1, 4, 5}}));
  EXPECT_EQ(bb.assignment.eta(1), 6u);
  for (Color c = 2; c <= 5; ++c) EXPECT_EQ(bb.assignment.eta(c), 3u);

  auto sf = gallery_instance(GallerySource::StarForest, 2);
  EXPECT_EQ(sf.graph, family(FamilyName::StarForest, {2}));
  EXPECT_EQ(sf.assignment.lists(), (std::vector<std::vector<Color>>{
                                       {1, 2}, {1, 3}, {1, 3}, {1, 2}, {1, 4}, {1, 4}}));
  EXPECT_EQ(sf.assignment.eta(1), 6u);

  auto so = gallery_instance(GallerySource::StarOdd, 2);
  EXPECT_EQ(so.graph, family(FamilyName::Star, {3}));
  EXPECT_EQ(so.assignment, constant_assignment(4, 2));

  auto dm = gallery_instance(GallerySource::DoubledMultipartite, 3);
  EXPECT_EQ(dm.assignment.lists(), (std::vector<std::vector<Color>>{
                                       {1, 2, 3}, {1, 2, 3}, {1, 2, 4}, {1, 2, 4}, {1, 2, 5}, {1, 2, 5}}));
}

TEST(Gallery, NoInstanceHasAColoring) {
  for (GallerySource s : {GallerySource::StarOdd, GallerySource::DoubledMultipartite,
                          GallerySource::StarForest, GallerySource::BalancedBipartite}) {
    for (std::size_t p : {2, 3}) {
      auto inst = gallery_instance(s, p);
      EXPECT_FALSE(exists_proportional_coloring(inst.graph, inst.assignment).exists)
          << gallery_source_name(s) << " " << p;
      EXPECT_FALSE(oracle::naive_first_proportional(inst.graph, inst.assignment).has_value());
    }
  }
}

TEST(Gallery, BadParamsAndNames) {
  EXPECT_THROW(gallery_instance(GallerySource::StarOdd, 0), InputError);
  EXPECT_THROW(gallery_instance(GallerySource::BalancedBipartite, 1), InputError);
  EXPECT_EQ(parse_gallery_source("star_forest"), GallerySource::StarForest);
  EXPECT_EQ(parse_gallery_source("balanced-bipartite"), GallerySource::BalancedBipartite);
  EXPECT_FALSE(parse_gallery_source("wheel").has_value());
}
