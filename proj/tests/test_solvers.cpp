#include <gtest/gtest.h>

#include "propcol/family.hpp"
#include "propcol/gallery.hpp"
#include "propcol/oracle.hpp"
#include "propcol/solvers.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace propcol;

namespace {

Graph family(FamilyName name, std::vector<std::size_t> params) {
  return build_family({name, std::move(params)});
}

bool proportional(const Graph& g, const ListAssignment& L, const Labelling& f) {
  return oracle::naive_is_proportional_coloring(g, L, f.colors);
}

std::size_t excessive_count(const ListAssignment& L, const Labelling& f) {
  std::size_t out = 0;
  for (const auto& [c, u] : classify_usage(L, f)) out += u == UsageClass::Excessive;
  return out;
}

std::size_t deficient_count(const ListAssignment& L, const Labelling& f) {
  std::size_t out = 0;
  for (const auto& [c, u] : classify_usage(L, f)) out += u == UsageClass::Deficient;
  return out;
}

/// Lists where every center color is shared by at least k leaves.
ListAssignment crowded_star_lists(std::size_t m, std::size_t k, gen::Rng& rng) {
  std::vector<std::vector<Color>> lists;
  std::vector<Color> center(k);
  std::iota(center.begin(), center.end(), Color{1});
  lists.push_back(center);
  for (std::size_t leaf = 0; leaf < m; ++leaf) {
    std::vector<Color> pool(2 * k);
    std::iota(pool.begin(), pool.end(), Color{1});
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(k);
    lists.push_back(pool);
  }
  // top up so each center color is on at least k leaves
  for (Color c = 1; c <= k; ++c) {
    std::size_t have = 0;
    for (std::size_t leaf = 1; leaf <= m; ++leaf) {
      have += std::count(lists[leaf].begin(), lists[leaf].end(), c) > 0;
    }
    for (std::size_t leaf = 1; leaf <= m && have < k; ++leaf) {
      auto& l = lists[leaf];
      if (std::find(l.begin(), l.end(), c) != l.end()) continue;
      auto victim = std::find_if(l.begin(), l.end(), [&](Color d) { return d > k; });
      if (victim == l.end()) continue;
      *victim = c;
      ++have;
    }
  }
  return ListAssignment(k, lists);
}

}  // namespace

TEST(HuingLabelling, K2Constant) {
  Graph k2 = family(FamilyName::Complete, {2});
  ListAssignment L = constant_assignment(2, 2);
  Labelling f = proportional_labelling_via_huing(k2, L, make_huing(L));
  EXPECT_TRUE(proportional(k2, L, f));
  EXPECT_NE(f[0], f[1]);
  Labelling anchored = proportional_labelling_via_huing(k2, L, make_huing(L), Anchor{0, 2});
  EXPECT_EQ(anchored, (Labelling{{2, 1}}));
}

TEST(HuingLabelling, AnchorMustBeInList) {
  Graph k2 = family(FamilyName::Complete, {2});
  ListAssignment L = constant_assignment(2, 2);
  EXPECT_THROW(proportional_labelling_via_huing(k2, L, make_huing(L), Anchor{0, 5}), PreconditionError);
  ListAssignment other(2, {{1, 3}, {1, 3}});
  EXPECT_THROW(proportional_labelling_via_huing(k2, L, make_huing(other)), PreconditionError);
}

TEST(HuingLabelling, StarRandomAssignmentsGiveLabellings) {
  Graph star = family(FamilyName::Star, {4});
  gen::Rng rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    ListAssignment L = random_assignment(5, 3, gen::uniform(rng, 3, 9), rng);
    Labelling f = proportional_labelling_via_huing(star, L, make_huing(L));
    EXPECT_TRUE(oracle::naive_in_lists(L, f.colors));
    EXPECT_TRUE(oracle::naive_usage_ok(L, f.colors));
  }
}

TEST(HuingLabelling, AnchoredRandomAndGoodHuingsAreColorings) {
  gen::Rng rng(52);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = gen::uniform(rng, 1, 9);
    std::size_t k = gen::uniform(rng, 1, 4);
    Graph g = gen::random_graph(n, 0.3, rng);
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, 3 * k), rng);
    Huing h = make_huing(L);
    Vertex v0 = gen::uniform(rng, 0, n - 1);
    Color c0 = L.list(v0)[gen::uniform(rng, 0, k - 1)];
    Labelling f = proportional_labelling_via_huing(g, L, h, Anchor{v0, c0});
    EXPECT_EQ(f[v0], c0);
    EXPECT_TRUE(oracle::naive_usage_ok(L, f.colors));
    if (is_good_huing(g, h).good) EXPECT_TRUE(proportional(g, L, f));
  }
}

TEST(LiftMonotone, StarFromThreeToFour) {
  Graph star = family(FamilyName::Star, {4});
  gen::Rng rng(53);
  KSolver three = [](const Graph&, const ListAssignment& L) { return solve_star(4, L); };
  for (int trial = 0; trial < 500; ++trial) {
    ListAssignment L = random_assignment(5, 4, gen::uniform(rng, 4, 12), rng);
    Labelling f = lift_monotone(star, L, three);
    EXPECT_TRUE(proportional(star, L, f));
    for (const ColorProfile& p : L.profiles()) {
      std::size_t used = std::count(f.colors.begin(), f.colors.end(), p.color);
      EXPECT_LE(p.q, used);
      EXPECT_LE(used, p.q + 1);
    }
  }
}

TEST(LiftMonotone, TriangleFromOrderBound) {
  Graph k3 = family(FamilyName::Complete, {3});
  gen::Rng rng(54);
  KSolver order = [](const Graph& g, const ListAssignment& L) { return solve_order_bound(g, L); };
  for (int trial = 0; trial < 300; ++trial) {
    ListAssignment L = random_assignment(3, 4, gen::uniform(rng, 4, 10), rng);
    EXPECT_TRUE(proportional(k3, L, lift_monotone(k3, L, order)));
  }
  ListAssignment constant = constant_assignment(3, 4);
  EXPECT_TRUE(proportional(k3, constant, lift_monotone(k3, constant, order)));
  EXPECT_THROW(lift_monotone(k3, constant_assignment(3, 1), order), PreconditionError);
}

TEST(Repair, ProportionalInputIsUnchanged) {
  Graph p3 = family(FamilyName::Path, {3});
  ListAssignment L = constant_assignment(3, 2);
  RepairTrace trace;
  Labelling f{{1, 2, 1}};
  EXPECT_EQ(repair_deficiencies(p3, L, f, 0, &trace), f);
  EXPECT_EQ(trace.iterations(), 0u);
}

TEST(Repair, ThreeIsolatedVertices) {
  Graph g = Graph::edgeless(3);
  ListAssignment L(2, {{1, 2}, {1, 2}, {1, 3}});
  Labelling f{{2, 2, 3}};
  auto usage = classify_usage(L, f);
  EXPECT_EQ(usage.at(1), UsageClass::Deficient);
  EXPECT_EQ(usage.at(2), UsageClass::Excessive);
  RepairTrace trace;
  Labelling out = repair_deficiencies(g, L, f, 1, &trace);
  EXPECT_EQ(out, (Labelling{{1, 2, 3}}));
  EXPECT_TRUE(proportional(g, L, out));
  EXPECT_EQ(excessive_count(L, out), 0u);
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0], (RepairStep{1, 1}));
  EXPECT_EQ(trace.steps[1], (RepairStep{0, 0}));
  // the proportional labellings of this instance, by brute force
  std::vector<std::vector<Color>> good;
  oracle::for_each_labelling(L, [&](const std::vector<Color>& h) {
    if (oracle::naive_is_proportional_coloring(g, L, h)) good.push_back(h);
    return false;
  });
  EXPECT_NE(std::find(good.begin(), good.end(), out.colors), good.end());
}

TEST(Repair, Preconditions) {
  Graph g = Graph::edgeless(3);
  ListAssignment L(2, {{1, 2}, {1, 2}, {1, 3}});
  EXPECT_THROW(repair_deficiencies(g, L, Labelling{{2, 2, 3}}, 0), PreconditionError);
  Graph k2 = family(FamilyName::Complete, {2});
  ListAssignment K(2, {{1, 2}, {1, 2}});
  EXPECT_THROW(repair_deficiencies(k2, K, Labelling{{1, 1}}, 0), PreconditionError);
  ListAssignment heavy = constant_assignment(4, 2);
  EXPECT_THROW(repair_deficiencies(Graph::edgeless(4), heavy, Labelling{{1, 1, 2, 2}}, 0),
               PreconditionError);
}

TEST(Repair, RandomNoExcessColoringsBecomeProportional) {
  gen::Rng rng(55);
  std::size_t done = 0;
  for (int trial = 0; trial < 3000 && done < 500; ++trial) {
    std::size_t n = gen::uniform(rng, 2, 8);
    std::size_t k = gen::uniform(rng, 2, 5);
    Graph g = gen::random_graph(n, 0.3, rng);
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, 3 * k), rng);
    if (L.max_eta() >= 2 * k) continue;
    // worst no-excess coloring: last one in lexicographic order found by the oracle
    std::optional<Labelling> start;
    for_each_windowed_coloring(g, L, CountWindow::NoExcess, 1e9, [&](const Labelling& f) {
      start = f;
      return deficient_count(L, f) > 0;
    });
    if (!start) continue;
    RepairTrace trace;
    Labelling out = repair_deficiencies(g, L, *start, 0, &trace);
    EXPECT_TRUE(proportional(g, L, out));
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
      EXPECT_LT(trace.steps[i].deficient, trace.steps[i - 1].deficient);
      EXPECT_LE(trace.steps[i].excessive, trace.steps[i - 1].excessive);
    }
    ++done;
  }
  EXPECT_EQ(done, 500u);
}

TEST(Repair, BudgetOfExcessiveColorsIsKept) {
  gen::Rng rng(56);
  std::size_t done = 0;
  for (int trial = 0; trial < 4000 && done < 200; ++trial) {
    std::size_t n = gen::uniform(rng, 2, 7);
    std::size_t k = gen::uniform(rng, 2, 4);
    Graph g = gen::random_graph(n, 0.3, rng);
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, 3 * k), rng);
    if (L.max_eta() >= 2 * k) continue;
    auto start = find_windowed_coloring(g, L, CountWindow::Unbounded, 1e9);
    if (!start) continue;
    std::size_t t = excessive_count(L, *start);
    Labelling out = repair_deficiencies(g, L, *start, t);
    EXPECT_TRUE(oracle::naive_proper(g, out.colors));
    EXPECT_TRUE(oracle::naive_in_lists(L, out.colors));
    EXPECT_EQ(deficient_count(L, out), 0u);
    EXPECT_LE(excessive_count(L, out), t);
    ++done;
  }
  EXPECT_EQ(done, 200u);
}

TEST(AuxDigraph, OutDegreeIsEta) {
  ListAssignment L(2, {{1, 2}, {1, 3}, {2, 3}});
  std::vector<Color> f{1, 3, kUncolored};
  AuxDigraph d = AuxDigraph::build(L, f);
  EXPECT_EQ(d.out_degree(0), L.eta(1));
  EXPECT_EQ(d.out_degree(1), L.eta(3));
  EXPECT_EQ(d.out_degree(2), 0u);
  EXPECT_EQ(d.out[0], (std::vector<Vertex>{0, 1}));
  std::vector<char> target{0, 0, 1};
  EXPECT_EQ(d.shortest_path({0}, target), (std::vector<Vertex>{0, 1, 2}));
}

TEST(NoExcess, SingleVertex) {
  const std::size_t before = no_excess_fallback_counter().load();
  Graph g = Graph::edgeless(1);
  ListAssignment L(4, {{5, 6, 7, 8}});
  Labelling f = color_without_excess(g, L, Rational{2, 1});
  EXPECT_TRUE(L.contains(0, f[0]));
  EXPECT_EQ(no_excess_fallback_counter().load(), before);
}

TEST(NoExcess, FourCycleWithLTwo) {
  const std::size_t before = no_excess_fallback_counter().load();
  Graph c4 = family(FamilyName::Cycle, {4});
  gen::Rng rng(57);
  for (int trial = 0; trial < 500; ++trial) {
    ListAssignment L = random_assignment(4, 4, gen::uniform(rng, 4, 10), rng);
    Labelling f = color_without_excess(c4, L, Rational{2, 1});
    EXPECT_TRUE(oracle::naive_proper(c4, f.colors));
    EXPECT_TRUE(oracle::naive_in_lists(L, f.colors));
    EXPECT_EQ(excessive_count(L, f), 0u);
  }
  EXPECT_EQ(no_excess_fallback_counter().load(), before);
}

TEST(NoExcess, RandomGraphsAtTheSmallOrderInstantiation) {
  const std::size_t before = no_excess_fallback_counter().load();
  gen::Rng rng(58);
  std::size_t done = 0;
  for (int trial = 0; trial < 20000 && done < 1000; ++trial) {
    std::size_t n = gen::uniform(rng, 3, 12);
    Graph g = gen::random_nonempty_graph(n, gen::uniform(rng, 1, 3) / 10.0, rng);
    std::size_t delta = g.max_degree();
    std::size_t k = delta + (n + 1) / 2;
    // the solver only takes this route when n > k, which makes l > 2
    if (n <= k) continue;
    ++done;
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, 3 * k), rng);
    NoExcessStats stats;
    Labelling f = color_without_excess(
        g, L, Rational{static_cast<std::int64_t>(2 * delta + n), static_cast<std::int64_t>(2 * delta)},
        &stats);
    EXPECT_TRUE(oracle::naive_proper(g, f.colors));
    EXPECT_TRUE(oracle::naive_in_lists(L, f.colors));
    EXPECT_EQ(excessive_count(L, f), 0u);
    EXPECT_EQ(stats.fallbacks, 0u);
  }
  EXPECT_EQ(done, 1000u);
  EXPECT_EQ(no_excess_fallback_counter().load(), before);
}

TEST(NoExcess, Preconditions) {
  Graph c4 = family(FamilyName::Cycle, {4});
  ListAssignment L = constant_assignment(4, 3);
  EXPECT_THROW(color_without_excess(c4, L, Rational{2, 1}), PreconditionError);
  EXPECT_THROW(color_without_excess(c4, constant_assignment(4, 8), Rational{3, 2}), PreconditionError);
  Graph k2 = family(FamilyName::Complete, {2});
  EXPECT_THROW(color_without_excess(k2, constant_assignment(2, 1), Rational{2, 1}), PreconditionError);
}

TEST(SmallOrder, PathWithFourLists) {
  Graph p3 = family(FamilyName::Path, {3});
  gen::Rng rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    ListAssignment L = random_assignment(3, 4, gen::uniform(rng, 4, 12), rng);
    EXPECT_TRUE(proportional(p3, L, solve_smallorder(p3, L)));
  }
}

TEST(SmallOrder, EdgeUsesOrderBound) {
  Graph k2 = family(FamilyName::Complete, {2});
  ListAssignment L(2, {{1, 2}, {2, 3}});
  EXPECT_TRUE(proportional(k2, L, solve_smallorder(k2, L)));
}

TEST(SmallOrder, RandomGraphsUpToTen) {
  const std::size_t before = no_excess_fallback_counter().load();
  gen::Rng rng(60);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = gen::uniform(rng, 2, 10);
    Graph g = gen::random_nonempty_graph(n, gen::uniform(rng, 1, 5) / 10.0, rng);
    std::size_t k = g.max_degree() + (n + 1) / 2;
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, 3 * k), rng);
    EXPECT_TRUE(proportional(g, L, solve_smallorder(g, L)));
  }
  EXPECT_EQ(no_excess_fallback_counter().load(), before);
}

TEST(SmallOrder, Preconditions) {
  EXPECT_THROW(solve_smallorder(Graph::edgeless(3), constant_assignment(3, 3)), PreconditionError);
  Graph p5 = family(FamilyName::Path, {5});
  EXPECT_THROW(solve_smallorder(p5, constant_assignment(5, 4)), PreconditionError);
}

TEST(OrderBound, Examples) {
  Graph k3 = family(FamilyName::Complete, {3});
  EXPECT_EQ(solve_order_bound(k3, constant_assignment(3, 3)), (Labelling{{1, 2, 3}}));
  Graph p3 = family(FamilyName::Path, {3});
  Labelling f = solve_order_bound(p3, constant_assignment(3, 2));
  EXPECT_EQ(f[0], f[2]);
  EXPECT_NE(f[0], f[1]);
  EXPECT_THROW(solve_order_bound(k3, constant_assignment(3, 2)), PreconditionError);
  EXPECT_THROW(solve_order_bound(p3, constant_assignment(3, 1)), PreconditionError);
}

TEST(OrderBound, PathWithRandomPairs) {
  Graph p3 = family(FamilyName::Path, {3});
  gen::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    ListAssignment L = random_assignment(3, 2, gen::uniform(rng, 2, 6), rng);
    Labelling f = solve_order_bound(p3, L);
    EXPECT_TRUE(proportional(p3, L, f));
    EXPECT_TRUE(exists_proportional_coloring(p3, L).exists);
  }
}

TEST(OrderBound, RandomGraphsAtBothThresholds) {
  gen::Rng rng(62);
  for (int trial = 0; trial < 1500; ++trial) {
    std::size_t n = gen::uniform(rng, 2, 8);
    Graph g = gen::random_graph(n, gen::uniform(rng, 2, 9) / 10.0, rng);
    std::size_t k = n;
    if (!g.is_complete() && gen::uniform(rng, 0, 1)) k = n - 1;
    if (gen::uniform(rng, 0, 4) == 0) ++k;
    // small palettes make forced colors and constant lists likely
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, k + 3), rng);
    EXPECT_TRUE(proportional(g, L, solve_order_bound(g, L)));
  }
}

TEST(Star, FourLeavesConstantLists) {
  ListAssignment L = constant_assignment(5, 3);
  Labelling f = solve_star(4, L);
  Graph star = family(FamilyName::Star, {4});
  EXPECT_TRUE(proportional(star, L, f));
  // center's color is used once, the others twice
  auto counts = color_counts(f);
  EXPECT_EQ(counts.at(f[0]), 1u);
  for (Color c = 1; c <= 3; ++c) {
    if (c != f[0]) EXPECT_EQ(counts.at(c), 2u);
  }
  std::size_t good = 0;
  oracle::for_each_labelling(L, [&](const std::vector<Color>& h) {
    good += oracle::naive_is_proportional_coloring(star, L, h);
    return false;
  });
  // center: 3 choices; leaves: 4!/(2!2!) splits of the other two colors
  EXPECT_EQ(good, 18u);
}

TEST(Star, RandomAssignments) {
  gen::Rng rng(63);
  for (std::size_t m = 2; m <= 8; ++m) {
    const std::size_t k = 1 + (m + 1) / 2;
    Graph star = family(FamilyName::Star, {m});
    for (int trial = 0; trial < 300; ++trial) {
      ListAssignment L = random_assignment(m + 1, k, gen::uniform(rng, k, 3 * k), rng);
      EXPECT_TRUE(proportional(star, L, solve_star(m, L))) << "m=" << m;
    }
  }
}

TEST(Star, CrowdedAssignmentsTakeTheRepairBranch) {
  gen::Rng rng(64);
  for (std::size_t m : {5, 6, 7, 8}) {
    const std::size_t k = 1 + (m + 1) / 2;
    Graph star = family(FamilyName::Star, {m});
    for (int trial = 0; trial < 300; ++trial) {
      ListAssignment L = crowded_star_lists(m, k, rng);
      EXPECT_TRUE(proportional(star, L, solve_star(m, L)));
    }
  }
}

TEST(Star, Preconditions) {
  EXPECT_THROW(solve_star(3, constant_assignment(4, 2)), PreconditionError);
  EXPECT_THROW(solve_star(3, constant_assignment(3, 3)), PreconditionError);
}

TEST(Star, AnyCenterPosition) {
  Graph g = build_graph(5, {{3, 0}, {3, 1}, {3, 2}, {3, 4}});
  EXPECT_EQ(star_center(g), 3u);
  EXPECT_EQ(star_center(family(FamilyName::Path, {4})), kNoVertex);
  gen::Rng rng(65);
  for (int trial = 0; trial < 200; ++trial) {
    ListAssignment L = random_assignment(5, 3, gen::uniform(rng, 3, 8), rng);
    EXPECT_TRUE(proportional(g, L, solve_star_graph(g, L)));
  }
}

TEST(Components, ProfileValues) {
  Graph g = disjoint_union({family(FamilyName::Complete, {2}), family(FamilyName::Complete, {1})});
  ListAssignment L(2, {{1, 2}, {1, 3}, {1, 4}});
  ComponentProfile p = component_profile(g, L);
  EXPECT_EQ(p.a.at(1), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(p.delta.at(1), -1);
  EXPECT_EQ(p.delta.at(2), -1);
  EXPECT_EQ(p.sigma, 0);

  Graph two_edges = disjoint_union({family(FamilyName::Complete, {2}), family(FamilyName::Complete, {2})});
  ListAssignment M(3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {1, 8, 9}});
  ComponentProfile q = component_profile(two_edges, M);
  EXPECT_EQ(q.delta.at(1), 2);
  EXPECT_EQ(q.sigma, 2);
  ComponentsTrace trace;
  Labelling f = solve_components(two_edges, M, &trace);
  EXPECT_TRUE(proportional(two_edges, M, f));
  ASSERT_GE(trace.sigma.size(), 2u);
  EXPECT_EQ(trace.sigma.front(), 2);
  EXPECT_EQ(trace.sigma.back(), 0);
  for (std::size_t i = 1; i < trace.sigma.size(); ++i) EXPECT_LT(trace.sigma[i], trace.sigma[i - 1]);
}

TEST(Components, EdgePlusVertex) {
  Graph g = disjoint_union({family(FamilyName::Complete, {2}), family(FamilyName::Complete, {1})});
  gen::Rng rng(66);
  for (int trial = 0; trial < 300; ++trial) {
    ListAssignment L = random_assignment(3, 2, gen::uniform(rng, 2, 6), rng);
    EXPECT_TRUE(proportional(g, L, solve_components(g, L)));
  }
}

TEST(Components, CliqueUnion) {
  Graph g = family(FamilyName::CliqueUnion, {3, 2, 1});
  gen::Rng rng(67);
  for (int trial = 0; trial < 500; ++trial) {
    ListAssignment L = random_assignment(6, 3, gen::uniform(rng, 3, 9), rng);
    ComponentsTrace trace;
    EXPECT_TRUE(proportional(g, L, solve_components(g, L, &trace)));
    for (std::size_t i = 1; i < trace.sigma.size(); ++i) EXPECT_LT(trace.sigma[i], trace.sigma[i - 1]);
  }
}

TEST(Components, SingleCliqueIsBijective) {
  for (std::size_t k = 1; k <= 5; ++k) {
    Graph g = family(FamilyName::Complete, {k});
    Labelling f = solve_components(g, constant_assignment(k, k));
    std::vector<Color> sorted = f.colors;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Color> expected(k);
    std::iota(expected.begin(), expected.end(), Color{1});
    EXPECT_EQ(sorted, expected);
  }
}

TEST(Components, RandomSmallComponents) {
  gen::Rng rng(68);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t k = gen::uniform(rng, 1, 4);
    std::vector<Graph> parts;
    std::size_t n = 0;
    std::size_t pieces = gen::uniform(rng, 1, 4);
    for (std::size_t i = 0; i < pieces; ++i) {
      Graph part = gen::random_graph(gen::uniform(rng, 1, k), 0.7, rng);
      n += part.order();
      parts.push_back(part);
    }
    Graph g = disjoint_union(parts);
    if (largest_component(g) > k) continue;
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, 2 * k + 1), rng);
    EXPECT_TRUE(proportional(g, L, solve_components(g, L)));
  }
}

TEST(Components, OversizedComponent) {
  EXPECT_THROW(solve_components(family(FamilyName::Path, {3}), constant_assignment(3, 2)),
               PreconditionError);
}

TEST(Solve, AutoDispatch) {
  Graph k3 = family(FamilyName::Complete, {3});
  EXPECT_EQ(solve(k3, constant_assignment(3, 3)).used, Strategy::Order);
  Graph star = family(FamilyName::Star, {6});
  EXPECT_EQ(solve(star, constant_assignment(7, 4)).used, Strategy::Star);
  Graph cu = family(FamilyName::CliqueUnion, {3, 2, 1});
  EXPECT_EQ(solve(cu, constant_assignment(6, 3)).used, Strategy::Components);
  Graph c8 = family(FamilyName::Cycle, {8});
  SolveResult r = solve(c8, constant_assignment(8, 6));
  EXPECT_EQ(r.used, Strategy::SmallOrder);
  ASSERT_TRUE(r.coloring.has_value());
  EXPECT_TRUE(proportional(c8, constant_assignment(8, 6), *r.coloring));

  auto inst = gallery_instance(GallerySource::DoubledMultipartite, 2);
  SolveResult none = solve(inst.graph, inst.assignment);
  EXPECT_EQ(none.used, Strategy::Oracle);
  EXPECT_FALSE(none.coloring.has_value());
}

TEST(Solve, ExplicitStrategyThatDoesNotApply) {
  Graph p4 = family(FamilyName::Path, {4});
  EXPECT_THROW(solve(p4, constant_assignment(4, 2), Strategy::Star), PreconditionError);
  EXPECT_THROW(solve(p4, constant_assignment(4, 2), Strategy::Order), PreconditionError);
  EXPECT_EQ(parse_strategy("smallorder"), Strategy::SmallOrder);
  EXPECT_EQ(parse_strategy(strategy_name(Strategy::Components)), Strategy::Components);
  EXPECT_FALSE(parse_strategy("magic").has_value());
}

TEST(Solve, AutoAgreesWithOracleOnSmallInstances) {
  gen::Rng rng(69);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = gen::uniform(rng, 1, 7);
    std::size_t k = gen::uniform(rng, 1, 4);
    Graph g = gen::random_graph(n, 0.4, rng);
    ListAssignment L = random_assignment(n, k, gen::uniform(rng, k, 2 * k + 1), rng);
    SolveResult r = solve(g, L);
    bool exists = exists_proportional_coloring(g, L).exists;
    EXPECT_EQ(r.coloring.has_value(), exists);
    if (r.coloring) EXPECT_TRUE(proportional(g, L, *r.coloring));
  }
}
