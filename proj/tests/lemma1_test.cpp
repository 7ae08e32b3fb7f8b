#include <gtest/gtest.h>

#include "graphs.hpp"
#include "p4wis/lemma1.hpp"
#include "p4wis/recognition.hpp"
#include "p4wis/testkit.hpp"

namespace p4wis {
namespace {

using test::set;

TEST(ContainingPair, PathExamples) {
  const Graph p4 = test::path(4);
  const SolveResult ac = solve_containing_ac(p4, p4.vertices(), {0, 1, 2, 3});
  EXPECT_EQ(ac.weight, 2);
  EXPECT_EQ(ac.chosen, set(p4, {0, 2}));
  const SolveResult bd = solve_containing_bd(p4, p4.vertices(), {0, 1, 2, 3});
  EXPECT_EQ(bd.chosen, set(p4, {1, 3}));

  const Graph p5 = test::path(5);
  const SolveResult r = solve_containing_ac(p5, p5.vertices(), {0, 1, 2, 3});
  EXPECT_EQ(r.weight, 3);
  EXPECT_EQ(r.chosen, set(p5, {0, 2, 4}));
}

TEST(ContainingPair, ConstraintBindsEvenWhenSuboptimal) {
  const Graph g = test::path({10, 1, 1, 10});
  EXPECT_EQ(solve_containing_bd(g, g.vertices(), {0, 1, 2, 3}).weight, 11);
  const Graph unit = test::path(4);
  EXPECT_EQ(solve_containing_bd(unit, unit.vertices(), {0, 1, 2, 3}).weight, 2);
}

TEST(ContainingPair, RejectsForeignHostAndNonPath) {
  const Graph p4 = test::path(4);
  EXPECT_THROW(solve_containing_ac(p4, VertexSet(5), {0, 1, 2, 3}), InputError);
  EXPECT_THROW(solve_containing_ac(p4, p4.vertices(), {0, 2, 1, 3}), InputError);
}

TEST(ContainingPair, AntiNeighbourhoodP4IsReported) {
  const Graph two = test::unit(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
  try {
    solve_containing_ac(two, two.vertices(), {0, 1, 2, 3});
    FAIL();
  } catch (const ClassViolation& e) {
    EXPECT_EQ(e.witness().size(), 8u);
  }
}

TEST(ContainingPair, RandomInstancesAgainstOracle) {
  SolveStats stats;
  SolveOptions opt;
  opt.stats = &stats;
  int paths = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto model = seed % 2 ? testkit::Model::kRejection : testkit::Model::kClustered;
    const Graph g = testkit::gen_instance(model, 6 + seed % 9,
                                          0.2 + 0.1 * static_cast<double>(seed % 8), seed);
    for (const InducedP4& p : enumerate_induced_p4(g, g.vertices())) {
      for (const InducedP4& q : {p, p.reversed()}) {
        ++paths;
        const SolveResult ac = solve_containing_ac(g, g.vertices(), q, opt);
        const SolveResult bd = solve_containing_bd(g, g.vertices(), q, opt);
        EXPECT_TRUE(ac.chosen.contains(q.a) && ac.chosen.contains(q.c));
        EXPECT_TRUE(bd.chosen.contains(q.b) && bd.chosen.contains(q.d));
        EXPECT_EQ(ac.weight, testkit::oracle_wis_containing(g, set(g, {q.a, q.c})).weight);
        EXPECT_EQ(bd.weight, testkit::oracle_wis_containing(g, set(g, {q.b, q.d})).weight);
        EXPECT_EQ(bd.weight, solve_containing_ac(g, g.vertices(), q.reversed()).weight);
      }
    }
  }
  EXPECT_GT(paths, 0);
  EXPECT_GT(stats.merged_entries, 0u);
  EXPECT_EQ(stats.two_sided_fallback_branches, 0u);
}

// Smallest generated instances (after vertex and edge deletion) on which the
// pair chain takes each kind of entry.
void expect_entry_kinds(const Graph& g, bool want_two_sided) {
  ASSERT_TRUE(is_class_member(g).member);
  SolveStats stats;
  SolveOptions opt;
  opt.stats = &stats;
  for (const InducedP4& p : enumerate_induced_p4(g, g.vertices())) {
    for (const InducedP4& q : {p, p.reversed()}) {
      const SolveResult r = solve_containing_ac(g, g.vertices(), q, opt);
      EXPECT_EQ(r.weight, testkit::oracle_wis_containing(g, set(g, {q.a, q.c})).weight);
    }
  }
  EXPECT_GT(stats.merged_entries, 0u);
  if (want_two_sided) EXPECT_GT(stats.two_sided_entries, 0u);
  EXPECT_EQ(stats.two_sided_fallback_branches, 0u);
}

TEST(ContainingPair, MergedEntryOnHandBuiltInstance) {
  expect_entry_kinds(test::unit(7, {{0, 1}, {0, 4}, {2, 5}, {3, 5}, {4, 5}, {5, 6}}), false);
}

TEST(ContainingPair, TwoSidedEntryOnHandBuiltInstance) {
  expect_entry_kinds(test::unit(11, {{0, 10}, {1, 10}, {2, 4}, {2, 7}, {3, 7}, {4, 6}, {4, 9},
                                     {5, 6}, {7, 8}, {8, 10}, {9, 10}}),
                     true);
}

TEST(ContainingPair, RestrictedHost) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = testkit::gen_instance(testkit::Model::kClustered, 12, 0.5, seed);
    const InducedP4 p{0, 1, 2, 3};
    ASSERT_TRUE(is_induced_p4(g, p, g.vertices()));
    VertexSet host = g.vertices();
    for (Vertex v = 4; v < g.order(); v += 3) host.erase(v);
    const SolveResult r = solve_containing_ac(g, host, p);
    EXPECT_TRUE(r.chosen.is_subset_of(host));
    const Graph sub = test::induced(g, host);
    // Vertices 0..3 keep their ids in the relabelled graph.
    EXPECT_EQ(r.weight, testkit::oracle_wis_containing(sub, set(sub, {0, 2})).weight);
  }
}

TEST(BranchVertex, CountThenContainment) {
  // T: components {0,1} (edge), {2} and {3}. Candidates: 4 sees 0 and 2,
  // 5 sees 1 and 3, 6 sees 0 only.
  const Graph g = test::unit(7, {{0, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 3}, {6, 0}});
  const VertexSet t = set(g, {0, 1, 2, 3});
  EXPECT_EQ(select_branch_vertex(g, set(g, {4, 5, 6}), t), 4u);
  EXPECT_EQ(select_branch_vertex(g, set(g, {5, 6}), t), 5u);
  EXPECT_EQ(select_branch_vertex(g, set(g, {6}), t), 6u);
  EXPECT_THROW(select_branch_vertex(g, g.empty_set(), t), InputError);
}

TEST(BranchVertex, ContainmentBreaksCountTies) {
  // T = K_{2,2} on 0..3 (one component). 4 sees {0}, 5 sees {0, 1}:
  // equal counts, but N(4) is strictly inside N(5).
  const Graph g = test::unit(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 0}, {5, 0}, {5, 1}});
  EXPECT_EQ(select_branch_vertex(g, set(g, {4, 5}), set(g, {0, 1, 2, 3})), 5u);
}

TEST(BranchVertex, InvariantOnGeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = testkit::gen_instance(testkit::Model::kClustered, 14, 0.4, seed);
    const VertexSet candidates = VertexSet::from(g.order(), std::vector<Vertex>{4, 5, 6, 7, 8});
    const VertexSet t = g.vertices() - candidates - VertexSet(g.order(), {0, 1, 2, 3});
    const Vertex v = select_branch_vertex(g, candidates, t);
    const auto comps = components_with_certificates(g, t).components;
    auto touched = [&](Vertex x) {
      std::size_t k = 0;
      for (const Component& c : comps) k += g.neighbors(x).intersects(c.members);
      return k;
    };
    for (Vertex u : candidates) {
      EXPECT_LE(touched(u), touched(v));
      const VertexSet nu = g.neighbors(u) & t, nv = g.neighbors(v) & t;
      EXPECT_FALSE(nv.is_subset_of(nu) && nv != nu) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace p4wis
