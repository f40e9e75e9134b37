#include <gtest/gtest.h>

#include <random>

#include "densedel/bruteforce.h"
#include "densedel/densest.h"
#include "densedel/error.h"
#include "densedel/gadgets.h"

namespace densedel {
namespace {

SetCoverInstance single_element(int f) {
  SetCoverInstance sc;
  sc.universe = 1;
  for (int i = 0; i < f; ++i) {
    sc.sets.push_back({0});
    sc.costs.emplace_back(Rational(1));
  }
  return sc;
}

int count_loops(const MultiGraph& g) { return g.num_loops(); }

TEST(SetCoverTest, ParseAndFormat) {
  const std::string text = "3 2\n1 2 0 1\ninf 2 1 2\n";
  const SetCoverInstance sc = parse_set_cover(text);
  EXPECT_EQ(sc.universe, 3);
  EXPECT_TRUE(sc.costs[1].is_infinite());
  EXPECT_EQ(format_set_cover(sc), "3 2\n1/1 2 0 1\ninf 2 1 2\n");
  EXPECT_THROW(parse_set_cover("2 1\n1 1 0\n"), Error);  // element 1 uncovered
  EXPECT_THROW(parse_set_cover("2 1\n1 3 0 1\n"), Error);
}

TEST(GadgetTest, SingleTreeAtRhoTwo) {
  const GadgetInstance gi = build_gadget(single_element(8), 2);
  EXPECT_EQ(gi.graph.num_vertices(), 15);
  EXPECT_EQ(gi.graph.num_edges() - count_loops(gi.graph), 14);
  EXPECT_EQ(count_loops(gi.graph), 17);
  ASSERT_EQ(gi.element_block.size(), 1u);
  const VertexSet& tree = gi.element_block[0];
  EXPECT_EQ(Rational(gi.graph.edges_within(tree), static_cast<int>(tree.size())), Rational(31, 15));
  EXPECT_GT(Rational(31, 15), Rational(2));
  for (VertexId v = 8; v < 15; ++v) EXPECT_TRUE(gi.graph.cost(v).is_infinite());
  EXPECT_EQ(gi.provenance[gi.element_anchor[0]].role, GadgetRole::kTreeRoot);
}

TEST(GadgetTest, RhoThreeAddsOneLoopEverywhere) {
  const GadgetInstance two = build_gadget(single_element(4), 2);
  const GadgetInstance three = build_gadget(single_element(4), 3);
  ASSERT_EQ(two.graph.num_vertices(), three.graph.num_vertices());
  EXPECT_EQ(count_loops(three.graph), count_loops(two.graph) + two.graph.num_vertices());
  for (VertexId v = 0; v < two.graph.num_vertices(); ++v) {
    EXPECT_EQ(three.graph.degree(v), two.graph.degree(v) + 1);
  }
}

TEST(GadgetTest, VertexCountFormula) {
  // Six sets, three elements each of frequency 4.
  const SetCoverInstance sc =
      parse_set_cover("3 6\n1 2 0 1\n2 2 0 2\n1 2 0 2\n3 2 1 2\n1 2 0 1\n1 2 1 2\n");
  const GadgetInstance gi = build_gadget(sc, 2);
  EXPECT_EQ(gi.graph.num_vertices(), 6 + 3 * 3);
}

TEST(GadgetTest, RejectsUnsupportedFrequencies) {
  EXPECT_THROW(build_gadget(single_element(3), 2), Error);
  EXPECT_THROW(build_gadget(single_element(2), 2), Error);
  EXPECT_THROW(build_gadget(single_element(4), 1), Error);
  EXPECT_THROW(build_gadget(parse_set_cover("2 4\n1 2 0 1\n1 2 0 1\n1 2 0 1\n1 1 0\n"), 2), Error);
}

TEST(GadgetTest, CoverMapsToFeasibleDeletion) {
  const GadgetInstance gi = build_gadget(single_element(8), 2);
  const VertexSet del = cover_to_deletion(gi, {3});
  EXPECT_EQ(gi.graph.total_cost(del).value(), Rational(1));
  EXPECT_TRUE(check_density_integral(delete_vertices(gi.graph, del).graph, 2));
  EXPECT_EQ(extract_cover(gi, {3}), (std::vector<int>{3}));
  EXPECT_EQ(extract_cover(gi, {0, 1, 2, 3, 4, 5, 6, 7}), (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_THROW(extract_cover(gi, {}), Error);
  EXPECT_THROW(extract_cover(gi, {3, 9}), Error);
  try {
    extract_cover(gi, {9});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFiniteCost);
  }
  try {
    extract_cover(gi, {});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFeasible);
  }
}

TEST(WarmupGadgetTest, Claw) {
  const SetCoverInstance sc = parse_set_cover("1 2\n1 1 0\n1 1 0\n");
  const GadgetInstance gi = build_warmup_gadget(sc);
  EXPECT_EQ(gi.rho, 1);
  EXPECT_EQ(gi.graph.num_vertices(), 3);
  EXPECT_EQ(gi.graph.num_loops(), 2);
  EXPECT_EQ(gi.graph.degree(2), 2);
  EXPECT_EQ(extract_cover(gi, {1}), (std::vector<int>{1}));
}

TEST(WarmupGadgetTest, ElementDegreeIsRhoPlusOne) {
  const SetCoverInstance sc = parse_set_cover("4 3\n1 2 0 1\n2 3 1 2 3\n1 3 0 2 3\n");
  const GadgetInstance gi = build_warmup_gadget(sc);
  for (VertexId u : gi.element_anchor) EXPECT_EQ(gi.graph.degree(u), gi.rho + 1);
  const BruteResult cover = brute_set_cover(sc);
  const BruteResult del = brute_opt_deletion(gi.graph, Rational(gi.rho));
  EXPECT_EQ(cover.value.value(), del.value.value());
  for (const VertexSet& s : cover.witnesses) {
    EXPECT_TRUE(check_density_integral(delete_vertices(gi.graph, cover_to_deletion(gi, s)).graph, gi.rho));
  }
}

TEST(GadgetPropertyTest, RoundTripOnSmallInstances) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    // |U| = 2, eight sets: each element lands in exactly four of them.
    SetCoverInstance sc;
    sc.universe = 2;
    sc.sets.assign(8, {});
    for (int e = 0; e < 2; ++e) {
      std::vector<int> ids = {0, 1, 2, 3, 4, 5, 6, 7};
      std::shuffle(ids.begin(), ids.end(), rng);
      for (int i = 0; i < 4; ++i) sc.sets[ids[i]].push_back(e);
    }
    for (int s = 0; s < 8; ++s) sc.costs.emplace_back(Rational(1 + static_cast<int>(rng() % 5)));
    const int rho = 2 + trial % 2;
    const GadgetInstance gi = build_gadget(sc, rho);
    const BruteResult cover = brute_set_cover(sc);
    const BruteResult del = brute_opt_deletion(gi.graph, Rational(rho));
    ASSERT_TRUE(del.feasible);
    EXPECT_EQ(cover.value.value(), del.value.value());
    for (const VertexSet& x : del.witnesses) {
      const std::vector<int> got = extract_cover(gi, x);
      EXPECT_TRUE(sc.is_cover(got));
      EXPECT_EQ(sc.cost_of(got).value(), cover.value.value());
    }
  }
}

}  // namespace
}  // namespace densedel
