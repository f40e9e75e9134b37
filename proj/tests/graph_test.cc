#include <gtest/gtest.h>

#include "densedel/error.h"
#include "densedel/graph.h"
#include "test_support.h"

namespace densedel {
namespace {

using testing::complete_graph;
using testing::triangle;

TEST(RationalTest, LowestTermsAndParsing) {
  EXPECT_EQ(Rational(4, 6).to_string(), "2/3");
  EXPECT_EQ(Rational(-3, -6).to_string(), "1/2");
  EXPECT_EQ(Rational::parse("5").to_string(), "5/1");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(CostTest, InfinityAbsorbsAndDominates) {
  Cost c = Rational(3, 2);
  c += Cost::infinite();
  EXPECT_TRUE(c.is_infinite());
  EXPECT_LT(Cost(Rational(1000)), Cost::infinite());
  EXPECT_EQ(Cost::parse("inf").to_string(), "inf");
  EXPECT_EQ(Cost::parse("3/6").to_string(), "1/2");
  EXPECT_THROW(Cost::parse("-1"), Error);
}

TEST(GraphTest, InducedSubgraphExamples) {
  const InducedSubgraph two = induced_subgraph(triangle(), {0, 2});
  EXPECT_EQ(two.graph.num_vertices(), 2);
  EXPECT_EQ(two.graph.num_edges(), 1);
  EXPECT_EQ(two.original, (std::vector<VertexId>{0, 2}));

  const MultiGraph k4 = complete_graph(4);
  EXPECT_EQ(induced_subgraph(k4, k4.all_vertices()).graph, k4);

  const MultiGraph loops = testing::loops_only(3);
  EXPECT_EQ(induced_subgraph(loops, {0}).graph.num_edges(), 3);
  EXPECT_THROW(induced_subgraph(k4, {0, 7}), Error);
}

TEST(GraphTest, DegreeCountsLoopsOnce) {
  EXPECT_EQ(triangle().degree(0), 2);
  const MultiGraph g(2, {{0, 0}, {0, 0}, {0, 1}});
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(MultiGraph(2, {}).degree(1), 0);
  EXPECT_THROW(g.degree(5), Error);
}

TEST(GraphTest, RejectsBadEndpoints) {
  EXPECT_THROW(MultiGraph(2, {{0, 2}}), Error);
  EXPECT_THROW(MultiGraph(2, {{-1, 0}}), Error);
}

TEST(GraphTest, TextRoundTrip) {
  const std::string text = "3 4\n0 1\n1 2\n2 2\n0 1\nc 0 3/2\nc 2 inf\n";
  const MultiGraph g = parse_graph(text);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_TRUE(g.cost(2).is_infinite());
  EXPECT_EQ(g.cost(0).value(), Rational(3, 2));
  EXPECT_EQ(g.cost(1).value(), Rational(1));
  EXPECT_EQ(format_graph(g), text);
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

TEST(GraphTest, ParseErrors) {
  EXPECT_THROW(parse_graph(""), Error);
  EXPECT_THROW(parse_graph("2 2\n0 1\n"), Error);
  EXPECT_THROW(parse_graph("2 1\n0 5\n"), Error);
  EXPECT_THROW(parse_graph("2 1\n0 1\nc 0 -1\n"), Error);
}

TEST(GraphPropertyTest, DegreeSumAndCrossingIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = testing::random_multigraph(rng);
    int degree_sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
    EXPECT_EQ(degree_sum, 2 * (g.num_edges() - g.num_loops()) + g.num_loops());

    const std::uint64_t mask = rng() & ((std::uint64_t{1} << g.num_vertices()) - 1);
    const VertexSet s = subset_from_mask(g.all_vertices(), mask);
    const VertexSet rest = set_difference(g.all_vertices(), s);
    int crossing = 0;
    for (const Edge& e : g.edges()) crossing += contains(s, e.u) != contains(s, e.v) ? 1 : 0;
    EXPECT_EQ(g.edges_within(s) + g.edges_within(rest) + crossing, g.num_edges());

    const InducedSubgraph once = induced_subgraph(g, s);
    const InducedSubgraph twice = induced_subgraph(once.graph, once.graph.all_vertices());
    EXPECT_EQ(once.graph, twice.graph);
    EXPECT_EQ(once.graph.num_edges(), g.edges_within(s));
  }
}

}  // namespace
}  // namespace densedel
