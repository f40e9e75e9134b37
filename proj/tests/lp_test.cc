#include <gtest/gtest.h>

#include "densedel/bruteforce.h"
#include "densedel/error.h"
#include "densedel/gadgets.h"
#include "densedel/lp.h"
#include "densedel/orientation_lp.h"
#include "test_support.h"

namespace densedel {
namespace {

using testing::complete_graph;
using testing::triangle;

LinearConstraint row(std::vector<std::pair<int, Rational>> terms, Sense sense, Rational rhs) {
  return {std::move(terms), sense, std::move(rhs), ""};
}

TEST(SimplexTest, SmallOptimum) {
  // min -x - y, x + 2y <= 4, 3x + y <= 6.
  LinearProgram lp;
  const int x = lp.add_variable(Rational(-1));
  const int y = lp.add_variable(Rational(-1));
  lp.add_constraint(row({{x, 1}, {y, 2}}, Sense::kLessEqual, 4));
  lp.add_constraint(row({{x, 3}, {y, 1}}, Sense::kLessEqual, 6));
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(-14, 5));
  EXPECT_EQ(s.values[x], Rational(8, 5));
  EXPECT_EQ(s.values[y], Rational(6, 5));
  EXPECT_EQ(lp.first_violation(s.values), -1);
}

TEST(SimplexTest, InfeasibleAndUnbounded) {
  LinearProgram inf;
  const int x = inf.add_variable(Rational(1));
  inf.add_constraint(row({{x, 1}}, Sense::kLessEqual, 1));
  inf.add_constraint(row({{x, 1}}, Sense::kGreaterEqual, 2));
  EXPECT_EQ(solve_lp(inf).status, LpStatus::kInfeasible);

  LinearProgram unb;
  const int y = unb.add_variable(Rational(-1));
  unb.add_constraint(row({{y, 1}}, Sense::kGreaterEqual, 1));
  EXPECT_EQ(solve_lp(unb).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, EqualityAndNegativeRhs) {
  // min x + y, x - y = -1, x + y >= 3.
  LinearProgram lp;
  const int x = lp.add_variable(Rational(1));
  const int y = lp.add_variable(Rational(1));
  lp.add_constraint(row({{x, 1}, {y, -1}}, Sense::kEqual, -1));
  lp.add_constraint(row({{x, 1}, {y, 1}}, Sense::kGreaterEqual, 3));
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(3));
  EXPECT_EQ(s.values[x], Rational(1));
  EXPECT_EQ(s.values[y], Rational(2));
}

TEST(SimplexTest, BealeCyclingExampleTerminates) {
  LinearProgram lp;
  const int x4 = lp.add_variable(Rational(-3, 4));
  const int x5 = lp.add_variable(Rational(20));
  const int x6 = lp.add_variable(Rational(-1, 2));
  const int x7 = lp.add_variable(Rational(6));
  lp.add_constraint(row({{x4, Rational(1, 4)}, {x5, -8}, {x6, -1}, {x7, 9}}, Sense::kLessEqual, 0));
  lp.add_constraint(row({{x4, Rational(1, 2)}, {x5, -12}, {x6, Rational(-1, 2)}, {x7, 3}}, Sense::kLessEqual, 0));
  lp.add_constraint(row({{x6, 1}}, Sense::kLessEqual, 1));
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(-5, 4));
}

TEST(OrientationLpTest, Examples) {
  const OrientationLP empty = build_orientation_lp(MultiGraph(3, {}), Rational(1));
  const OrientationLPSolution e = solve_orientation_lp(empty);
  EXPECT_EQ(e.lp.objective, Rational(0));
  for (const Rational& x : e.x) EXPECT_EQ(x, Rational(0));

  const MultiGraph edge(2, {{0, 1}}, {Cost(Rational(1)), Cost(Rational(3))});
  const OrientationLP vc = build_orientation_lp(edge, Rational(0));
  EXPECT_EQ(vc.program.num_variables(), 2 + 2);
  const OrientationLPSolution v = solve_orientation_lp(vc);
  EXPECT_EQ(v.lp.objective, Rational(1));
  EXPECT_EQ(v.x, (std::vector<Rational>{1, 0}));

  EXPECT_EQ(solve_orientation_lp(build_orientation_lp(triangle(), Rational(1))).lp.objective, Rational(0));
  EXPECT_GT(solve_orientation_lp(build_orientation_lp(complete_graph(4), Rational(1))).lp.objective, Rational(0));
}

TEST(OrientationLpTest, VariableCount) {
  const MultiGraph g(3, {{0, 1}, {1, 2}, {2, 2}});
  const OrientationLP lp = build_orientation_lp(g, Rational(1));
  EXPECT_EQ(lp.program.num_variables(), 3 + 2 * 2 + 1);
  EXPECT_THROW(build_orientation_lp(MultiGraph(1, {}, {Cost::infinite()}), Rational(1)), Error);
}

TEST(RoundThresholdTest, Examples) {
  for (const Rational eps : {Rational(1, 8), Rational(1, 4), Rational(3, 8)}) {
    const RoundedSolution tri = round_threshold(triangle(), Rational(1), eps);
    EXPECT_TRUE(tri.deleted.empty());
    EXPECT_EQ(tri.residual_lambda, Rational(1));
  }
  const RoundedSolution k4 = round_threshold(complete_graph(4), Rational(1), Rational(1, 4));
  EXPECT_TRUE(k4.checks.all());
  EXPECT_LE(k4.residual_lambda, Rational(2));
  EXPECT_LE(k4.cost.value(), Rational(4) * brute_opt_deletion(complete_graph(4), Rational(1)).value.value());

  EXPECT_THROW(round_threshold(triangle(), Rational(1), Rational(1, 2)), Error);
  EXPECT_THROW(round_threshold(triangle(), Rational(1), Rational(0)), Error);
}

TEST(RoundThresholdTest, GadgetTree) {
  SetCoverInstance sc;
  sc.universe = 1;
  for (int i = 0; i < 8; ++i) {
    sc.sets.push_back({0});
    sc.costs.emplace_back(Rational(1));
  }
  const GadgetInstance gi = build_gadget(sc, 2);
  const RoundedSolution r = round_threshold(gi.graph, Rational(2), Rational(1, 4));
  EXPECT_LE(r.residual_lambda, Rational(4));
  EXPECT_TRUE(r.checks.all());
}

TEST(OrientationLpPropertyTest, BicriteriaAgainstBruteForce) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    MultiGraph g = testing::random_multigraph(rng, {.max_n = 7, .max_edges = 12});
    g = testing::with_costs(g, testing::random_costs(rng, g.num_vertices()));
    const Rational rho(std::uniform_int_distribution<int>(1, 4)(rng), 2);
    const BruteResult opt = brute_opt_deletion(g, rho);
    for (const Rational eps : {Rational(1, 8), Rational(1, 4), Rational(3, 8)}) {
      const RoundedSolution r = round_threshold(g, rho, eps);
      EXPECT_TRUE(r.checks.all());
      EXPECT_LE(r.residual_lambda, rho / (Rational(1) - Rational(2) * eps));
      EXPECT_LE(r.cost.value() * eps, r.lp_value);
      EXPECT_LE(r.lp_value, opt.value.value());
      EXPECT_EQ(r.residual_lambda, brute_densest(delete_vertices(g, r.deleted).graph).lambda);
    }
  }
}

TEST(OrientationLpPropertyTest, RhoZeroIsVertexCoverLp) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    MultiGraph g = testing::random_multigraph(rng, {.max_n = 8, .max_edges = 12});
    g = testing::with_costs(g, testing::random_costs(rng, g.num_vertices()));
    LinearProgram vc;
    for (VertexId v = 0; v < g.num_vertices(); ++v) vc.add_variable(g.cost(v).value());
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) {
        vc.add_constraint(row({{e.u, 1}}, Sense::kGreaterEqual, 1));
      } else {
        vc.add_constraint(row({{e.u, 1}, {e.v, 1}}, Sense::kGreaterEqual, 1));
      }
    }
    const LpSolution direct = solve_lp(vc);
    const OrientationLPSolution o = solve_orientation_lp(build_orientation_lp(g, Rational(0)));
    EXPECT_EQ(o.lp.objective, direct.objective);
  }
}

}  // namespace
}  // namespace densedel
