#include <gtest/gtest.h>

#include "densedel/bruteforce.h"
#include "densedel/error.h"
#include "densedel/random_deletion.h"
#include "test_support.h"

namespace densedel {
namespace {

using testing::complete_graph;
using testing::triangle;

const CfBound kGraphCf{Rational(2), CfBound::Provenance::kAnalytic};

std::vector<Cost> unit_costs(int n) { return std::vector<Cost>(n, Cost(Rational(1))); }

TEST(ExactSamplerTest, Boundaries) {
  const ExactSampler s({Rational(1), Rational(0), Rational(3)});
  EXPECT_EQ(s.draw(0), 0);
  EXPECT_EQ(s.draw((std::uint64_t{1} << 62) - 1), 0);
  EXPECT_EQ(s.draw(std::uint64_t{1} << 62), 2);
  EXPECT_EQ(s.draw(~std::uint64_t{0}), 2);
  EXPECT_THROW(ExactSampler({Rational(0)}), Error);
}

TEST(RandomDeleteTest, TriangleNeedsNothing) {
  const RandomDeletionRun run =
      random_delete(graph_oracle(triangle()), unit_costs(3), Rational(1), Rational(1), kGraphCf, 7);
  EXPECT_EQ(run.threshold, Rational(4));
  EXPECT_TRUE(run.deleted.empty());
  EXPECT_TRUE(run.trace.empty());
}

TEST(RandomDeleteTest, K4SmallTarget) {
  const OraclePtr f = graph_oracle(complete_graph(4));
  std::vector<int> first(4, 0);
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const RandomDeletionRun run = random_delete(f, unit_costs(4), Rational(1, 4), Rational(1, 2), kGraphCf, seed);
    ASSERT_FALSE(run.deleted.empty());
    ASSERT_LE(run.residual_lambda, Rational(3, 4));
    ++first[run.trace.front().sampled];
  }
  // Uniform first draw: each count within 4 sigma of 500.
  for (int c : first) EXPECT_NEAR(c, 500, 4 * 19.4);
  const StepDistribution d = first_step_distribution(f, unit_costs(4), Rational(3, 4));
  EXPECT_EQ(d.weights, (std::vector<Rational>(4, Rational(3))));
}

TEST(RandomDeleteTest, Reproducible) {
  std::mt19937_64 rng(71);
  const MultiGraph g = testing::random_multigraph(rng, {.min_n = 6, .max_n = 8, .max_edges = 20});
  const OraclePtr f = graph_oracle(g);
  const std::vector<Cost> costs = testing::random_costs(rng, g.num_vertices());
  const RandomDeletionRun a = random_delete(f, costs, Rational(1, 3), Rational(1, 2), kGraphCf, 99);
  const RandomDeletionRun b = random_delete(f, costs, Rational(1, 3), Rational(1, 2), kGraphCf, 99);
  EXPECT_EQ(a.deleted, b.deleted);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) EXPECT_EQ(a.trace[i].sampled, b.trace[i].sampled);
}

TEST(RandomDeleteTest, CostValidation) {
  const OraclePtr f = graph_oracle(complete_graph(3));
  std::vector<Cost> costs = unit_costs(3);
  costs[1] = Cost::infinite();
  EXPECT_THROW(random_delete(f, costs, Rational(1), Rational(1), kGraphCf, 1), Error);
  EXPECT_THROW(random_delete(f, unit_costs(3), Rational(1), Rational(0), kGraphCf, 1), Error);
  costs[1] = Cost::zero();
  const RandomDeletionRun run = random_delete(f, costs, Rational(0), Rational(1), kGraphCf, 1);
  EXPECT_EQ(run.zero_cost_deleted, (VertexSet{1}));
  EXPECT_TRUE(contains(run.deleted, 1));
}

TEST(MarginalMassTest, Examples) {
  const OraclePtr f = graph_oracle(complete_graph(5));  // every marginal is 4
  const CfBound cf = kGraphCf;
  EXPECT_TRUE(check_marginal_mass(*f, Rational(1), Rational(1), cf, f->ground()));
  EXPECT_THROW(check_marginal_mass(*f, Rational(1), Rational(1), cf, {}), Error);
  EXPECT_THROW(check_marginal_mass(*f, Rational(3), Rational(1), cf, f->ground()), Error);
}

TEST(RandomDeletePropertyTest, FeasibleEveryRunAndTerminates) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const OraclePtr f = trial % 2 ? hypergraph_oracle(testing::random_hypergraph(rng, 7, 3, 10))
                                  : graph_oracle(testing::random_multigraph(rng, {.max_n = 8, .max_edges = 18}));
    const std::vector<Cost> costs = testing::random_costs(rng, f->ground_size());
    const Rational rho(std::uniform_int_distribution<int>(1, 3)(rng), 3);
    const CfBound cf = *f->analytic_cf();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const RandomDeletionRun run = random_delete(f, costs, rho, Rational(1, 2), cf, seed);
      EXPECT_LE(run.residual_lambda, run.threshold);
      EXPECT_LE(run.trace.size(), static_cast<std::size_t>(f->ground_size()));
      EXPECT_EQ(run.residual_lambda,
                brute_density(*f->restrict_to(set_difference(f->ground(), run.deleted))).lambda);
    }
  }
}

TEST(MarginalMassPropertyTest, HoldsOnAllFeasibleSets) {
  std::mt19937_64 rng(73);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 20; ++trial) {
    const OraclePtr f = graph_oracle(testing::random_multigraph(rng, {.min_n = 2, .max_n = 6, .max_edges = 18}));
    const Rational rho(1, 4);
    const Rational eps(1, 2);
    const CfBound cf = cf_bruteforce(*f);
    bool hypothesis = true;
    for (VertexId u : f->ground()) {
      hypothesis = hypothesis && marginal(*f, u, without(f->ground(), u)) >= cf.value * (Rational(1) + eps) * rho;
    }
    if (!hypothesis) continue;
    ++checked;
    for (const VertexSet& x : brute_feasible_sets(*f, rho)) {
      EXPECT_TRUE(check_marginal_mass(*f, rho, eps, cf, x));
    }
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace densedel
