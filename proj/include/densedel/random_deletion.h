#ifndef DENSEDEL_RANDOM_DELETION_H_
#define DENSEDEL_RANDOM_DELETION_H_

#include <cstdint>
#include <random>
#include <vector>

#include "densedel/graph.h"
#include "densedel/rational.h"
#include "densedel/supermod.h"
#include "densedel/vertex_set.h"

namespace densedel {

struct SampleStep {
  int ground_size = 0;  // after preprocessing
  VertexId sampled = -1;
  Rational weight;      // f(v | V - v) / c(v) of the sampled element
  Rational total_weight;
};

struct RandomDeletionRun {
  std::uint64_t seed = 0;
  Rational rho;
  Rational epsilon;
  CfBound cf;
  Rational threshold;          // c_f (1 + eps) rho
  VertexSet zero_cost_deleted;  // removed before sampling
  std::vector<SampleStep> trace;
  VertexSet deleted;           // sorted, includes zero_cost_deleted
  Cost cost;
  Rational residual_lambda;
};

// Sampling distribution over `elements` with exact rational weights. A draw
// maps a uniform 64-bit integer r to the first i with r / 2^64 < cum_i / W.
class ExactSampler {
 public:
  explicit ExactSampler(std::vector<Rational> weights);
  int draw(std::uint64_t r) const;
  const Rational& total() const { return total_; }

 private:
  std::vector<Rational> cumulative_;
  Rational total_;
};

// Marginal-proportional random deletion with dense-decomposition
// preprocessing. Costs are indexed by element id; zero-cost elements are
// deleted before the loop, infinite costs raise kInvalidCost, epsilon must be
// positive (kInvalidEpsilon). The loop condition is re-evaluated at the top
// of each iteration only.
RandomDeletionRun random_delete(const OraclePtr& f, const std::vector<Cost>& costs,
                                const Rational& rho, const Rational& epsilon, const CfBound& cf,
                                std::uint64_t seed);

// Sampling distribution of the first loop iteration: preprocessing at
// `threshold`, then weights f(v|R-v)/c(v). Empty when lambda*_f <= threshold.
struct StepDistribution {
  VertexSet elements;
  std::vector<Rational> weights;  // f(v|V-v)/c(v) after preprocessing
};
StepDistribution first_step_distribution(const OraclePtr& f, const std::vector<Cost>& costs,
                                         const Rational& threshold);

// sum_{u in X} f(u|V-u) >= sum_{u in V} f(u|V-u) / (c_f (1 + 1/eps)).
// Throws kHypothesisViolated when some marginal is below c_f (1 + eps) rho
// or when X is not a feasible deletion set at rho.
bool check_marginal_mass(const SupermodOracle& f, const Rational& rho, const Rational& epsilon,
                         const CfBound& cf, const VertexSet& x);

}  // namespace densedel

#endif  // DENSEDEL_RANDOM_DELETION_H_
