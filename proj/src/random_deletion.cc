#include "densedel/random_deletion.h"

#include "densedel/decomposition.h"
#include "densedel/error.h"

namespace densedel {

ExactSampler::ExactSampler(std::vector<Rational> weights) {
  Rational running = 0;
  for (const Rational& w : weights) {
    if (w.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "negative sampling weight");
    running += w;
    cumulative_.push_back(running);
  }
  total_ = running;
  if (total_.sign() <= 0) throw Error(ErrorCode::kInvariantViolation, "sampling weights sum to zero");
}

int ExactSampler::draw(std::uint64_t r) const {
  // r / 2^64 < cum_i / W  <=>  r * W < 2^64 * cum_i
  mpz_class two64 = 1;
  two64 <<= 64;
  mpz_class rz;
  mpz_import(rz.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
  const mpq_class lhs = mpq_class(rz) * total_.raw();
  int lo = 0;
  int hi = static_cast<int>(cumulative_.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (lhs < mpq_class(two64) * cumulative_[mid].raw()) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

namespace {

void validate_costs(const SupermodOracle& f, const std::vector<Cost>& costs) {
  for (VertexId v : f.ground()) {
    if (v < 0 || v >= static_cast<int>(costs.size())) {
      throw Error(ErrorCode::kInvalidCost, "no cost for element " + std::to_string(v));
    }
    if (costs[v].is_infinite()) {
      throw Error(ErrorCode::kInvalidCost, "element " + std::to_string(v) + " has infinite cost");
    }
  }
}

StepDistribution weights_after_preprocess(const OraclePtr& restricted, const VertexSet& kept,
                                          const std::vector<Cost>& costs) {
  StepDistribution d;
  d.elements = kept;
  for (VertexId v : kept) {
    const Rational m = marginal(*restricted, v, without(kept, v));
    d.weights.push_back(m / costs[v].value());
  }
  return d;
}

}  // namespace

StepDistribution first_step_distribution(const OraclePtr& f, const std::vector<Cost>& costs,
                                         const Rational& threshold) {
  validate_costs(*f, costs);
  const PreprocessResult pre = preprocess(f, threshold);
  return weights_after_preprocess(pre.restricted, pre.kept, costs);
}

RandomDeletionRun random_delete(const OraclePtr& f, const std::vector<Cost>& costs,
                                const Rational& rho, const Rational& epsilon, const CfBound& cf,
                                std::uint64_t seed) {
  if (epsilon.sign() <= 0) throw Error(ErrorCode::kInvalidEpsilon, "epsilon must be positive");
  if (rho.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "negative density target");
  validate_costs(*f, costs);

  RandomDeletionRun run;
  run.seed = seed;
  run.rho = rho;
  run.epsilon = epsilon;
  run.cf = cf;
  run.threshold = cf.value * (Rational(1) + epsilon) * rho;

  for (VertexId v : f->ground()) {
    if (costs[v].value().sign() == 0) run.zero_cost_deleted.push_back(v);
  }
  VertexSet deleted = run.zero_cost_deleted;
  OraclePtr current = f->restrict_to(set_difference(f->ground(), deleted));

  std::mt19937_64 rng(seed);
  while (oracle_density(*current).lambda_star > run.threshold) {
    const PreprocessResult pre = preprocess(current, run.threshold);
    if (pre.kept.empty()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "preprocessing removed everything while density exceeds the threshold");
    }
    const StepDistribution dist = weights_after_preprocess(pre.restricted, pre.kept, costs);
    const ExactSampler sampler(dist.weights);
    const int pick = sampler.draw(rng());
    const VertexId u = dist.elements[pick];
    if (dist.weights[pick].sign() <= 0) {
      throw Error(ErrorCode::kInvariantViolation, "sampled an element with zero weight");
    }
    run.trace.push_back({static_cast<int>(pre.kept.size()), u, dist.weights[pick], sampler.total()});
    deleted = with(deleted, u);
    current = pre.restricted->restrict_to(without(pre.kept, u));
  }

  run.deleted = deleted;
  run.cost = Cost::zero();
  for (VertexId v : deleted) run.cost += costs[v];
  run.residual_lambda =
      oracle_density(*f->restrict_to(set_difference(f->ground(), deleted))).lambda_star;
  if (run.residual_lambda > run.threshold) {
    throw Error(ErrorCode::kInvariantViolation, "random deletion returned an infeasible set");
  }
  return run;
}

bool check_marginal_mass(const SupermodOracle& f, const Rational& rho, const Rational& epsilon,
                         const CfBound& cf, const VertexSet& x) {
  const VertexSet& ground = f.ground();
  const Rational bound = cf.value * (Rational(1) + epsilon) * rho;
  const Rational all = f.eval(ground);
  Rational total = 0;
  Rational in_x = 0;
  for (VertexId u : ground) {
    const Rational m = all - f.eval(without(ground, u));
    if (m < bound) {
      throw Error(ErrorCode::kHypothesisViolated, "marginal of " + std::to_string(u) +
                                                      " is below c_f(1+eps)rho");
    }
    total += m;
    if (contains(x, u)) in_x += m;
  }
  const OraclePtr rest = f.restrict_to(set_difference(ground, normalized(x)));
  if (oracle_density(*rest).lambda_star > rho) {
    throw Error(ErrorCode::kHypothesisViolated, "X is not a feasible deletion set");
  }
  return in_x * cf.value * (Rational(1) + Rational(1) / epsilon) >= total;
}

}  // namespace densedel
