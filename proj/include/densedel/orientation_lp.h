#ifndef DENSEDEL_ORIENTATION_LP_H_
#define DENSEDEL_ORIENTATION_LP_H_

#include <optional>
#include <vector>

#include "densedel/densest.h"
#include "densedel/graph.h"
#include "densedel/lp.h"
#include "densedel/rational.h"

namespace densedel {

// LP relaxation of the orientation ILP for vertex deletion:
//   min sum_u c_u x_u
//   x_u + x_v + z_{e,u} + z_{e,v} >= 1     for every edge e = uv
//   rho x_u + sum_{e at u} z_{e,u} <= rho   for every vertex u
//   0 <= x_u <= 1, z >= 0
// A self-loop e at u has one variable z_{e,u} and the edge row
// x_u + z_{e,u} >= 1 (the loop survives exactly when u does).
struct OrientationLP {
  LinearProgram program;
  std::vector<int> x_var;  // per vertex
  // Per edge: variable for the u side and the v side (same id for loops).
  std::vector<std::pair<int, int>> z_var;
  std::vector<int> edge_row;    // constraint index per edge
  std::vector<int> vertex_row;  // constraint index per vertex
  Rational rho;
  // Cost used in the objective per vertex (infinite costs replaced).
  std::vector<Rational> objective_cost;
};

// `infinite_surrogate` replaces every infinite cost; required when the graph
// has one (kInvalidCost otherwise).
OrientationLP build_orientation_lp(const MultiGraph& g, const Rational& rho,
                                   std::optional<Rational> infinite_surrogate = std::nullopt);

// M = (sum of finite costs) * ceil(1/eps) + 1.
Rational infinite_cost_surrogate(const MultiGraph& g, const Rational& epsilon);

struct OrientationLPSolution {
  LpSolution lp;
  std::vector<Rational> x;
  std::vector<EdgeShare> z;  // per edge; loops carry their value in to_u
};

// Solves and verifies every constraint exactly (kInvariantViolation if not).
OrientationLPSolution solve_orientation_lp(const OrientationLP& lp);

struct BoundChecks {
  bool density_bound = false;    // lambda*(G - S) <= rho / (1 - 2 eps)
  bool cost_bound = false;       // c(S) <= lp_value / eps
  bool orientation_cover = false;  // z'_{e,u} + z'_{e,v} >= 1 on E[V - S]
  bool orientation_load = false;   // load under z' <= rho / (1 - 2 eps) on V - S
  bool all() const { return density_bound && cost_bound && orientation_cover && orientation_load; }
};

struct RoundedSolution {
  VertexSet deleted;  // {u : x_u > eps}
  Rational lp_value;
  Rational epsilon;
  Rational rho;
  Cost cost;
  Rational residual_lambda;
  VertexSet residual_witness;  // ids in the input graph
  BoundChecks checks;
};

// Threshold rounding of a solved LP. Certifies both guarantees and the scaled
// orientation z' = z / (1 - 2 eps); throws kInvariantViolation if any fails.
// Throws kInfeasibleWithFiniteCost when S contains an infinite-cost vertex.
RoundedSolution round_solution(const MultiGraph& g, const OrientationLP& lp,
                               const OrientationLPSolution& sol, const Rational& epsilon);

// Build, solve and round. eps must lie in (0, 1/2) (kInvalidEpsilon).
RoundedSolution round_threshold(const MultiGraph& g, const Rational& rho, const Rational& epsilon);

void check_epsilon(const Rational& epsilon);

}  // namespace densedel

#endif  // DENSEDEL_ORIENTATION_LP_H_
