#include "densedel/orientation_lp.h"

#include "densedel/error.h"

namespace densedel {

void check_epsilon(const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1, 2)) {
    throw Error(ErrorCode::kInvalidEpsilon, "epsilon must lie in (0, 1/2), got " + epsilon.to_string());
  }
}

Rational infinite_cost_surrogate(const MultiGraph& g, const Rational& epsilon) {
  Rational finite_sum = 0;
  for (const Cost& c : g.costs()) {
    if (c.is_finite()) finite_sum += c.value();
  }
  const Rational inv = Rational(1) / epsilon;
  return finite_sum * Rational(mpq_class(inv.ceil())) + Rational(1);
}

OrientationLP build_orientation_lp(const MultiGraph& g, const Rational& rho,
                                   std::optional<Rational> infinite_surrogate) {
  if (rho.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "negative density target");
  OrientationLP out;
  out.rho = rho;
  LinearProgram& lp = out.program;
  const int n = g.num_vertices();
  for (VertexId u = 0; u < n; ++u) {
    const Cost& c = g.cost(u);
    Rational obj;
    if (c.is_finite()) {
      obj = c.value();
    } else if (infinite_surrogate) {
      obj = *infinite_surrogate;
    } else {
      throw Error(ErrorCode::kInvalidCost, "infinite cost at vertex " + std::to_string(u) +
                                               " needs a finite surrogate");
    }
    out.objective_cost.push_back(obj);
    out.x_var.push_back(lp.add_variable(obj, "x" + std::to_string(u)));
  }
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const std::string tag = "e" + std::to_string(id);
    if (e.is_loop()) {
      const int z = lp.add_variable(0, "z" + tag + "_" + std::to_string(e.u));
      out.z_var.emplace_back(z, z);
    } else {
      const int zu = lp.add_variable(0, "z" + tag + "_" + std::to_string(e.u));
      const int zv = lp.add_variable(0, "z" + tag + "_" + std::to_string(e.v));
      out.z_var.emplace_back(zu, zv);
    }
  }
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    LinearConstraint row;
    row.sense = Sense::kGreaterEqual;
    row.rhs = 1;
    row.name = "cover_e" + std::to_string(id);
    if (e.is_loop()) {
      row.terms = {{out.x_var[e.u], 1}, {out.z_var[id].first, 1}};
    } else {
      row.terms = {{out.x_var[e.u], 1}, {out.x_var[e.v], 1},
                   {out.z_var[id].first, 1}, {out.z_var[id].second, 1}};
    }
    out.edge_row.push_back(static_cast<int>(lp.constraints().size()));
    lp.add_constraint(std::move(row));
  }
  for (VertexId u = 0; u < n; ++u) {
    LinearConstraint row;
    row.sense = Sense::kLessEqual;
    row.rhs = rho;
    row.name = "load_" + std::to_string(u);
    if (rho.sign() != 0) row.terms.push_back({out.x_var[u], rho});
    for (int id : g.incident_edges(u)) {
      const Edge& e = g.edge(id);
      row.terms.push_back({e.u == u ? out.z_var[id].first : out.z_var[id].second, 1});
    }
    out.vertex_row.push_back(static_cast<int>(lp.constraints().size()));
    lp.add_constraint(std::move(row));
  }
  for (VertexId u = 0; u < n; ++u) {
    lp.add_constraint({{{out.x_var[u], 1}}, Sense::kLessEqual, 1, "upper_x" + std::to_string(u)});
  }
  return out;
}

OrientationLPSolution solve_orientation_lp(const OrientationLP& lp) {
  OrientationLPSolution out;
  out.lp = solve_lp(lp.program);
  if (out.lp.status != LpStatus::kOptimal) {
    // x = 1 everywhere, z = 0 is always feasible and the objective is >= 0.
    throw Error(ErrorCode::kInvariantViolation, "orientation LP not solved to optimality");
  }
  if (const int bad = lp.program.first_violation(out.lp.values); bad >= 0) {
    throw Error(ErrorCode::kInvariantViolation,
                "LP solution violates constraint " + std::to_string(bad));
  }
  for (int var : lp.x_var) out.x.push_back(out.lp.values[var]);
  for (const auto& [zu, zv] : lp.z_var) {
    if (zu == zv) {
      out.z.push_back({out.lp.values[zu], Rational(0)});
    } else {
      out.z.push_back({out.lp.values[zu], out.lp.values[zv]});
    }
  }
  return out;
}

RoundedSolution round_solution(const MultiGraph& g, const OrientationLP& lp,
                               const OrientationLPSolution& sol, const Rational& epsilon) {
  check_epsilon(epsilon);
  RoundedSolution r;
  r.epsilon = epsilon;
  r.rho = lp.rho;
  r.lp_value = sol.lp.objective;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (sol.x[u] > epsilon) r.deleted.push_back(u);
  }
  r.cost = g.total_cost(r.deleted);
  if (r.cost.is_infinite()) {
    throw Error(ErrorCode::kInfeasibleWithFiniteCost,
                "threshold rounding selected an infinite-cost vertex");
  }
  const Rational scale = Rational(1) / (Rational(1) - Rational(2) * epsilon);
  const Rational relaxed = lp.rho * scale;

  const InducedSubgraph rest = delete_vertices(g, r.deleted);
  if (rest.graph.num_vertices() > 0) {
    const DensityCertificate d = densest_subgraph(rest.graph);
    r.residual_lambda = d.lambda_star;
    for (VertexId v : d.witness) r.residual_witness.push_back(rest.original[v]);
  } else {
    r.residual_lambda = 0;
  }
  r.checks.density_bound = r.residual_lambda <= relaxed;
  r.checks.cost_bound = r.cost.value() * epsilon <= r.lp_value;

  // z' on the surviving edges.
  std::vector<char> alive(g.num_vertices(), 1);
  for (VertexId u : r.deleted) alive[u] = 0;
  std::vector<Rational> load(g.num_vertices(), Rational(0));
  r.checks.orientation_cover = true;
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (!alive[e.u] || !alive[e.v]) continue;
    const Rational zu = sol.z[id].to_u * scale;
    const Rational zv = sol.z[id].to_v * scale;
    if (zu + zv < Rational(1)) r.checks.orientation_cover = false;
    load[e.u] += zu;
    if (!e.is_loop()) load[e.v] += zv;
  }
  r.checks.orientation_load = true;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (alive[u] && load[u] > relaxed) r.checks.orientation_load = false;
  }
  if (!r.checks.all()) {
    throw Error(ErrorCode::kInvariantViolation, "threshold rounding failed a certified bound");
  }
  return r;
}

RoundedSolution round_threshold(const MultiGraph& g, const Rational& rho, const Rational& epsilon) {
  check_epsilon(epsilon);
  const OrientationLP lp = build_orientation_lp(g, rho, infinite_cost_surrogate(g, epsilon));
  const OrientationLPSolution sol = solve_orientation_lp(lp);
  return round_solution(g, lp, sol, epsilon);
}

}  // namespace densedel
