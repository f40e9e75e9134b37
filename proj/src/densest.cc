#include "densedel/densest.h"

#include <string>

#include "densedel/error.h"
#include "densedel/maxflow.h"

namespace densedel {

Rational FractionalOrientation::load(const MultiGraph& g, VertexId v) const {
  Rational total = 0;
  for (int id : g.incident_edges(v)) {
    const Edge& e = g.edge(id);
    if (e.u == v) total += shares[id].to_u;
    if (e.v == v && !e.is_loop()) total += shares[id].to_v;
  }
  return total;
}

int IntegralOrientation::in_degree(VertexId v) const {
  int d = 0;
  for (VertexId h : head) d += h == v;
  return d;
}

std::vector<VertexSet> graph_hyperedges(const MultiGraph& g) {
  std::vector<VertexSet> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      out.push_back({e.u});
    } else {
      out.push_back(normalized({e.u, e.v}));
    }
  }
  return out;
}

namespace {

// Closure network over the hyperedges inside `within`. Node 0 = source,
// node 1 = sink, then one node per vertex of `within`, then one per hyperedge.
struct ClosureNetwork {
  FlowNetwork net;
  std::vector<int> edge_index;       // hyperedge ids in the network
  std::vector<int> member_arc_start;  // first hyperedge->member arc per hyperedge
  VertexSet vertices;
};

ClosureNetwork build_closure(const std::vector<VertexSet>& hyperedges, const Rational& rho,
                             const VertexSet& within) {
  if (rho.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "negative density threshold");
  const Capacity p = rho.numerator_i64();
  const Capacity q = rho.denominator_i64();
  ClosureNetwork cn;
  cn.vertices = normalized(within);
  cn.net = FlowNetwork(2, 0, 1);
  const int base = 2;
  for (std::size_t i = 0; i < cn.vertices.size(); ++i) {
    cn.net.add_node();
    cn.net.add_arc(base + static_cast<int>(i), 1, p);
  }
  auto local = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(cn.vertices.begin(), cn.vertices.end(), v) -
                            cn.vertices.begin());
  };
  for (std::size_t id = 0; id < hyperedges.size(); ++id) {
    const VertexSet& e = hyperedges[id];
    if (e.empty()) throw Error(ErrorCode::kInvalidHyperedge, "empty hyperedge");
    if (!is_subset(e, cn.vertices)) continue;
    const int node = cn.net.add_node();
    cn.net.add_arc(0, node, q);
    cn.edge_index.push_back(static_cast<int>(id));
    cn.member_arc_start.push_back(cn.net.num_arcs());
    for (VertexId v : e) cn.net.add_arc(node, base + local(v), kUnbounded);
  }
  return cn;
}

}  // namespace

ExcessResult hyperedge_excess_max(const std::vector<VertexSet>& hyperedges,
                                  const Rational& rho, const VertexSet& within) {
  ClosureNetwork cn = build_closure(hyperedges, rho, within);
  const MinCut cut = max_flow(cn.net);
  const Capacity q = rho.denominator_i64();
  const Capacity total = q * static_cast<Capacity>(cn.edge_index.size());
  ExcessResult result;
  result.value = Rational(total - cut.value, q);
  for (std::size_t i = 0; i < cn.vertices.size(); ++i) {
    if (cut.source_side[2 + i]) result.witness.push_back(cn.vertices[i]);
  }
  return result;
}

ExcessResult excess_max(const MultiGraph& g, const Rational& rho, const VertexSet& within) {
  g.check_vertex_set(within);
  return hyperedge_excess_max(graph_hyperedges(g), rho, within);
}

DensityCertificate maximize_density(
    const VertexSet& ground, const std::function<Rational(const VertexSet&)>& eval,
    const std::function<ExcessResult(const Rational&)>& excess) {
  if (ground.empty()) return {Rational(0), {}};
  Rational lambda = eval(ground) / Rational(static_cast<long>(ground.size()));
  // Each round strictly increases lambda through a finite set of ratios.
  for (;;) {
    ExcessResult r = excess(lambda);
    if (r.value.sign() == 0) return {lambda, std::move(r.witness)};
    if (r.value.sign() < 0 || r.witness.empty()) {
      throw Error(ErrorCode::kInvariantViolation, "excess maximizer returned an invalid result");
    }
    lambda = eval(r.witness) / Rational(static_cast<long>(r.witness.size()));
  }
}

DensityCertificate densest_subgraph(const MultiGraph& g) {
  if (g.num_vertices() == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  const std::vector<VertexSet> hyperedges = graph_hyperedges(g);
  return maximize_density(
      g.all_vertices(),
      [&](const VertexSet& s) { return Rational(g.edges_within(s)); },
      [&](const Rational& rho) { return hyperedge_excess_max(hyperedges, rho, g.all_vertices()); });
}

std::optional<FractionalOrientation> check_density_fractional(const MultiGraph& g,
                                                              const Rational& rho) {
  ClosureNetwork cn = build_closure(graph_hyperedges(g), rho, g.all_vertices());
  const MinCut cut = max_flow(cn.net);
  const Capacity q = rho.denominator_i64();
  if (cut.value != q * static_cast<Capacity>(g.num_edges())) return std::nullopt;
  FractionalOrientation z;
  z.shares.resize(g.num_edges());
  for (std::size_t i = 0; i < cn.edge_index.size(); ++i) {
    const int id = cn.edge_index[i];
    const Edge& e = g.edge(id);
    const int arc = cn.member_arc_start[i];
    if (e.is_loop()) {
      z.shares[id] = {Rational(cut.arc_flow[arc], q), Rational(0)};
      continue;
    }
    // Hyperedge members are sorted, so the first arc goes to min(u, v).
    Rational to_min(cut.arc_flow[arc], q);
    Rational to_max(cut.arc_flow[arc + 1], q);
    if (e.u <= e.v) {
      z.shares[id] = {to_min, to_max};
    } else {
      z.shares[id] = {to_max, to_min};
    }
  }
  return z;
}

std::optional<IntegralOrientation> check_density_integral(const MultiGraph& g, int rho) {
  if (rho < 0) throw Error(ErrorCode::kInvalidArgument, "negative in-degree bound");
  ClosureNetwork cn = build_closure(graph_hyperedges(g), Rational(rho), g.all_vertices());
  const MinCut cut = max_flow(cn.net);
  if (cut.value != static_cast<Capacity>(g.num_edges())) return std::nullopt;
  IntegralOrientation o;
  o.head.resize(g.num_edges());
  for (std::size_t i = 0; i < cn.edge_index.size(); ++i) {
    const int id = cn.edge_index[i];
    const Edge& e = g.edge(id);
    const int arc = cn.member_arc_start[i];
    if (e.is_loop()) {
      o.head[id] = e.u;
    } else {
      o.head[id] = cut.arc_flow[arc] == 1 ? std::min(e.u, e.v) : std::max(e.u, e.v);
    }
  }
  return o;
}

}  // namespace densedel
