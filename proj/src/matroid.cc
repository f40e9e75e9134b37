#include "densedel/matroid.h"

#include <numeric>

#include "densedel/densest.h"
#include "densedel/error.h"

namespace densedel {

namespace {

std::vector<int> normalized_edges(const MultiGraph& g, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (int id : edges) {
    if (id < 0 || id >= g.num_edges()) {
      throw Error(ErrorCode::kInvalidEdge, "edge " + std::to_string(id) + " not in graph");
    }
  }
  return edges;
}

}  // namespace

PfIndependence pf_union_independent(const MultiGraph& g, int rho, const std::vector<int>& edges) {
  if (rho < 1) throw Error(ErrorCode::kInvalidArgument, "fold count must be >= 1");
  const std::vector<int> ids = normalized_edges(g, edges);
  const MultiGraph sub = edge_subgraph(g, ids);
  const auto orientation = check_density_integral(sub, rho);
  PfIndependence out;
  if (!orientation) return out;
  out.independent = true;
  out.parts.assign(rho, {});
  std::vector<char> claimed(ids.size(), 0);
  for (int round = 0; round < rho; ++round) {
    for (VertexId v = 0; v < sub.num_vertices(); ++v) {
      for (int local = 0; local < sub.num_edges(); ++local) {
        if (!claimed[local] && orientation->head[local] == v) {
          claimed[local] = 1;
          out.parts[round].push_back(ids[local]);
          break;
        }
      }
    }
  }
  for (char c : claimed) {
    if (!c) throw Error(ErrorCode::kInvariantViolation, "orientation exceeded the in-degree bound");
  }
  return out;
}

int pf_union_rank(const MultiGraph& g, int rho, const std::vector<int>& edges) {
  std::vector<int> basis;
  for (int id : normalized_edges(g, edges)) {
    basis.push_back(id);
    if (!pf_union_independent(g, rho, basis).independent) basis.pop_back();
  }
  return static_cast<int>(basis.size());
}

PseudoforestUnionMatroid::PseudoforestUnionMatroid(MultiGraph g, int rho) : g_(std::move(g)), rho_(rho) {
  if (rho < 1) throw Error(ErrorCode::kInvalidArgument, "fold count must be >= 1");
}

bool is_pseudoforest(const MultiGraph& g, const std::vector<int>& edges) {
  const int n = g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int id : edges) {
    const Edge& e = g.edge(id);
    parent[find(e.u)] = find(e.v);
  }
  std::vector<int> vertices(n, 0);
  std::vector<int> edge_count(n, 0);
  for (VertexId v = 0; v < n; ++v) ++vertices[find(v)];
  for (int id : edges) ++edge_count[find(g.edge(id).u)];
  for (VertexId v = 0; v < n; ++v) {
    if (edge_count[v] > vertices[v]) return false;
  }
  return true;
}

std::vector<int> edge_coverage(const MultiGraph& g, const VertexSet& s) {
  g.check_vertex_set(s);
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : s) in[v] = 1;
  std::vector<int> out;
  for (int id = 0; id < g.num_edges(); ++id) {
    if (in[g.edge(id).u] || in[g.edge(id).v]) out.push_back(id);
  }
  return out;
}

SubmodPtr dual_rank_h(const MultiGraph& g, std::shared_ptr<const RankOracle> m) {
  if (m->ground_size() != g.num_edges()) {
    throw Error(ErrorCode::kInvalidArgument, "matroid ground set differs from the edge set");
  }
  std::vector<int> all(g.num_edges());
  std::iota(all.begin(), all.end(), 0);
  const int full_rank = m->rank(all);
  return make_submod(
      g.all_vertices(),
      [g, m, all, full_rank](const VertexSet& s) {
        const std::vector<int> covered = edge_coverage(g, s);
        std::vector<int> rest;
        std::set_difference(all.begin(), all.end(), covered.begin(), covered.end(),
                            std::back_inserter(rest));
        return Rational(static_cast<long>(covered.size()) - full_rank + m->rank(rest));
      },
      "dual-rank");
}

}  // namespace densedel
