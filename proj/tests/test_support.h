#ifndef DENSEDEL_TESTS_TEST_SUPPORT_H_
#define DENSEDEL_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <random>
#include <vector>

#include "densedel/graph.h"
#include "densedel/supermod.h"

namespace densedel::testing {

inline MultiGraph triangle() { return MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline MultiGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return MultiGraph(n, edges);
}

inline MultiGraph loops_only(int k) {
  return MultiGraph(1, std::vector<Edge>(k, Edge{0, 0}));
}

struct GraphParams {
  int min_n = 1;
  int max_n = 8;
  int max_edges = 14;
  bool loops = true;
};

// Random multigraph: parallel edges and (optionally) self-loops allowed.
inline MultiGraph random_multigraph(std::mt19937_64& rng, const GraphParams& p = {}) {
  const int n = std::uniform_int_distribution<int>(p.min_n, p.max_n)(rng);
  const int m = std::uniform_int_distribution<int>(0, p.max_edges)(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    if (!p.loops && n > 1) {
      while (v == u) v = pick(rng);
    } else if (!p.loops) {
      continue;
    }
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return MultiGraph(n, edges);
}

// Costs in {1/2, 1, 3/2, ..., 4} (or integers 1..4 when `integral`).
inline std::vector<Cost> random_costs(std::mt19937_64& rng, int n, bool integral = false) {
  std::vector<Cost> costs;
  for (int i = 0; i < n; ++i) {
    if (integral) {
      costs.emplace_back(Rational(std::uniform_int_distribution<int>(1, 4)(rng)));
    } else {
      costs.emplace_back(Rational(std::uniform_int_distribution<int>(1, 8)(rng), 2));
    }
  }
  return costs;
}

inline MultiGraph with_costs(const MultiGraph& g, std::vector<Cost> costs) {
  return MultiGraph(g.num_vertices(), g.edges(), std::move(costs));
}

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int rank, int m) {
  Hypergraph h;
  h.n = n;
  std::uniform_int_distribution<int> size(1, std::min(rank, n));
  for (int i = 0; i < m; ++i) {
    VertexSet e;
    const int k = size(rng);
    while (static_cast<int>(e.size()) < k) {
      e = normalized(with(e, std::uniform_int_distribution<int>(0, n - 1)(rng)));
    }
    h.hyperedges.push_back(e);
  }
  h.costs.assign(n, Cost());
  return h;
}

}  // namespace densedel::testing

#endif  // DENSEDEL_TESTS_TEST_SUPPORT_H_
