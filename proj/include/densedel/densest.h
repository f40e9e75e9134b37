#ifndef DENSEDEL_DENSEST_H_
#define DENSEDEL_DENSEST_H_

#include <functional>
#include <optional>
#include <vector>

#include "densedel/graph.h"
#include "densedel/rational.h"
#include "densedel/vertex_set.h"

namespace densedel {

struct DensityCertificate {
  Rational lambda_star;
  // Inclusion-wise maximal set attaining lambda_star.
  VertexSet witness;
};

struct ExcessResult {
  Rational value;
  // Inclusion-wise maximal maximizer.
  VertexSet witness;
};

// Per-edge split of an orientation. For a self-loop the whole unit sits in
// `to_u` and `to_v` is zero.
struct EdgeShare {
  Rational to_u;
  Rational to_v;
};

struct FractionalOrientation {
  std::vector<EdgeShare> shares;  // indexed by edge id
  Rational load(const MultiGraph& g, VertexId v) const;
};

struct IntegralOrientation {
  std::vector<VertexId> head;  // indexed by edge id
  int in_degree(VertexId v) const;
};

// Exact lambda* = max_S |E(S)|/|S| and the maximal densest set.
// Throws kEmptyGraph when the graph has no vertices.
DensityCertificate densest_subgraph(const MultiGraph& g);

// max over Z subset of `within` of |E(Z)| - rho|Z|, with the maximal maximizer.
ExcessResult excess_max(const MultiGraph& g, const Rational& rho, const VertexSet& within);

// Same quantity for the hyperedge-count function Z -> #{e : e subset of Z}.
// Hyperedges must be non-empty sorted vertex lists. Solved as a max-closure
// flow: source -> hyperedge (q), hyperedge -> members (unbounded),
// vertex -> sink (p) for rho = p/q.
ExcessResult hyperedge_excess_max(const std::vector<VertexSet>& hyperedges,
                                  const Rational& rho, const VertexSet& within);

// Present iff lambda*(g) <= rho; every vertex load is then <= rho.
std::optional<FractionalOrientation> check_density_fractional(const MultiGraph& g,
                                                              const Rational& rho);

// Present iff lambda*(g) <= rho; every in-degree is then <= rho.
std::optional<IntegralOrientation> check_density_integral(const MultiGraph& g, int rho);

// Dinkelbach iteration for max_{S nonempty} f(S)/|S| over `ground`, given an
// exact excess maximizer for f. Returns 0 with an empty witness when `ground`
// is empty.
DensityCertificate maximize_density(
    const VertexSet& ground, const std::function<Rational(const VertexSet&)>& eval,
    const std::function<ExcessResult(const Rational&)>& excess);

// Hyperedge list view of a graph (a self-loop becomes a singleton).
std::vector<VertexSet> graph_hyperedges(const MultiGraph& g);

}  // namespace densedel

#endif  // DENSEDEL_DENSEST_H_
