#ifndef DENSEDEL_MATROID_H_
#define DENSEDEL_MATROID_H_

#include <memory>
#include <vector>

#include "densedel/cover.h"
#include "densedel/graph.h"

namespace densedel {

// Matroid on the edge ids [0, ground_size()) of a host graph.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual int ground_size() const = 0;
  // rank of an edge-id set (duplicates ignored).
  virtual int rank(const std::vector<int>& edges) const = 0;
};

struct PfIndependence {
  bool independent = false;
  // rho edge-id lists, each a pseudoforest; present when independent.
  std::vector<std::vector<int>> parts;
};

// F is independent in the rho-fold union of the pseudoforest matroid iff the
// spanning subgraph (V, F) has density <= rho. The witness partition comes
// from an in-degree <= rho orientation: in each of rho rounds every vertex
// claims its lowest-id unclaimed inbound edge.
PfIndependence pf_union_independent(const MultiGraph& g, int rho, const std::vector<int>& edges);

// Greedy over ascending edge id.
int pf_union_rank(const MultiGraph& g, int rho, const std::vector<int>& edges);

class PseudoforestUnionMatroid : public RankOracle {
 public:
  PseudoforestUnionMatroid(MultiGraph g, int rho);
  int ground_size() const override { return g_.num_edges(); }
  int rank(const std::vector<int>& edges) const override { return pf_union_rank(g_, rho_, edges); }
  bool independent(const std::vector<int>& edges) const {
    return pf_union_independent(g_, rho_, edges).independent;
  }
  const MultiGraph& graph() const { return g_; }
  int rho() const { return rho_; }

 private:
  MultiGraph g_;
  int rho_;
};

// Every connected component of (V, edges) has at most one cycle (a self-loop
// counts as a cycle). Union-find, independent of the density machinery.
bool is_pseudoforest(const MultiGraph& g, const std::vector<int>& edges);

// b_G(S): ids of edges with at least one endpoint in S.
std::vector<int> edge_coverage(const MultiGraph& g, const VertexSet& s);

// h(S) = rank*(b_G(S)) = |b_G(S)| - rank(E) + rank(E - b_G(S)); E[V-F] is
// independent in m iff h(F) = h(V).
SubmodPtr dual_rank_h(const MultiGraph& g, std::shared_ptr<const RankOracle> m);

}  // namespace densedel

#endif  // DENSEDEL_MATROID_H_
