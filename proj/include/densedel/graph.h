#ifndef DENSEDEL_GRAPH_H_
#define DENSEDEL_GRAPH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "densedel/rational.h"
#include "densedel/vertex_set.h"

namespace densedel {

// Deletion cost: a non-negative rational or +infinity. Infinity absorbs addition.
class Cost {
 public:
  Cost() : value_(1) {}
  Cost(const Rational& v);  // NOLINT(runtime/explicit)
  Cost(int v) : Cost(Rational(v)) {}  // NOLINT(runtime/explicit)
  static Cost infinite() { Cost c; c.infinite_ = true; c.value_ = 0; return c; }
  static Cost zero() { return Cost(0); }

  // "inf", "p/q" or "p".
  static Cost parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Only meaningful for finite costs.
  const Rational& value() const { return value_; }

  std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

  Cost& operator+=(const Cost& o);
  friend Cost operator+(Cost a, const Cost& b) { return a += b; }

  friend bool operator==(const Cost& a, const Cost& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  bool infinite_ = false;
  Rational value_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  bool is_loop() const { return u == v; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable undirected multigraph with self-loops and vertex costs.
//
// Counting convention: a self-loop at v contributes 1 to degree(v), 1 to
// |E(S)| when v is in S, and 1 to v's in-degree in every orientation.
class MultiGraph {
 public:
  MultiGraph() = default;
  // Missing costs default to 1. Throws kInvalidVertex for bad endpoints and
  // kInvalidCost for negative costs.
  MultiGraph(int n, std::vector<Edge> edges, std::vector<Cost> costs = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }
  const std::vector<Cost>& costs() const { return costs_; }
  const Cost& cost(VertexId v) const;

  int degree(VertexId v) const;
  // Ids of edges incident to v; a self-loop appears once.
  const std::vector<int>& incident_edges(VertexId v) const;

  int num_loops() const;
  // |E(S)|; `s` must be a valid vertex set.
  int edges_within(const VertexSet& s) const;
  std::vector<int> edge_ids_within(const VertexSet& s) const;

  VertexSet all_vertices() const { return iota_set(n_); }
  Cost total_cost(const VertexSet& s) const;

  void check_vertex(VertexId v) const;
  void check_vertex_set(const VertexSet& s) const;

  friend bool operator==(const MultiGraph&, const MultiGraph&);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Cost> costs_;
  std::vector<std::vector<int>> incidence_;
};

struct InducedSubgraph {
  MultiGraph graph;
  // original[i] is the id in the parent graph of vertex i.
  std::vector<VertexId> original;
};

InducedSubgraph induced_subgraph(const MultiGraph& g, const VertexSet& keep);

// G - removed, i.e. the subgraph induced by the complement.
InducedSubgraph delete_vertices(const MultiGraph& g, const VertexSet& removed);

// Spanning subgraph (V, F) for an edge-id set F. Edge ids are renumbered in
// the order given.
MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<int>& edge_ids);

// Text instance format:
//   n m
//   u v          (m lines, 0-based, u == v for a self-loop)
//   c u p/q      (optional, also "c u inf"; default cost 1)
MultiGraph parse_graph(std::string_view text);
// Canonical text: cost lines only for costs other than 1, ascending by vertex.
std::string format_graph(const MultiGraph& g);

MultiGraph read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace densedel

#endif  // DENSEDEL_GRAPH_H_
