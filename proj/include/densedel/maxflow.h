#ifndef DENSEDEL_MAXFLOW_H_
#define DENSEDEL_MAXFLOW_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace densedel {

using Capacity = std::int64_t;

// Marker capacity; resolved at solve time to (sum of finite capacities) + 1,
// which no finite cut can reach.
inline constexpr Capacity kUnbounded = -1;

class FlowNetwork {
 public:
  FlowNetwork() = default;
  explicit FlowNetwork(int num_nodes, int source = 0, int sink = 1)
      : num_nodes_(num_nodes), source_(source), sink_(sink) {}

  int add_node() { return num_nodes_++; }
  // Returns the arc index. Capacity must be >= 0 or kUnbounded.
  int add_arc(int from, int to, Capacity capacity);

  int num_nodes() const { return num_nodes_; }
  int num_arcs() const { return static_cast<int>(tail_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }
  void set_terminals(int source, int sink) { source_ = source; sink_ = sink; }

  int arc_tail(int a) const { return tail_[a]; }
  int arc_head(int a) const { return head_[a]; }
  Capacity arc_capacity(int a) const { return capacity_[a]; }

 private:
  int num_nodes_ = 0;
  int source_ = 0;
  int sink_ = 1;
  std::vector<int> tail_;
  std::vector<int> head_;
  std::vector<Capacity> capacity_;
};

struct MinCut {
  Capacity value = 0;
  // source_side[v] for every node; the inclusion-wise maximal minimum cut.
  std::vector<bool> source_side;
  // Flow on each arc of the network, in arc-index order.
  std::vector<Capacity> arc_flow;
};

// Exact integer max-flow (Dinic). The returned source side is the complement
// of the set of nodes that can reach the sink in the residual network.
// Throws Error(kInvalidNetwork) on bad node ids, negative capacities, equal
// terminals, or capacity sums overflowing 62 bits.
MinCut max_flow(const FlowNetwork& net);

}  // namespace densedel

#endif  // DENSEDEL_MAXFLOW_H_
