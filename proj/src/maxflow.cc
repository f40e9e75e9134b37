#include "densedel/maxflow.h"

#include <algorithm>
#include <queue>
#include <string>

#include "densedel/error.h"

namespace densedel {

int FlowNetwork::add_arc(int from, int to, Capacity capacity) {
  tail_.push_back(from);
  head_.push_back(to);
  capacity_.push_back(capacity);
  return static_cast<int>(tail_.size()) - 1;
}

namespace {

constexpr Capacity kCapacityLimit = Capacity{1} << 62;

class Dinic {
 public:
  Dinic(int n, int s, int t) : n_(n), s_(s), t_(t), adj_(n) {}

  void add(int from, int to, Capacity cap) {
    adj_[from].push_back(static_cast<int>(to_.size()));
    to_.push_back(to);
    res_.push_back(cap);
    adj_[to].push_back(static_cast<int>(to_.size()));
    to_.push_back(from);
    res_.push_back(0);
  }

  Capacity run() {
    Capacity total = 0;
    while (bfs()) {
      it_.assign(n_, 0);
      while (Capacity pushed = dfs(s_, std::numeric_limits<Capacity>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  // Nodes that can reach t in the residual graph.
  std::vector<bool> reaches_sink() const {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack = {t_};
    seen[t_] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : adj_[v]) {
        // Residual arc (u -> v) is the reverse of e; it exists when res_[e ^ 1] > 0.
        const int u = to_[e];
        if (!seen[u] && res_[e ^ 1] > 0) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return seen;
  }

  Capacity residual(int arc_slot) const { return res_[arc_slot]; }

 private:
  bool bfs() {
    level_.assign(n_, -1);
    std::queue<int> q;
    level_[s_] = 0;
    q.push(s_);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int e : adj_[v]) {
        if (res_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[v] + 1;
          q.push(to_[e]);
        }
      }
    }
    return level_[t_] >= 0;
  }

  Capacity dfs(int v, Capacity limit) {
    if (v == t_) return limit;
    for (std::size_t& i = it_[v]; i < adj_[v].size(); ++i) {
      const int e = adj_[v][i];
      const int w = to_[e];
      if (res_[e] > 0 && level_[w] == level_[v] + 1) {
        const Capacity pushed = dfs(w, std::min(limit, res_[e]));
        if (pushed > 0) {
          res_[e] -= pushed;
          res_[e ^ 1] += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  int n_, s_, t_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<Capacity> res_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace

MinCut max_flow(const FlowNetwork& net) {
  const int n = net.num_nodes();
  const int s = net.source();
  const int t = net.sink();
  if (s < 0 || s >= n || t < 0 || t >= n || s == t) {
    throw Error(ErrorCode::kInvalidNetwork, "source/sink must be distinct existing nodes");
  }
  Capacity finite_sum = 0;
  for (int a = 0; a < net.num_arcs(); ++a) {
    const int u = net.arc_tail(a);
    const int v = net.arc_head(a);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kInvalidNetwork, "arc " + std::to_string(a) + " has a bad endpoint");
    }
    const Capacity c = net.arc_capacity(a);
    if (c == kUnbounded) continue;
    if (c < 0) throw Error(ErrorCode::kInvalidNetwork, "negative capacity on arc " + std::to_string(a));
    if (c > kCapacityLimit - finite_sum) {
      throw Error(ErrorCode::kInvalidNetwork, "capacity sum overflows");
    }
    finite_sum += c;
  }
  const Capacity unbounded = finite_sum + 1;

  Dinic dinic(n, s, t);
  for (int a = 0; a < net.num_arcs(); ++a) {
    const Capacity c = net.arc_capacity(a);
    dinic.add(net.arc_tail(a), net.arc_head(a), c == kUnbounded ? unbounded : c);
  }
  MinCut cut;
  cut.value = dinic.run();
  const std::vector<bool> to_sink = dinic.reaches_sink();
  cut.source_side.resize(n);
  for (int v = 0; v < n; ++v) cut.source_side[v] = !to_sink[v];
  cut.arc_flow.resize(net.num_arcs());
  for (int a = 0; a < net.num_arcs(); ++a) {
    // Reverse residual of the forward slot equals the pushed flow.
    cut.arc_flow[a] = dinic.residual(2 * a + 1);
  }
  return cut;
}

}  // namespace densedel
