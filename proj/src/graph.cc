#include "densedel/graph.h"

#include <fstream>
#include <sstream>

#include "densedel/error.h"

namespace densedel {

Cost::Cost(const Rational& v) : value_(v) {
  if (v.sign() < 0) throw Error(ErrorCode::kInvalidCost, "negative cost " + v.to_string());
}

Cost Cost::parse(std::string_view text) {
  if (text == "inf") return infinite();
  return Cost(Rational::parse(text));
}

Cost& Cost::operator+=(const Cost& o) {
  if (infinite_ || o.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += o.value_;
  }
  return *this;
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges, std::vector<Cost> costs)
    : n_(n), edges_(std::move(edges)), costs_(std::move(costs)) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  if (costs_.empty()) costs_.assign(n, Cost(1));
  if (static_cast<int>(costs_.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "cost vector size differs from vertex count");
  }
  incidence_.assign(n, {});
  for (int id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kInvalidVertex,
                  "edge " + std::to_string(id) + " has an endpoint outside [0, n)");
    }
    incidence_[e.u].push_back(id);
    if (!e.is_loop()) incidence_[e.v].push_back(id);
  }
}

void MultiGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::kInvalidVertex, "vertex " + std::to_string(v) + " not in graph");
  }
}

void MultiGraph::check_vertex_set(const VertexSet& s) const {
  for (VertexId v : s) check_vertex(v);
}

const Cost& MultiGraph::cost(VertexId v) const {
  check_vertex(v);
  return costs_[v];
}

int MultiGraph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(incidence_[v].size());
}

const std::vector<int>& MultiGraph::incident_edges(VertexId v) const {
  check_vertex(v);
  return incidence_[v];
}

int MultiGraph::num_loops() const {
  int loops = 0;
  for (const Edge& e : edges_) loops += e.is_loop();
  return loops;
}

int MultiGraph::edges_within(const VertexSet& s) const {
  return static_cast<int>(edge_ids_within(s).size());
}

std::vector<int> MultiGraph::edge_ids_within(const VertexSet& s) const {
  check_vertex_set(s);
  std::vector<char> in(n_, 0);
  for (VertexId v : s) in[v] = 1;
  std::vector<int> ids;
  for (int id = 0; id < num_edges(); ++id) {
    if (in[edges_[id].u] && in[edges_[id].v]) ids.push_back(id);
  }
  return ids;
}

Cost MultiGraph::total_cost(const VertexSet& s) const {
  Cost total = Cost::zero();
  for (VertexId v : s) total += cost(v);
  return total;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  return a.n_ == b.n_ && a.edges_ == b.edges_ && a.costs_ == b.costs_;
}

InducedSubgraph induced_subgraph(const MultiGraph& g, const VertexSet& keep) {
  g.check_vertex_set(keep);
  const VertexSet k = normalized(keep);
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < k.size(); ++i) local[k[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v]});
  }
  std::vector<Cost> costs;
  costs.reserve(k.size());
  for (VertexId v : k) costs.push_back(g.cost(v));
  return {MultiGraph(static_cast<int>(k.size()), std::move(edges), std::move(costs)), k};
}

InducedSubgraph delete_vertices(const MultiGraph& g, const VertexSet& removed) {
  g.check_vertex_set(removed);
  return induced_subgraph(g, set_difference(g.all_vertices(), normalized(removed)));
}

MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<int>& edge_ids) {
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (int id : edge_ids) {
    if (id < 0 || id >= g.num_edges()) {
      throw Error(ErrorCode::kInvalidEdge, "edge " + std::to_string(id) + " not in graph");
    }
    edges.push_back(g.edge(id));
  }
  return MultiGraph(g.num_vertices(), std::move(edges), g.costs());
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
}

}  // namespace

MultiGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    auto toks = split_ws(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty() || lines[0].size() != 2) {
    throw Error(ErrorCode::kParseError, "header must be 'n m'");
  }
  const int n = parse_int(lines[0][0], "n");
  const int m = parse_int(lines[0][1], "m");
  if (n < 0 || m < 0) throw Error(ErrorCode::kParseError, "negative n or m");
  if (static_cast<int>(lines.size()) < 1 + m) {
    throw Error(ErrorCode::kParseError, "expected " + std::to_string(m) + " edge lines");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 1; i <= m; ++i) {
    if (lines[i].size() != 2) throw Error(ErrorCode::kParseError, "edge line must be 'u v'");
    edges.push_back({parse_int(lines[i][0], "u"), parse_int(lines[i][1], "v")});
  }
  std::vector<Cost> costs(n, Cost(1));
  for (std::size_t i = 1 + m; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t.size() != 3 || t[0] != "c") {
      throw Error(ErrorCode::kParseError, "cost line must be 'c u p/q' or 'c u inf'");
    }
    const int u = parse_int(t[1], "u");
    if (u < 0 || u >= n) throw Error(ErrorCode::kInvalidVertex, "cost line for vertex " + t[1]);
    try {
      costs[u] = Cost::parse(t[2]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
  }
  return MultiGraph(n, std::move(edges), std::move(costs));
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.cost(v) != Cost(1)) out << "c " << v << ' ' << g.cost(v).to_string() << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MultiGraph read_graph_file(const std::string& path) {
  return parse_graph(read_text_file(path));
}

}  // namespace densedel
