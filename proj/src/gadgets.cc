#include "densedel/gadgets.h"

#include <sstream>

#include "densedel/densest.h"
#include "densedel/error.h"

namespace densedel {

std::vector<int> SetCoverInstance::frequencies() const {
  std::vector<int> freq(universe, 0);
  for (const VertexSet& s : sets) {
    for (int e : s) ++freq.at(e);
  }
  return freq;
}

std::vector<int> SetCoverInstance::sets_containing(int e) const {
  std::vector<int> out;
  for (int i = 0; i < num_sets(); ++i) {
    if (contains(sets[i], e)) out.push_back(i);
  }
  return out;
}

bool SetCoverInstance::is_cover(const std::vector<int>& chosen) const {
  std::vector<char> covered(universe, 0);
  for (int s : chosen) {
    for (int e : sets.at(s)) covered[e] = 1;
  }
  for (char c : covered) {
    if (!c) return false;
  }
  return true;
}

Cost SetCoverInstance::cost_of(const std::vector<int>& chosen) const {
  Cost total = Cost::zero();
  for (int s : chosen) total += costs.at(s);
  return total;
}

void SetCoverInstance::validate() const {
  if (costs.size() != sets.size()) throw Error(ErrorCode::kUnsupportedInstance, "one cost per set required");
  for (const VertexSet& s : sets) {
    for (int e : s) {
      if (e < 0 || e >= universe) throw Error(ErrorCode::kUnsupportedInstance, "element outside universe");
    }
  }
  for (int f : frequencies()) {
    if (f == 0) throw Error(ErrorCode::kUnsupportedInstance, "an element belongs to no set");
  }
}

SetCoverInstance parse_set_cover(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  auto to_int = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "expected integer, got '" + s + "'");
    }
  };
  if (lines.empty() || lines[0].size() != 2) throw Error(ErrorCode::kParseError, "header must be 'nU nS'");
  SetCoverInstance sc;
  sc.universe = to_int(lines[0][0]);
  const int ns = to_int(lines[0][1]);
  if (sc.universe < 0 || ns < 0 || static_cast<int>(lines.size()) != 1 + ns) {
    throw Error(ErrorCode::kParseError, "expected exactly nS set lines");
  }
  for (int i = 1; i <= ns; ++i) {
    const auto& t = lines[i];
    if (t.size() < 2) throw Error(ErrorCode::kParseError, "set line must be 'cost k e1 ... ek'");
    const int k = to_int(t[1]);
    if (k < 0 || static_cast<int>(t.size()) != k + 2) {
      throw Error(ErrorCode::kParseError, "set line must be 'cost k e1 ... ek'");
    }
    try {
      sc.costs.push_back(Cost::parse(t[0]));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    VertexSet s;
    for (int j = 0; j < k; ++j) s.push_back(to_int(t[2 + j]));
    sc.sets.push_back(normalized(std::move(s)));
  }
  sc.validate();
  return sc;
}

std::string format_set_cover(const SetCoverInstance& sc) {
  std::ostringstream out;
  out << sc.universe << ' ' << sc.num_sets() << '\n';
  for (int i = 0; i < sc.num_sets(); ++i) {
    out << sc.costs[i].to_string() << ' ' << sc.sets[i].size();
    for (int e : sc.sets[i]) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

std::string gadget_role_name(GadgetRole role) {
  switch (role) {
    case GadgetRole::kSet: return "set";
    case GadgetRole::kElement: return "element";
    case GadgetRole::kTreeInternal: return "tree-internal";
    case GadgetRole::kTreeRoot: return "tree-root";
  }
  return "unknown";
}

GadgetInstance build_gadget(const SetCoverInstance& sc, int rho) {
  sc.validate();
  if (rho < 2) throw Error(ErrorCode::kUnsupportedInstance, "the tree gadget needs rho >= 2");
  const std::vector<int> freq = sc.frequencies();
  if (freq.empty()) throw Error(ErrorCode::kUnsupportedInstance, "empty universe");
  const int f = freq.front();
  for (int fe : freq) {
    if (fe != f) throw Error(ErrorCode::kUnsupportedInstance, "element frequencies are not uniform");
  }
  if (f < 4 || (f & (f - 1)) != 0) {
    throw Error(ErrorCode::kUnsupportedInstance, "frequency must be a power of two >= 4");
  }
  const int extra = rho - 2;

  GadgetInstance gi;
  gi.rho = rho;
  std::vector<Edge> edges;
  std::vector<Cost> costs;
  auto add_vertex = [&](GadgetVertex prov, Cost c) {
    gi.provenance.push_back(prov);
    costs.push_back(std::move(c));
    return static_cast<VertexId>(costs.size()) - 1;
  };
  for (int s = 0; s < sc.num_sets(); ++s) {
    const VertexId v = add_vertex({GadgetRole::kSet, s, -1}, sc.costs[s]);
    gi.set_vertex.push_back(v);
    for (int i = 0; i < rho; ++i) edges.push_back({v, v});
  }
  for (int e = 0; e < sc.universe; ++e) {
    std::vector<VertexId> level;
    for (int s : sc.sets_containing(e)) level.push_back(gi.set_vertex[s]);
    VertexSet block(level.begin(), level.end());
    while (level.size() > 1) {
      std::vector<VertexId> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
        const VertexId w = add_vertex({GadgetRole::kTreeInternal, -1, e}, Cost::infinite());
        edges.push_back({level[i], w});
        edges.push_back({level[i + 1], w});
        next.push_back(w);
        block.push_back(w);
      }
      level = std::move(next);
    }
    const VertexId root = level.front();
    gi.provenance[root].role = GadgetRole::kTreeRoot;
    edges.push_back({root, root});
    gi.element_anchor.push_back(root);
    gi.element_block.push_back(normalized(std::move(block)));
  }
  for (VertexId v = 0; v < static_cast<VertexId>(costs.size()); ++v) {
    if (gi.provenance[v].role == GadgetRole::kSet) continue;
    for (int i = 0; i < extra; ++i) edges.push_back({v, v});
  }
  const int n = static_cast<int>(costs.size());
  gi.graph = MultiGraph(n, std::move(edges), std::move(costs));
  return gi;
}

GadgetInstance build_warmup_gadget(const SetCoverInstance& sc) {
  sc.validate();
  const std::vector<int> freq = sc.frequencies();
  int f_max = 0;
  for (int fe : freq) f_max = std::max(f_max, fe);
  GadgetInstance gi;
  gi.warmup = true;
  gi.rho = std::max(0, f_max - 1);
  std::vector<Edge> edges;
  std::vector<Cost> costs;
  for (int s = 0; s < sc.num_sets(); ++s) {
    gi.provenance.push_back({GadgetRole::kSet, s, -1});
    gi.set_vertex.push_back(s);
    costs.push_back(sc.costs[s]);
    for (int i = 0; i < f_max - 1; ++i) edges.push_back({s, s});
  }
  for (int e = 0; e < sc.universe; ++e) {
    const VertexId u = static_cast<VertexId>(costs.size());
    gi.provenance.push_back({GadgetRole::kElement, -1, e});
    costs.push_back(Cost::infinite());
    VertexSet block = {u};
    for (int s : sc.sets_containing(e)) {
      edges.push_back({gi.set_vertex[s], u});
      block.push_back(gi.set_vertex[s]);
    }
    for (int i = 0; i < f_max - freq[e]; ++i) edges.push_back({u, u});
    gi.element_anchor.push_back(u);
    gi.element_block.push_back(normalized(std::move(block)));
  }
  const int n = static_cast<int>(costs.size());
  gi.graph = MultiGraph(n, std::move(edges), std::move(costs));
  return gi;
}

std::vector<int> extract_cover(const GadgetInstance& gi, const VertexSet& deleted) {
  const VertexSet del = normalized(deleted);
  gi.graph.check_vertex_set(del);
  if (gi.graph.total_cost(del).is_infinite()) {
    throw Error(ErrorCode::kNotFiniteCost, "deletion set contains an infinite-cost vertex");
  }
  const InducedSubgraph rest = delete_vertices(gi.graph, del);
  if (!check_density_integral(rest.graph, gi.rho)) {
    throw Error(ErrorCode::kNotFeasible, "residual density exceeds " + std::to_string(gi.rho));
  }
  std::vector<int> cover;
  for (VertexId v : del) cover.push_back(gi.provenance[v].set);
  std::sort(cover.begin(), cover.end());
  // Feasibility forces every element to lose a leaf.
  for (std::size_t e = 0; e < gi.element_block.size(); ++e) {
    bool hit = false;
    for (VertexId v : gi.element_block[e]) {
      if (gi.provenance[v].role == GadgetRole::kSet && contains(del, v)) hit = true;
    }
    if (!hit) throw Error(ErrorCode::kInvariantViolation, "feasible deletion left an element uncovered");
  }
  return cover;
}

VertexSet cover_to_deletion(const GadgetInstance& gi, const std::vector<int>& cover) {
  VertexSet out;
  for (int s : cover) out.push_back(gi.set_vertex.at(s));
  return normalized(std::move(out));
}

}  // namespace densedel
