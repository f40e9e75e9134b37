#include "densedel/supermod.h"

#include <sstream>

#include "densedel/error.h"
#include "densedel/size_cap.h"

namespace densedel {

namespace {

class RestrictedOracle : public SupermodOracle {
 public:
  RestrictedOracle(OraclePtr base, VertexSet keep) : base_(std::move(base)), ground_(std::move(keep)) {}

  const VertexSet& ground() const override { return ground_; }
  Rational eval(const VertexSet& s) const override { return base_->eval(s); }
  std::string family() const override { return base_->family() + "|restricted"; }
  bool fast_excess() const override { return base_->fast_excess(); }
  ExcessResult excess_max(const Rational& rho, const VertexSet& within) const override {
    // f|_R agrees with f on subsets of R.
    return base_->excess_max(rho, set_intersection(within, ground_));
  }
  std::optional<CfBound> analytic_cf() const override { return base_->analytic_cf(); }
  OraclePtr restrict_to(const VertexSet& keep) const override {
    return std::make_shared<RestrictedOracle>(base_, normalized(keep));
  }

 private:
  OraclePtr base_;
  VertexSet ground_;
};

class ContractedOracle : public SupermodOracle {
 public:
  ContractedOracle(OraclePtr base, VertexSet removed)
      : base_(std::move(base)),
        removed_(std::move(removed)),
        ground_(set_difference(base_->ground(), removed_)),
        offset_(base_->eval(removed_)) {}

  const VertexSet& ground() const override { return ground_; }
  Rational eval(const VertexSet& s) const override {
    return base_->eval(set_union(removed_, s)) - offset_;
  }
  std::string family() const override { return base_->family() + "|contracted"; }

 private:
  OraclePtr base_;
  VertexSet removed_;
  VertexSet ground_;
  Rational offset_;
};

class PMeanOracle : public SupermodOracle {
 public:
  PMeanOracle(MultiGraph g, int p) : g_(std::move(g)), p_(p), ground_(g_.all_vertices()) {}

  const VertexSet& ground() const override { return ground_; }
  Rational eval(const VertexSet& s) const override {
    std::vector<long> deg(g_.num_vertices(), 0);
    for (int id : g_.edge_ids_within(s)) {
      ++deg[g_.edge(id).u];
      ++deg[g_.edge(id).v];
    }
    mpz_class total = 0;
    for (VertexId v : s) {
      mpz_class d = deg[v];
      mpz_class term;
      mpz_pow_ui(term.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p_));
      total += term;
    }
    return Rational(mpq_class(total));
  }
  std::string family() const override { return "pmean"; }
  std::optional<CfBound> analytic_cf() const override {
    mpz_class b;
    mpz_class base = p_ + 1;
    mpz_pow_ui(b.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p_));
    return CfBound{Rational(mpq_class(b)), CfBound::Provenance::kAnalytic};
  }

 private:
  MultiGraph g_;
  int p_;
  VertexSet ground_;
};

void check_within_ground(const SupermodOracle& f, const VertexSet& s) {
  if (!is_subset(s, f.ground())) {
    throw Error(ErrorCode::kInvalidVertex, "set is not contained in the oracle's ground set");
  }
}

}  // namespace

ExcessResult exhaustive_excess_max(const SupermodOracle& f, const Rational& rho,
                                   const VertexSet& within) {
  const VertexSet w = normalized(within);
  const int cap = size_cap(18);
  if (static_cast<int>(w.size()) > cap) {
    throw Error(ErrorCode::kTooLarge, "exhaustive excess maximization over " +
                                          std::to_string(w.size()) + " elements exceeds cap " +
                                          std::to_string(cap));
  }
  const std::uint64_t limit = std::uint64_t{1} << w.size();
  Rational best = 0;  // Z = empty
  std::uint64_t union_of_best = 0;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const VertexSet z = subset_from_mask(w, mask);
    const Rational value = f.eval(z) - rho * Rational(static_cast<long>(z.size()));
    if (value > best) {
      best = value;
      union_of_best = mask;
    } else if (value == best) {
      union_of_best |= mask;
    }
  }
  ExcessResult r{best, subset_from_mask(w, union_of_best)};
  // Supermodularity makes the union of maximizers a maximizer.
  const Rational check = f.eval(r.witness) - rho * Rational(static_cast<long>(r.witness.size()));
  if (check != best) {
    throw Error(ErrorCode::kInvalidOracle, "union of excess maximizers is not a maximizer");
  }
  return r;
}

ExcessResult SupermodOracle::excess_max(const Rational& rho, const VertexSet& within) const {
  return exhaustive_excess_max(*this, rho, within);
}

OraclePtr SupermodOracle::restrict_to(const VertexSet& keep) const {
  check_within_ground(*this, normalized(keep));
  return std::make_shared<RestrictedOracle>(shared_from_this(), normalized(keep));
}

OraclePtr SupermodOracle::contract(const VertexSet& removed) const {
  check_within_ground(*this, normalized(removed));
  return std::make_shared<ContractedOracle>(shared_from_this(), normalized(removed));
}

HyperedgeOracle::HyperedgeOracle(VertexSet ground, std::vector<VertexSet> hyperedges,
                                 std::string family, std::optional<CfBound> cf)
    : ground_(std::move(ground)),
      hyperedges_(std::move(hyperedges)),
      family_(std::move(family)),
      cf_(std::move(cf)) {}

Rational HyperedgeOracle::eval(const VertexSet& s) const {
  long count = 0;
  for (const VertexSet& e : hyperedges_) count += is_subset(e, s);
  return Rational(count);
}

ExcessResult HyperedgeOracle::excess_max(const Rational& rho, const VertexSet& within) const {
  const VertexSet w = normalized(within);
  check_within_ground(*this, w);
  return hyperedge_excess_max(hyperedges_, rho, w);
}

OraclePtr HyperedgeOracle::restrict_to(const VertexSet& keep) const {
  const VertexSet k = normalized(keep);
  check_within_ground(*this, k);
  std::vector<VertexSet> kept;
  for (const VertexSet& e : hyperedges_) {
    if (is_subset(e, k)) kept.push_back(e);
  }
  return std::make_shared<HyperedgeOracle>(k, std::move(kept), family_, cf_);
}

OraclePtr HyperedgeOracle::contract(const VertexSet& removed) const {
  const VertexSet u = normalized(removed);
  check_within_ground(*this, u);
  std::vector<VertexSet> rest;
  for (const VertexSet& e : hyperedges_) {
    VertexSet r = set_difference(e, u);
    if (!r.empty()) rest.push_back(std::move(r));
  }
  return std::make_shared<HyperedgeOracle>(set_difference(ground_, u), std::move(rest),
                                           family_ + "|contracted", std::nullopt);
}

int Hypergraph::rank() const {
  int r = 0;
  for (const VertexSet& e : hyperedges) r = std::max(r, static_cast<int>(e.size()));
  return r;
}

Hypergraph parse_hypergraph(std::string_view text) {
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
  if (lines.empty() || lines[0].size() != 2) throw Error(ErrorCode::kParseError, "header must be 'n m'");
  Hypergraph h;
  h.n = to_int(lines[0][0]);
  const int m = to_int(lines[0][1]);
  if (h.n < 0 || m < 0 || static_cast<int>(lines.size()) < 1 + m) {
    throw Error(ErrorCode::kParseError, "bad hypergraph header or missing hyperedge lines");
  }
  for (int i = 1; i <= m; ++i) {
    const auto& t = lines[i];
    const int k = to_int(t[0]);
    if (k < 0 || static_cast<int>(t.size()) != k + 1) {
      throw Error(ErrorCode::kParseError, "hyperedge line must be 'k v1 ... vk'");
    }
    VertexSet e;
    for (int j = 1; j <= k; ++j) {
      e.push_back(to_int(t[j]));
      if (e.back() < 0 || e.back() >= h.n) {
        throw Error(ErrorCode::kInvalidHyperedge, "hyperedge vertex " + t[j] + " out of range");
      }
    }
    h.hyperedges.push_back(std::move(e));
  }
  h.costs.assign(h.n, Cost(1));
  for (std::size_t i = 1 + m; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t.size() != 3 || t[0] != "c") throw Error(ErrorCode::kParseError, "cost line must be 'c u p/q'");
    const int u = to_int(t[1]);
    if (u < 0 || u >= h.n) throw Error(ErrorCode::kInvalidVertex, "cost line for vertex " + t[1]);
    h.costs[u] = Cost::parse(t[2]);
  }
  return h;
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n << ' ' << h.hyperedges.size() << '\n';
  for (const VertexSet& e : h.hyperedges) {
    out << e.size();
    for (VertexId v : e) out << ' ' << v;
    out << '\n';
  }
  for (int v = 0; v < static_cast<int>(h.costs.size()); ++v) {
    if (h.costs[v] != Cost(1)) out << "c " << v << ' ' << h.costs[v].to_string() << '\n';
  }
  return out.str();
}

OraclePtr graph_oracle(const MultiGraph& g) {
  return std::make_shared<HyperedgeOracle>(g.all_vertices(), graph_hyperedges(g), "graph",
                                           CfBound{Rational(2), CfBound::Provenance::kAnalytic});
}

OraclePtr hypergraph_oracle(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  for (const VertexSet& e : h.hyperedges) {
    if (e.empty()) throw Error(ErrorCode::kInvalidHyperedge, "empty hyperedge");
    VertexSet s = normalized(e);
    if (s.size() != e.size()) throw Error(ErrorCode::kInvalidHyperedge, "repeated vertex in hyperedge");
    if (s.front() < 0 || s.back() >= h.n) {
      throw Error(ErrorCode::kInvalidHyperedge, "hyperedge vertex outside [0, n)");
    }
    edges.push_back(std::move(s));
  }
  const int r = std::max(1, h.rank());
  return std::make_shared<HyperedgeOracle>(iota_set(h.n), std::move(edges), "hypergraph",
                                           CfBound{Rational(r), CfBound::Provenance::kAnalytic});
}

OraclePtr pmean_oracle(const MultiGraph& g, int p) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "p-mean exponent must be >= 1");
  if (g.num_loops() > 0) {
    throw Error(ErrorCode::kUnsupportedSelfLoop, "p-mean density is defined on loopless graphs");
  }
  return std::make_shared<PMeanOracle>(g, p);
}

Rational marginal(const SupermodOracle& f, VertexId v, const VertexSet& s) {
  if (contains(s, v)) throw Error(ErrorCode::kInvalidMarginal, "element already in the set");
  if (!contains(f.ground(), v)) throw Error(ErrorCode::kInvalidMarginal, "element outside ground set");
  return f.eval(with(s, v)) - f.eval(s);
}

CfBound cf_bruteforce(const SupermodOracle& f, std::optional<int> cap) {
  const int limit = cap.value_or(size_cap(14));
  const VertexSet& ground = f.ground();
  const int n = static_cast<int>(ground.size());
  if (n > limit || n > kAbsoluteSizeCap) {
    throw Error(ErrorCode::kTooLarge, "c_f enumeration over " + std::to_string(n) +
                                          " elements exceeds cap " + std::to_string(limit));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Rational> values(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) values[mask] = f.eval(subset_from_mask(ground, mask));
  Rational best = 1;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    if (values[mask].sign() <= 0) continue;
    Rational sum = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) sum += values[mask] - values[mask ^ (std::uint64_t{1} << i)];
    }
    best = max(best, sum / values[mask]);
  }
  return {best, CfBound::Provenance::kBruteForce};
}

DensityCertificate oracle_density(const SupermodOracle& f) {
  return maximize_density(
      f.ground(), [&](const VertexSet& s) { return f.eval(s); },
      [&](const Rational& rho) { return f.excess_max(rho, f.ground()); });
}

void check_normalized(const SupermodOracle& f) {
  if (f.eval({}).sign() != 0) throw Error(ErrorCode::kInvalidOracle, "f(empty) != 0");
}

}  // namespace densedel
