#ifndef DENSEDEL_SUPERMOD_H_
#define DENSEDEL_SUPERMOD_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "densedel/densest.h"
#include "densedel/graph.h"
#include "densedel/rational.h"
#include "densedel/vertex_set.h"

namespace densedel {

struct CfBound {
  enum class Provenance { kAnalytic, kBruteForce };
  Rational value;
  Provenance provenance = Provenance::kAnalytic;
};

class SupermodOracle;
using OraclePtr = std::shared_ptr<const SupermodOracle>;

// Evaluation oracle for a normalized, non-decreasing, supermodular set
// function over an explicit ground set of global element ids. eval() must be
// called with subsets of ground(). Implementations are immutable; create them
// through std::make_shared so restriction/contraction can share the base.
class SupermodOracle : public std::enable_shared_from_this<SupermodOracle> {
 public:
  virtual ~SupermodOracle() = default;

  virtual const VertexSet& ground() const = 0;
  virtual Rational eval(const VertexSet& s) const = 0;
  virtual std::string family() const = 0;

  // True when excess_max is solved natively (flows) rather than by
  // enumerating subsets of `within`.
  virtual bool fast_excess() const { return false; }

  // max{f(Z) - rho|Z| : Z subset of within} with the maximal maximizer.
  // The default enumerates subsets and throws kTooLarge above the size cap.
  virtual ExcessResult excess_max(const Rational& rho, const VertexSet& within) const;

  virtual std::optional<CfBound> analytic_cf() const { return std::nullopt; }

  // f|_keep. keep must be a subset of ground().
  virtual OraclePtr restrict_to(const VertexSet& keep) const;
  // f_{/U}(X) = f(U + X) - f(U) on ground() - U.
  virtual OraclePtr contract(const VertexSet& removed) const;

  int ground_size() const { return static_cast<int>(ground().size()); }
};

// Generic enumeration fallback shared by oracles without a native routine.
ExcessResult exhaustive_excess_max(const SupermodOracle& f, const Rational& rho,
                                   const VertexSet& within);

// f(S) = number of hyperedges contained in S. Covers graphs (loops are
// singleton hyperedges) and hypergraphs, and stays in this family under
// restriction and contraction.
class HyperedgeOracle : public SupermodOracle {
 public:
  HyperedgeOracle(VertexSet ground, std::vector<VertexSet> hyperedges, std::string family,
                  std::optional<CfBound> cf);

  const VertexSet& ground() const override { return ground_; }
  Rational eval(const VertexSet& s) const override;
  std::string family() const override { return family_; }
  bool fast_excess() const override { return true; }
  ExcessResult excess_max(const Rational& rho, const VertexSet& within) const override;
  std::optional<CfBound> analytic_cf() const override { return cf_; }
  OraclePtr restrict_to(const VertexSet& keep) const override;
  OraclePtr contract(const VertexSet& removed) const override;

  const std::vector<VertexSet>& hyperedges() const { return hyperedges_; }

 private:
  VertexSet ground_;
  std::vector<VertexSet> hyperedges_;
  std::string family_;
  std::optional<CfBound> cf_;
};

struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> hyperedges;
  std::vector<Cost> costs;  // defaults to 1 per vertex
  int rank() const;
};

// "n m" then m lines "k v1 ... vk"; optional "c u p/q" cost lines.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);

// f(S) = |E(S)|; analytic c_f bound 2.
OraclePtr graph_oracle(const MultiGraph& g);
// f(S) = #hyperedges inside S; analytic c_f bound = rank. Throws
// kInvalidHyperedge on empty, repeated-vertex or out-of-range hyperedges.
OraclePtr hypergraph_oracle(const Hypergraph& h);
// f(S) = sum_{u in S} d_S(u)^p; analytic c_f bound (p+1)^p; exhaustive excess.
// Throws kUnsupportedSelfLoop for graphs with loops.
OraclePtr pmean_oracle(const MultiGraph& g, int p);

// f(v|S) = f(S + v) - f(S). Throws kInvalidMarginal when v is in S or outside
// the ground set.
Rational marginal(const SupermodOracle& f, VertexId v, const VertexSet& s);

// max over S with f(S) > 0 of sum_{u in S} f(u|S-u) / f(S); 1 when f == 0.
// Throws kTooLarge above `cap` (default size_cap(14)).
CfBound cf_bruteforce(const SupermodOracle& f, std::optional<int> cap = std::nullopt);

// lambda*_f and the maximal densest set (Dinkelbach over excess_max).
DensityCertificate oracle_density(const SupermodOracle& f);

// Throws kInvalidOracle unless eval(empty) == 0.
void check_normalized(const SupermodOracle& f);

}  // namespace densedel

#endif  // DENSEDEL_SUPERMOD_H_
