#ifndef DENSEDEL_COVER_H_
#define DENSEDEL_COVER_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "densedel/graph.h"
#include "densedel/rational.h"
#include "densedel/supermod.h"
#include "densedel/vertex_set.h"

namespace densedel {

// Evaluation oracle for a normalized non-decreasing submodular function.
class SubmodOracle {
 public:
  virtual ~SubmodOracle() = default;
  virtual const VertexSet& ground() const = 0;
  virtual Rational eval(const VertexSet& s) const = 0;
  virtual std::string family() const = 0;
};
using SubmodPtr = std::shared_ptr<const SubmodOracle>;

// Wraps a callable; used for synthetic functions and adapters.
SubmodPtr make_submod(VertexSet ground, std::function<Rational(const VertexSet&)> eval,
                      std::string family = "custom");

// Feasible sets are those F with h(F) >= h(V).
struct SubmodCoverInstance {
  SubmodPtr h;
  std::vector<Cost> costs;  // indexed by element id

  bool feasible(const VertexSet& f) const;
};

// h(X) = g(V) - g(V - X) with g(X) = max{f(Z) - rho|Z| : Z subset of X}.
// Each evaluation performs one excess maximization (g(V) is cached). Throws
// kTooLarge up front when f has no native excess routine and its ground set
// exceeds the exhaustive cap.
SubmodCoverInstance reduce_dd_to_cover(const OraclePtr& f, const Rational& rho,
                                       std::vector<Cost> costs);

struct CoverToDd {
  OraclePtr f;  // f(X) = h(V) - h(V - X) + |X|
  Rational rho;  // always 1
};

CoverToDd reduce_cover_to_dd(const SubmodCoverInstance& inst);

struct GreedyCoverResult {
  VertexSet chosen;              // sorted
  std::vector<VertexId> order;   // pick order
  Cost cost;
  // False when an infinite-cost element had to be taken to reach h(V).
  bool finite_cost = true;
};

// Wolsey's greedy: repeatedly take the element maximizing h(v|F)/c(v) among
// those with positive gain. Zero-cost elements with positive gain go first;
// infinite-cost elements rank below every finite one; ties go to the lowest id.
GreedyCoverResult greedy_cover(const SubmodCoverInstance& inst);

// Upper bound (rounded outward) on 1 + ln(max_single_value).
double wolsey_factor_upper(const Rational& max_single_value);

}  // namespace densedel

#endif  // DENSEDEL_COVER_H_
