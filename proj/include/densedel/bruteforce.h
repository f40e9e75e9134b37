#ifndef DENSEDEL_BRUTEFORCE_H_
#define DENSEDEL_BRUTEFORCE_H_

#include <vector>

#include "densedel/decomposition.h"
#include "densedel/gadgets.h"
#include "densedel/graph.h"
#include "densedel/rational.h"
#include "densedel/supermod.h"

// Exhaustive reference implementations. Everything here enumerates the subset
// lattice directly and shares no code with the flow/LP machinery.
namespace densedel {

struct BruteDensity {
  Rational lambda;
  std::vector<VertexSet> maximizers;  // nonempty maximizers, sorted
  VertexSet maximal;                  // union of maximizers
};

struct BruteResult {
  // False when every feasible solution has infinite cost.
  bool feasible = true;
  Cost value;
  std::vector<VertexSet> witnesses;  // all optimal solutions, sorted
};

// n <= 16. The empty graph's density is 0 with no maximizers.
BruteDensity brute_densest(const MultiGraph& g);
// Ground size <= 16.
BruteDensity brute_density(const SupermodOracle& f);

// max over S of f(S) - rho |S| (S = {} allowed) and all maximizers.
struct BruteExcess {
  Rational value;
  std::vector<VertexSet> maximizers;
};
BruteExcess brute_excess(const SupermodOracle& f, const Rational& rho);

// Minimum-cost S with lambda*(G - S) <= rho. Only finite-cost vertices are
// enumerated, so the cap applies to those (16) and to n itself (22).
BruteResult brute_opt_deletion(const MultiGraph& g, const Rational& rho);
// Generic oracle; costs indexed by element id; ground size <= 8.
BruteResult brute_opt_deletion(const SupermodOracle& f, const std::vector<Cost>& costs,
                               const Rational& rho);

// All deletion sets X (sorted) with lambda*(f | V - X) <= rho; ground <= 8.
std::vector<VertexSet> brute_feasible_sets(const SupermodOracle& f, const Rational& rho);

// |S| <= 16. Witnesses are sorted lists of set ids.
BruteResult brute_set_cover(const SetCoverInstance& sc);

// Peel maximal maximizers of the contracted density until the ground is
// exhausted; ground <= 12.
DenseDecomposition brute_decomposition(const SupermodOracle& f);

}  // namespace densedel

#endif  // DENSEDEL_BRUTEFORCE_H_
