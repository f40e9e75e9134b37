#ifndef DENSEDEL_DECOMPOSITION_H_
#define DENSEDEL_DECOMPOSITION_H_

#include <vector>

#include "densedel/rational.h"
#include "densedel/supermod.h"
#include "densedel/vertex_set.h"

namespace densedel {

struct DecompositionBlock {
  VertexSet block;
  Rational density;
};

// Blocks in peeling order; they partition the ground set and their
// densities are non-increasing.
using DenseDecomposition = std::vector<DecompositionBlock>;

// Peels the maximal maximizer of the contracted marginal density until the
// ground set is exhausted. Throws kInvalidOracle when f(empty) != 0.
DenseDecomposition dense_decomposition(const SupermodOracle& f);

struct PreprocessResult {
  VertexSet kept;      // union of blocks with density > threshold
  OraclePtr restricted;  // f restricted to `kept`
  // Peeled blocks with density > threshold, in order.
  DenseDecomposition blocks;
};

// Restriction of f to the blocks denser than `threshold`. Only peels as far
// as needed. Verifies f(v | R - v) >= threshold for every v in R and throws
// kInvariantViolation otherwise.
PreprocessResult preprocess(const OraclePtr& f, const Rational& threshold);

}  // namespace densedel

#endif  // DENSEDEL_DECOMPOSITION_H_
