#include "densedel/decomposition.h"

#include "densedel/error.h"

namespace densedel {

namespace {

// Calls `on_block` for each block in order; stops early when it returns false.
template <typename OnBlock>
void peel(const SupermodOracle& f, OnBlock on_block) {
  check_normalized(f);
  VertexSet peeled;
  OraclePtr current = f.contract({});
  while (static_cast<int>(peeled.size()) < f.ground_size()) {
    DensityCertificate top = oracle_density(*current);
    if (top.witness.empty()) {
      throw Error(ErrorCode::kInvariantViolation, "empty block in dense decomposition");
    }
    if (!on_block(DecompositionBlock{top.witness, top.lambda_star})) return;
    peeled = set_union(peeled, top.witness);
    current = current->contract(top.witness);
  }
}

}  // namespace

DenseDecomposition dense_decomposition(const SupermodOracle& f) {
  DenseDecomposition blocks;
  peel(f, [&](DecompositionBlock b) {
    if (!blocks.empty() && b.density > blocks.back().density) {
      throw Error(ErrorCode::kInvalidOracle, "block densities increased; oracle is not supermodular");
    }
    blocks.push_back(std::move(b));
    return true;
  });
  return blocks;
}

PreprocessResult preprocess(const OraclePtr& f, const Rational& threshold) {
  PreprocessResult result;
  peel(*f, [&](DecompositionBlock b) {
    if (b.density <= threshold) return false;
    result.kept = set_union(result.kept, b.block);
    result.blocks.push_back(std::move(b));
    return true;
  });
  result.restricted = f->restrict_to(result.kept);
  for (VertexId v : result.kept) {
    const Rational m = marginal(*result.restricted, v, without(result.kept, v));
    if (m < threshold) {
      throw Error(ErrorCode::kInvariantViolation,
                  "preprocessed element " + std::to_string(v) + " has marginal " + m.to_string() +
                      " below threshold " + threshold.to_string());
    }
  }
  return result;
}

}  // namespace densedel
