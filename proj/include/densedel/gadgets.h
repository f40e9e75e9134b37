#ifndef DENSEDEL_GADGETS_H_
#define DENSEDEL_GADGETS_H_

#include <string>
#include <string_view>
#include <vector>

#include "densedel/graph.h"
#include "densedel/vertex_set.h"

namespace densedel {

struct SetCoverInstance {
  int universe = 0;
  std::vector<VertexSet> sets;  // sorted element ids in [0, universe)
  std::vector<Cost> costs;      // one per set

  int num_sets() const { return static_cast<int>(sets.size()); }
  std::vector<int> frequencies() const;
  // Set ids containing element e, ascending.
  std::vector<int> sets_containing(int e) const;
  bool is_cover(const std::vector<int>& chosen) const;
  Cost cost_of(const std::vector<int>& chosen) const;
  // Throws kUnsupportedInstance for out-of-range or uncoverable elements.
  void validate() const;
};

// "nU nS" then nS lines "cost k e1 ... ek" (cost as p/q, p or inf).
SetCoverInstance parse_set_cover(std::string_view text);
std::string format_set_cover(const SetCoverInstance& sc);

enum class GadgetRole { kSet, kElement, kTreeInternal, kTreeRoot };

struct GadgetVertex {
  GadgetRole role = GadgetRole::kSet;
  int set = -1;      // for kSet
  int element = -1;  // for kElement / kTreeInternal / kTreeRoot
};

struct GadgetInstance {
  MultiGraph graph;
  int rho = 0;
  bool warmup = false;
  std::vector<GadgetVertex> provenance;  // per vertex
  std::vector<VertexId> set_vertex;      // per set
  // Per element: its tree vertices (leaves and internal) for the main
  // gadget, or {u_e} plus its neighbours for the warmup gadget.
  std::vector<VertexSet> element_block;
  std::vector<VertexId> element_anchor;  // root r_e, or u_e for the warmup
};

// Complete binary tree per element over the set-vertices containing it
// (ascending set id), one loop on each root, rho loops on each set-vertex and
// rho - 2 extra loops on every other vertex. Non-set vertices cost infinity.
// Requires every frequency to equal a common power of two >= 4 and rho >= 2
// (kUnsupportedInstance otherwise).
GadgetInstance build_gadget(const SetCoverInstance& sc, int rho);

// Incidence graph with f_max - 1 loops per set-vertex and f_max - f_e loops
// per element vertex; target rho = f_max - 1.
GadgetInstance build_warmup_gadget(const SetCoverInstance& sc);

// Sets whose vertices were deleted. Throws kNotFiniteCost when the deletion
// set has an infinite-cost vertex and kNotFeasible when G - S has density
// above rho.
std::vector<int> extract_cover(const GadgetInstance& gi, const VertexSet& deleted);

// {v_S : S in cover}.
VertexSet cover_to_deletion(const GadgetInstance& gi, const std::vector<int>& cover);

std::string gadget_role_name(GadgetRole role);

}  // namespace densedel

#endif  // DENSEDEL_GADGETS_H_
