#ifndef DENSEDEL_VERTEX_SET_H_
#define DENSEDEL_VERTEX_SET_H_

#include <algorithm>
#include <cstdint>
#include <vector>

namespace densedel {

using VertexId = int;

// Sorted, duplicate-free list of vertex (or ground-set element) ids.
using VertexSet = std::vector<VertexId>;

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet with(const VertexSet& s, VertexId v) {
  VertexSet out = s;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

inline VertexSet without(const VertexSet& s, VertexId v) {
  VertexSet out = s;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it != out.end() && *it == v) out.erase(it);
  return out;
}

inline VertexSet iota_set(int n) {
  VertexSet s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

// Members of `ground` selected by the bits of `mask` (bit i -> ground[i]).
inline VertexSet subset_from_mask(const VertexSet& ground, std::uint64_t mask) {
  VertexSet out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask >> i & 1) out.push_back(ground[i]);
  }
  return out;
}

}  // namespace densedel

#endif  // DENSEDEL_VERTEX_SET_H_
