#ifndef DENSEDEL_SIZE_CAP_H_
#define DENSEDEL_SIZE_CAP_H_

namespace densedel {

// Cap on ground-set size for exhaustive routines. The DD_SIZE_CAP environment
// variable, when set to a positive integer, replaces `default_cap`.
int size_cap(int default_cap);

// Hard ceiling regardless of DD_SIZE_CAP (subset masks are 64-bit and tables
// are materialized).
inline constexpr int kAbsoluteSizeCap = 26;

}  // namespace densedel

#endif  // DENSEDEL_SIZE_CAP_H_
