// Internal elimination cores shared by linalg.cpp and linalg_gf2.cpp.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace syzkit::linalg::detail {

struct Pivots {
  std::vector<uint32_t> cols;  // in discovery order (ascending)
  std::vector<uint32_t> rows;  // pivot row chosen for cols[i]
};

// Batched GF(2) forward elimination on a packed row-major buffer.
// Rows are `stride` words wide; only the first `active_cols` bit columns are
// eligible for pivots, but row operations span the full stride (callers
// append augmentation columns beyond active_cols). On return every non-pivot
// row is zero on the active columns; pivot rows are in echelon (not reduced)
// form unless full_reduce is set, in which case pivot rows are mutually
// reduced as well (RREF on the active columns).
Pivots gf2_eliminate(uint64_t* data, size_t rows, size_t stride,
                     size_t active_cols, bool full_reduce);

// Rank only; stops early once every row is a pivot.
size_t gf2_rank(uint64_t* data, size_t rows, size_t stride, size_t active_cols);

}  // namespace syzkit::linalg::detail
