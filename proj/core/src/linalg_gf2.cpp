#include <algorithm>
#include <cstring>

#include "linalg_internal.hpp"

namespace syzkit::linalg::detail {

namespace {

constexpr size_t kBatch = 8;

// Blocks are aligned to 8 columns, so a window never spans a word boundary.
inline uint32_t window8(const uint64_t* row, size_t c0) {
  return static_cast<uint32_t>(row[c0 >> 6] >> (c0 & 63)) & 0xffu;
}

inline void xor_row(uint64_t* dst, const uint64_t* src, size_t words) {
  for (size_t w = 0; w < words; ++w) dst[w] ^= src[w];
}

}  // namespace

// Column blocks of 8 with combination tables (method-of-four-Russians style):
// per block, discover up to 8 pivots, cross-reduce them over the block
// columns, then clear the block columns from every other row with a single
// table lookup + row XOR each. Pivot choice matches leftmost-column,
// first-nonzero-row order, so pivot columns (and the final reduced matrix)
// agree with the plain path.
Pivots gf2_eliminate(uint64_t* data, size_t rows, size_t stride,
                     size_t active_cols, bool full_reduce) {
  Pivots piv;
  if (rows == 0 || active_cols == 0) return piv;

  std::vector<uint8_t> is_pivot(rows, 0);
  std::vector<uint32_t> nonpivot;
  nonpivot.reserve(rows);
  for (uint32_t r = 0; r < rows; ++r) nonpivot.push_back(r);
  std::vector<uint64_t> table((size_t{1} << kBatch) * stride);

  for (size_t c0 = 0; c0 < active_cols && piv.cols.size() < rows; c0 += kBatch) {
    uint32_t kb = static_cast<uint32_t>(std::min(kBatch, active_cols - c0));
    uint32_t block_mask = kb == 8 ? 0xffu : (1u << kb) - 1;

    // Pivot discovery. Each candidate row's window over the block columns is
    // reduced against the pivots claimed so far; a nonzero remainder claims
    // its lowest set bit and the reduction is materialized on the full row.
    uint32_t nb = 0;
    uint32_t bbit[kBatch], brow[kBatch], bwin[kBatch];
    for (size_t idx = 0; idx < nonpivot.size() && nb < kb; ++idx) {
      uint32_t r = nonpivot[idx];
      uint64_t* rp = data + r * stride;
      uint32_t w = window8(rp, c0) & block_mask;
      if (!w) continue;
      uint32_t apply = 0;
      for (uint32_t j = 0; j < nb; ++j) {
        if (w >> bbit[j] & 1) {
          w ^= bwin[j];
          apply |= 1u << j;
        }
      }
      if (!w) continue;
      for (uint32_t j = 0; j < nb; ++j)
        if (apply >> j & 1) xor_row(rp, data + brow[j] * stride, stride);
      uint32_t bit = static_cast<uint32_t>(__builtin_ctz(w));
      bbit[nb] = bit;
      brow[nb] = r;
      bwin[nb] = w;
      ++nb;
    }
    if (nb == 0) continue;

    // Cross-reduce the batch pivots so each claimed column has a single 1.
    for (uint32_t j = 0; j < nb; ++j) {
      for (uint32_t l = 0; l < nb; ++l) {
        if (l == j) continue;
        uint64_t* lp = data + brow[l] * stride;
        if (window8(lp, c0) >> bbit[j] & 1)
          xor_row(lp, data + brow[j] * stride, stride);
      }
    }

    // Combination table over the batch pivot rows.
    uint32_t combos = 1u << nb;
    std::memset(table.data(), 0, stride * sizeof(uint64_t));
    for (uint32_t m = 1; m < combos; ++m) {
      uint32_t low = m & (m - 1);
      uint32_t j = static_cast<uint32_t>(__builtin_ctz(m));
      uint64_t* dst = table.data() + size_t{m} * stride;
      std::memcpy(dst, table.data() + size_t{low} * stride,
                  stride * sizeof(uint64_t));
      xor_row(dst, data + brow[j] * stride, stride);
    }

    // 2 marks a pivot claimed in this block, 1 a pivot from earlier blocks.
    for (uint32_t j = 0; j < nb; ++j) is_pivot[brow[j]] = 2;

    // Clear the claimed columns from every other row (pivot rows from earlier
    // blocks included only when a fully reduced result is requested).
    auto apply_to = [&](uint32_t r) {
      uint64_t* rp = data + r * stride;
      uint32_t w = window8(rp, c0);
      uint32_t pattern = 0;
      for (uint32_t j = 0; j < nb; ++j) pattern |= (w >> bbit[j] & 1) << j;
      if (pattern) xor_row(rp, table.data() + size_t{pattern} * stride, stride);
    };
    if (full_reduce) {
      for (uint32_t r = 0; r < rows; ++r)
        if (is_pivot[r] != 2) apply_to(r);
    } else {
      for (uint32_t r : nonpivot)
        if (is_pivot[r] != 2) apply_to(r);
    }
    for (uint32_t j = 0; j < nb; ++j) is_pivot[brow[j]] = 1;

    // Record pivots in column order and compact the non-pivot list.
    uint32_t order[kBatch];
    for (uint32_t j = 0; j < nb; ++j) order[j] = j;
    std::sort(order, order + nb,
              [&](uint32_t x, uint32_t y) { return bbit[x] < bbit[y]; });
    for (uint32_t j = 0; j < nb; ++j) {
      piv.cols.push_back(static_cast<uint32_t>(c0 + bbit[order[j]]));
      piv.rows.push_back(brow[order[j]]);
    }
    nonpivot.erase(std::remove_if(nonpivot.begin(), nonpivot.end(),
                                  [&](uint32_t r) { return is_pivot[r]; }),
                   nonpivot.end());
  }
  return piv;
}

size_t gf2_rank(uint64_t* data, size_t rows, size_t stride, size_t active_cols) {
  return gf2_eliminate(data, rows, stride, active_cols, false).cols.size();
}

}  // namespace syzkit::linalg::detail
