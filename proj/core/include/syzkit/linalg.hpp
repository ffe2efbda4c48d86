// Exact dense linear algebra over a Field: reduced row echelon form, rank,
// and canonical left-kernel bases, with a packed bit-plane fast path in
// characteristic 2.
//
// Storage is picked per field: characteristic-2 fields of degree <= 8 pack
// each row into degree-many bit planes (GF(2) rows are plain packed bits);
// odd-characteristic fields up to order 256 store bytes; everything else
// stores 32-bit encodings. All paths produce identical results; the packed
// paths are tested entrywise against the generic one.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "syzkit/gf.hpp"

namespace syzkit::linalg {

enum class Storage { bitplanes, bytes, words };

class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(gf::Field f, size_t rows, size_t cols);
  MatrixFq(gf::Field f, size_t rows, size_t cols, Storage forced);

  static MatrixFq identity(const gf::Field& f, size_t n);
  static MatrixFq from_rows(const gf::Field& f,
                            const std::vector<std::vector<uint32_t>>& rows);

  const gf::Field& field() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Storage storage() const { return kind_; }

  uint32_t get(size_t i, size_t j) const;
  void set(size_t i, size_t j, uint32_t enc);

  void add_to(size_t i, size_t j, uint32_t enc);  // entry += enc

  // dst_row += c * src_row of other (defaults to *this).
  void row_axpy(size_t dst_row, const MatrixFq& src, size_t src_row, uint32_t c);

  std::vector<uint32_t> row(size_t i) const;
  bool row_is_zero(size_t i) const;

  MatrixFq transposed() const;
  MatrixFq select_columns(const std::vector<size_t>& cols) const;
  MatrixFq select_rows(const std::vector<size_t>& rows) const;
  MatrixFq with_storage(Storage s) const;

  bool operator==(const MatrixFq& o) const;

  // Estimated allocation for a rows x cols matrix over f, in bytes.
  static size_t predicted_bytes(const gf::Field& f, size_t rows, size_t cols);

  // Optional opaque labels used by callers (lengths rows() / cols() when set).
  std::vector<uint64_t> row_labels;
  std::vector<uint64_t> col_labels;

  // Internal layout accessors (bitplanes path); used by the elimination core.
  size_t words_per_plane() const { return wpr_; }
  size_t planes() const { return planes_; }
  uint64_t* plane_data(size_t row, size_t plane) {
    return bits_.data() + (row * planes_ + plane) * wpr_;
  }
  const uint64_t* plane_data(size_t row, size_t plane) const {
    return bits_.data() + (row * planes_ + plane) * wpr_;
  }
  uint8_t* byte_row(size_t row) { return bytes_.data() + row * cols_; }
  const uint8_t* byte_row(size_t row) const { return bytes_.data() + row * cols_; }
  uint32_t* word_row(size_t row) { return words_.data() + row * cols_; }
  const uint32_t* word_row(size_t row) const { return words_.data() + row * cols_; }

 private:
  void allocate();

  gf::Field f_;
  size_t rows_ = 0, cols_ = 0;
  Storage kind_ = Storage::words;
  size_t planes_ = 0;  // bitplanes: field degree
  size_t wpr_ = 0;     // bitplanes: 64-bit words per plane
  std::vector<uint64_t> bits_;
  std::vector<uint8_t> bytes_;
  std::vector<uint32_t> words_;
};

struct RrefResult {
  MatrixFq matrix;
  size_t rank = 0;
  std::vector<size_t> pivots;  // pivot column per pivot row, ascending
};

// Reduced row echelon form; deterministic (leftmost pivot column, first
// nonzero row). Zero rows sink to the bottom.
RrefResult rref(const MatrixFq& m);

size_t rank_of(const MatrixFq& m);

// Canonical basis K of the left kernel: K * m == 0, rows(K) = rows(m) -
// rank(m), and K itself in reduced row echelon form.
MatrixFq left_kernel_basis(const MatrixFq& m);

MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b);

bool is_zero(const MatrixFq& m);

// Text format: first line "q r c", then r lines of c integer-encoded
// elements. The field is the default (canonical-modulus) field of order q.
void write_matrix_text(std::ostream& os, const MatrixFq& m);
MatrixFq read_matrix_text(std::istream& is);

// Default field of prime-power order q.
gf::Field field_of_order(uint64_t q);

// Uniform random matrix (all entries independent).
MatrixFq random_matrix(const gf::Field& f, size_t rows, size_t cols, Rng& rng);

}  // namespace syzkit::linalg
