#include "syzkit/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>

#include "linalg_internal.hpp"

namespace syzkit::linalg {

namespace {

Storage pick_storage(const gf::Field& f) {
  if (f.p() == 2 && f.degree() <= 8) return Storage::bitplanes;
  if (f.order() <= 256) return Storage::bytes;
  return Storage::words;
}

}  // namespace

MatrixFq::MatrixFq(gf::Field f, size_t rows, size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), kind_(pick_storage(f_)) {
  allocate();
}

MatrixFq::MatrixFq(gf::Field f, size_t rows, size_t cols, Storage forced)
    : f_(std::move(f)), rows_(rows), cols_(cols), kind_(forced) {
  if (forced == Storage::bitplanes && (f_.p() != 2 || f_.degree() > 8))
    throw std::invalid_argument("bitplane storage requires GF(2^a), a <= 8");
  if (forced == Storage::bytes && f_.order() > 256)
    throw std::invalid_argument("byte storage requires order <= 256");
  allocate();
}

void MatrixFq::allocate() {
  switch (kind_) {
    case Storage::bitplanes:
      planes_ = f_.degree();
      wpr_ = (cols_ + 63) / 64;
      bits_.assign(rows_ * planes_ * wpr_, 0);
      break;
    case Storage::bytes:
      bytes_.assign(rows_ * cols_, 0);
      break;
    case Storage::words:
      words_.assign(rows_ * cols_, 0);
      break;
  }
}

size_t MatrixFq::predicted_bytes(const gf::Field& f, size_t rows, size_t cols) {
  switch (pick_storage(f)) {
    case Storage::bitplanes:
      return rows * f.degree() * ((cols + 63) / 64) * 8;
    case Storage::bytes:
      return rows * cols;
    case Storage::words:
      return rows * cols * 4;
  }
  return 0;
}

MatrixFq MatrixFq::identity(const gf::Field& f, size_t n) {
  MatrixFq m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFq MatrixFq::from_rows(const gf::Field& f,
                             const std::vector<std::vector<uint32_t>>& rows) {
  size_t r = rows.size();
  size_t c = r ? rows[0].size() : 0;
  MatrixFq m(f, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

uint32_t MatrixFq::get(size_t i, size_t j) const {
  switch (kind_) {
    case Storage::bitplanes: {
      uint32_t v = 0;
      for (size_t p = 0; p < planes_; ++p)
        v |= static_cast<uint32_t>(plane_data(i, p)[j >> 6] >> (j & 63) & 1) << p;
      return v;
    }
    case Storage::bytes:
      return bytes_[i * cols_ + j];
    case Storage::words:
      return words_[i * cols_ + j];
  }
  return 0;
}

void MatrixFq::set(size_t i, size_t j, uint32_t enc) {
  switch (kind_) {
    case Storage::bitplanes:
      for (size_t p = 0; p < planes_; ++p) {
        uint64_t* w = plane_data(i, p) + (j >> 6);
        uint64_t bit = uint64_t{1} << (j & 63);
        if (enc >> p & 1)
          *w |= bit;
        else
          *w &= ~bit;
      }
      break;
    case Storage::bytes:
      bytes_[i * cols_ + j] = static_cast<uint8_t>(enc);
      break;
    case Storage::words:
      words_[i * cols_ + j] = enc;
      break;
  }
}

void MatrixFq::add_to(size_t i, size_t j, uint32_t enc) {
  set(i, j, f_.add(get(i, j), enc));
}

void MatrixFq::row_axpy(size_t dst_row, const MatrixFq& src, size_t src_row,
                        uint32_t c) {
  if (c == 0) return;
  if (src.kind_ != kind_ || src.cols_ != cols_)
    throw std::invalid_argument("row_axpy shape/storage mismatch");
  switch (kind_) {
    case Storage::bitplanes: {
      // dst += c * src: output plane i accumulates the source planes j with
      // bit i set in c * X^j.
      for (size_t j = 0; j < planes_; ++j) {
        uint32_t cj = f_.mul(c, uint32_t{1} << j);
        const uint64_t* sp = src.plane_data(src_row, j);
        for (size_t i = 0; i < planes_; ++i) {
          if (!(cj >> i & 1)) continue;
          uint64_t* dp = plane_data(dst_row, i);
          for (size_t w = 0; w < wpr_; ++w) dp[w] ^= sp[w];
        }
      }
      break;
    }
    case Storage::bytes: {
      uint8_t* d = byte_row(dst_row);
      const uint8_t* s = src.byte_row(src_row);
      for (size_t j = 0; j < cols_; ++j)
        d[j] = static_cast<uint8_t>(f_.add(d[j], f_.mul(c, s[j])));
      break;
    }
    case Storage::words: {
      uint32_t* d = word_row(dst_row);
      const uint32_t* s = src.word_row(src_row);
      for (size_t j = 0; j < cols_; ++j) d[j] = f_.add(d[j], f_.mul(c, s[j]));
      break;
    }
  }
}

std::vector<uint32_t> MatrixFq::row(size_t i) const {
  std::vector<uint32_t> r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = get(i, j);
  return r;
}

bool MatrixFq::row_is_zero(size_t i) const {
  switch (kind_) {
    case Storage::bitplanes: {
      const uint64_t* p0 = plane_data(i, 0);
      for (size_t w = 0; w < planes_ * wpr_; ++w)
        if (p0[w]) return false;
      return true;
    }
    case Storage::bytes: {
      const uint8_t* r = byte_row(i);
      return std::all_of(r, r + cols_, [](uint8_t x) { return x == 0; });
    }
    case Storage::words: {
      const uint32_t* r = word_row(i);
      return std::all_of(r, r + cols_, [](uint32_t x) { return x == 0; });
    }
  }
  return true;
}

MatrixFq MatrixFq::transposed() const {
  MatrixFq t(f_, cols_, rows_, kind_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      uint32_t v = get(i, j);
      if (v) t.set(j, i, v);
    }
  return t;
}

MatrixFq MatrixFq::select_columns(const std::vector<size_t>& cols) const {
  MatrixFq m(f_, rows_, cols.size(), kind_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      uint32_t v = get(i, cols[j]);
      if (v) m.set(i, j, v);
    }
  return m;
}

MatrixFq MatrixFq::select_rows(const std::vector<size_t>& rows) const {
  MatrixFq m(f_, rows.size(), cols_, kind_);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols_; ++j) {
      uint32_t v = get(rows[i], j);
      if (v) m.set(i, j, v);
    }
  return m;
}

MatrixFq MatrixFq::with_storage(Storage s) const {
  MatrixFq m(f_, rows_, cols_, s);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      uint32_t v = get(i, j);
      if (v) m.set(i, j, v);
    }
  return m;
}

bool MatrixFq::operator==(const MatrixFq& o) const {
  if (!f_.same_as(o.f_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (get(i, j) != o.get(i, j)) return false;
  return true;
}

namespace {

// Plain immediate-update Gaussian elimination for the byte / word / multi-
// plane paths. Only rows eligible per `full_reduce` are updated, exactly as
// in the GF(2) core.
detail::Pivots generic_eliminate(MatrixFq& w, size_t active_cols,
                                 bool full_reduce) {
  detail::Pivots piv;
  size_t rows = w.rows();
  if (rows == 0 || active_cols == 0) return piv;
  const gf::Field& f = w.field();
  std::vector<uint8_t> is_pivot(rows, 0);
  size_t npiv = 0;
  for (size_t col = 0; col < active_cols && npiv < rows; ++col) {
    size_t prow = rows;
    for (size_t r = 0; r < rows; ++r) {
      if (!is_pivot[r] && w.get(r, col) != 0) {
        prow = r;
        break;
      }
    }
    if (prow == rows) continue;
    uint32_t lead = w.get(prow, col);
    if (lead != 1) {
      uint32_t linv = f.inv(lead);
      // scale the whole row
      for (size_t j = 0; j < w.cols(); ++j) {
        uint32_t v = w.get(prow, j);
        if (v) w.set(prow, j, f.mul(v, linv));
      }
    }
    for (size_t r = 0; r < rows; ++r) {
      if (r == prow) continue;
      if (!full_reduce && is_pivot[r]) continue;
      uint32_t c = w.get(r, col);
      if (c) w.row_axpy(r, w, prow, f.neg(c));
    }
    is_pivot[prow] = 1;
    ++npiv;
    piv.cols.push_back(static_cast<uint32_t>(col));
    piv.rows.push_back(static_cast<uint32_t>(prow));
  }
  return piv;
}

bool gf2_path(const MatrixFq& m) {
  return m.storage() == Storage::bitplanes && m.planes() == 1;
}

detail::Pivots eliminate(MatrixFq& w, size_t active_cols, bool full_reduce) {
  if (gf2_path(w))
    return detail::gf2_eliminate(w.plane_data(0, 0), w.rows(),
                                 w.words_per_plane(), active_cols, full_reduce);
  return generic_eliminate(w, active_cols, full_reduce);
}

bool row_zero_on_active(const MatrixFq& w, size_t r, size_t active_cols) {
  if (w.storage() == Storage::bitplanes) {
    size_t full_words = active_cols / 64;
    for (size_t p = 0; p < w.planes(); ++p) {
      const uint64_t* d = w.plane_data(r, p);
      for (size_t i = 0; i < full_words; ++i)
        if (d[i]) return false;
      if (active_cols % 64) {
        uint64_t mask = (uint64_t{1} << (active_cols % 64)) - 1;
        if (d[full_words] & mask) return false;
      }
    }
    return true;
  }
  for (size_t j = 0; j < active_cols; ++j)
    if (w.get(r, j)) return false;
  return true;
}

}  // namespace

RrefResult rref(const MatrixFq& m) {
  MatrixFq w = m;
  w.row_labels.clear();
  w.col_labels.clear();
  detail::Pivots piv = eliminate(w, m.cols(), true);
  RrefResult out;
  out.rank = piv.cols.size();
  out.pivots.assign(piv.cols.begin(), piv.cols.end());
  out.matrix = MatrixFq(m.field(), m.rows(), m.cols(), m.storage());
  std::vector<uint8_t> used(m.rows(), 0);
  for (size_t i = 0; i < piv.rows.size(); ++i) {
    used[piv.rows[i]] = 1;
    for (size_t j = 0; j < m.cols(); ++j) {
      uint32_t v = w.get(piv.rows[i], j);
      if (v) out.matrix.set(i, j, v);
    }
  }
  // Dependent rows are fully reduced to zero; they occupy the bottom rows.
  return out;
}

size_t rank_of(const MatrixFq& m) {
  MatrixFq w = m;
  if (gf2_path(w))
    return detail::gf2_rank(w.plane_data(0, 0), w.rows(), w.words_per_plane(),
                            w.cols());
  return generic_eliminate(w, w.cols(), false).cols.size();
}

MatrixFq left_kernel_basis(const MatrixFq& m) {
  size_t r = m.rows();
  // Work on [m | I], kernel rows are those whose m-part vanishes.
  MatrixFq w(m.field(), r, m.cols() + r, m.storage());
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      uint32_t v = m.get(i, j);
      if (v) w.set(i, j, v);
    }
    w.set(i, m.cols() + i, 1);
  }
  eliminate(w, m.cols(), false);
  std::vector<size_t> kernel_rows;
  for (size_t i = 0; i < r; ++i)
    if (row_zero_on_active(w, i, m.cols())) kernel_rows.push_back(i);

  MatrixFq k0(m.field(), kernel_rows.size(), r, m.storage());
  for (size_t i = 0; i < kernel_rows.size(); ++i)
    for (size_t j = 0; j < r; ++j) {
      uint32_t v = w.get(kernel_rows[i], m.cols() + j);
      if (v) k0.set(i, j, v);
    }
  RrefResult canon = rref(k0);
  return canon.matrix;
}

MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b) {
  if (!a.field().same_as(b.field()))
    throw std::invalid_argument("mat_mul: field mismatch");
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  MatrixFq c(a.field(), a.rows(), b.cols(), b.storage());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t l = 0; l < a.cols(); ++l) {
      uint32_t v = a.get(i, l);
      if (v) c.row_axpy(i, b, l, v);
    }
  return c;
}

bool is_zero(const MatrixFq& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    if (!m.row_is_zero(i)) return false;
  return true;
}

void write_matrix_text(std::ostream& os, const MatrixFq& m) {
  os << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.get(i, j);
    }
    os << '\n';
  }
}

MatrixFq read_matrix_text(std::istream& is) {
  uint64_t q;
  size_t r, c;
  if (!(is >> q >> r >> c)) throw std::invalid_argument("bad matrix header");
  gf::Field f = field_of_order(q);
  MatrixFq m(f, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) {
      uint32_t v;
      if (!(is >> v)) throw std::invalid_argument("truncated matrix file");
      if (v >= q) throw std::invalid_argument("element encoding out of range");
      if (v) m.set(i, j, v);
    }
  return m;
}

gf::Field field_of_order(uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q prime
  uint32_t a = 0;
  uint64_t t = q;
  while (t > 1) {
    if (t % p) throw std::invalid_argument("order is not a prime power");
    t /= p;
    ++a;
  }
  return gf::make_field(static_cast<uint32_t>(p), a);
}

MatrixFq random_matrix(const gf::Field& f, size_t rows, size_t cols, Rng& rng) {
  MatrixFq m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      uint32_t v = static_cast<uint32_t>(rng.below(f.order()));
      if (v) m.set(i, j, v);
    }
  return m;
}

}  // namespace syzkit::linalg
