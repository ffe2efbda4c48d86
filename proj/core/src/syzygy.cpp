#include "syzkit/syzygy.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace syzkit::syzygy {

using linalg::left_kernel_basis;

size_t rank2(size_t k, size_t a, size_t b) {
  return a * k - a * (a - 1) / 2 + (b - a);
}

size_t rank3(size_t k, size_t a, size_t b, size_t c) {
  size_t skipped = static_cast<size_t>(binom_i64(k + 2, 3)) -
                   static_cast<size_t>(binom_i64(k - a + 2, 3));
  return skipped + rank2(k - a, b - a, c - a);
}

std::pair<size_t, size_t> unrank2(size_t k, size_t idx) {
  size_t a = 0;
  while (idx >= k - a) {
    idx -= k - a;
    ++a;
  }
  return {a, a + idx};
}

MatrixFq squared_matrix(const MatrixFq& g) {
  size_t k = g.rows(), n = g.cols();
  const gf::Field& f = g.field();
  MatrixFq m(f, k * (k + 1) / 2, n);
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a; b < k; ++b) {
      size_t row = rank2(k, a, b);
      for (size_t j = 0; j < n; ++j) {
        uint32_t v = f.mul(g.get(a, j), g.get(b, j));
        if (v) m.set(row, j, v);
      }
    }
  return m;
}

SyzygyBasis compute_B2(const MatrixFq& g) {
  return SyzygyBasis{2, left_kernel_basis(squared_matrix(g))};
}

MatrixFq macaulay_deg3(const SyzygyBasis& b2, size_t k) {
  if (b2.degree != 2) throw std::invalid_argument("macaulay_deg3 wants degree 2");
  size_t beta = b2.count();
  size_t pairs = k * (k + 1) / 2;
  if (beta && b2.basis.cols() != pairs)
    throw std::invalid_argument("degree-2 basis has wrong width");
  MatrixFq m(b2.basis.field(), k * beta, static_cast<size_t>(binom_i64(k + 2, 3)));
  for (size_t a = 0; a < k; ++a)
    for (size_t s = 0; s < beta; ++s) {
      size_t row = a * beta + s;
      for (size_t p = 0; p < pairs; ++p) {
        uint32_t v = b2.basis.get(s, p);
        if (!v) continue;
        auto [b, c] = unrank2(k, p);
        size_t t1 = std::min(a, b);
        size_t t3 = std::max(a, c);
        size_t t2 = a + b + c - t1 - t3;
        m.add_to(row, rank3(k, t1, t2, t3), v);
      }
    }
  return m;
}

MatrixFq blockwise_macaulay(const SyzygyBasis& b_prev,
                            const SyzygyBasis& b_prev2, size_t k) {
  if (b_prev.degree != b_prev2.degree + 1)
    throw std::invalid_argument("blockwise_macaulay: degree mismatch");
  size_t beta_prev = b_prev.count();
  size_t beta_prev2 = b_prev2.count();
  if (beta_prev && b_prev.basis.cols() != k * beta_prev2)
    throw std::invalid_argument("basis labels inconsistent");
  size_t pairs = k * (k + 1) / 2;
  MatrixFq m(b_prev.basis.field(), k * beta_prev, pairs * beta_prev2);
  for (size_t a = 0; a < k; ++a)
    for (size_t s = 0; s < beta_prev; ++s) {
      size_t row = a * beta_prev + s;
      for (size_t b = 0; b < k; ++b) {
        size_t pr = rank2(k, std::min(a, b), std::max(a, b));
        for (size_t t = 0; t < beta_prev2; ++t) {
          uint32_t v = b_prev.basis.get(s, b * beta_prev2 + t);
          if (v) m.add_to(row, pr * beta_prev2 + t, v);
        }
      }
    }
  return m;
}

size_t BettiStrand::beta_at(uint32_t r) const {
  if (r < 2) throw std::invalid_argument("beta_at: r < 2");
  size_t idx = r - 2;
  if (idx < beta.size()) return beta[idx];
  if (complete || r > k) return 0;
  throw std::out_of_range("strand not computed to this degree");
}

std::optional<uint32_t> BettiStrand::r_max() const {
  if (!complete) return std::nullopt;
  for (size_t i = beta.size(); i-- > 0;)
    if (beta[i] > 0) return static_cast<uint32_t>(i + 2);
  return 1;  // no linear strand at all
}

namespace {

// Peak allocation of the kernel step on a rows x cols matrix: the matrix
// itself plus its copy augmented with the identity.
size_t kernel_step_bytes(const gf::Field& f, size_t rows, size_t cols) {
  return MatrixFq::predicted_bytes(f, rows, cols) +
         MatrixFq::predicted_bytes(f, rows, cols + rows);
}

std::string refusal_message(uint32_t r, size_t rows, size_t cols, size_t bytes,
                            size_t cap) {
  std::ostringstream os;
  os << "degree " << r << " matrix of shape " << rows << "x" << cols
     << " needs ~" << bytes / (1 << 20) << " MiB against a cap of "
     << cap / (1 << 20) << " MiB";
  return os.str();
}

// For regularity-2 codes the index formula forces
// beta_{r-1,r} >= ind(phi_r)^+, which lower-bounds the shape of the next
// Macaulay matrix before the current kernel is paid for. Returns a refusal
// message when that bound alone already busts the cap.
std::optional<std::string> lookahead_refusal(bool reg2, size_t n, size_t k,
                                             uint32_t r_next, size_t beta_prev,
                                             uint32_t max_degree,
                                             const gf::Field& f, size_t cap) {
  if (!reg2 || r_next > max_degree || r_next < 4) return std::nullopt;
  mpz_class ind = phi_index_mpz(n, k, r_next - 1);
  if (ind <= 0) return std::nullopt;
  if (!ind.fits_ulong_p()) return {"predicted matrix size overflows"};
  size_t rows_lb = k * ind.get_ui();
  size_t cols = (k * (k + 1) / 2) * beta_prev;
  size_t bytes = kernel_step_bytes(f, rows_lb, cols);
  if (bytes > cap)
    return refusal_message(r_next, rows_lb, cols, bytes, cap) +
           " (lower bound from the index formula)";
  return std::nullopt;
}

}  // namespace

StrandResult linear_strand(const LinearCode& c, const StrandOptions& opt) {
  size_t k = c.dim(), n = c.length();
  const gf::Field& f = c.field();
  uint32_t max_degree =
      opt.max_degree ? std::min<uint32_t>(opt.max_degree, static_cast<uint32_t>(k))
                     : static_cast<uint32_t>(k);
  if (max_degree < 2) max_degree = 2;

  StrandResult out;
  out.strand.n = n;
  out.strand.k = k;
  out.strand.q = f.order();

  // Degree 2.
  {
    size_t rows = k * (k + 1) / 2;
    size_t bytes = kernel_step_bytes(f, rows, n);
    if (bytes > opt.mem_cap_bytes) {
      out.strand.refusal = refusal_message(2, rows, n, bytes, opt.mem_cap_bytes);
      return out;
    }
  }
  SyzygyBasis prev2;  // degree r-2
  SyzygyBasis prev;   // degree r-1
  auto timed_kernel = [&out](const MatrixFq& m) {
    auto t0 = std::chrono::steady_clock::now();
    MatrixFq k = left_kernel_basis(m);
    out.kernel_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count());
    return k;
  };
  {
    MatrixFq m2 = squared_matrix(c.generator());
    out.shapes.push_back({m2.rows(), m2.cols()});
    prev = SyzygyBasis{2, timed_kernel(m2)};
  }
  out.strand.beta.push_back(prev.count());
  out.strand.computed_up_to = 2;
  if (opt.keep_bases) out.bases.push_back(prev);
  if (prev.count() == 0 || max_degree == 2 || k < 3) {
    out.strand.complete = prev.count() == 0 || max_degree >= k;
    return out;
  }

  bool reg2 = k * (k + 1) / 2 - prev.count() == n;

  // Degree 3.
  {
    size_t rows = k * prev.count();
    size_t cols = static_cast<size_t>(binom_i64(k + 2, 3));
    size_t bytes = kernel_step_bytes(f, rows, cols);
    if (bytes > opt.mem_cap_bytes) {
      out.strand.refusal = refusal_message(3, rows, cols, bytes, opt.mem_cap_bytes);
      return out;
    }
    if (auto r = lookahead_refusal(reg2, n, k, 4, prev.count(), max_degree, f,
                                   opt.mem_cap_bytes)) {
      out.strand.refusal = *r;
      return out;
    }
    MatrixFq m3 = macaulay_deg3(prev, k);
    out.shapes.push_back({m3.rows(), m3.cols()});
    SyzygyBasis b3{3, timed_kernel(m3)};
    prev2 = std::move(prev);
    prev = std::move(b3);
  }
  out.strand.beta.push_back(prev.count());
  out.strand.computed_up_to = 3;
  if (opt.keep_bases) out.bases.push_back(prev);

  for (uint32_t r = 4; r <= max_degree && prev.count() > 0; ++r) {
    size_t rows = k * prev.count();
    size_t cols = (k * (k + 1) / 2) * prev2.count();
    size_t bytes = kernel_step_bytes(f, rows, cols);
    if (bytes > opt.mem_cap_bytes) {
      out.strand.refusal = refusal_message(r, rows, cols, bytes, opt.mem_cap_bytes);
      return out;
    }
    if (auto la = lookahead_refusal(reg2, n, k, r + 1, prev.count(), max_degree,
                                    f, opt.mem_cap_bytes)) {
      out.strand.refusal = *la;
      return out;
    }
    MatrixFq mr = blockwise_macaulay(prev, prev2, k);
    out.shapes.push_back({mr.rows(), mr.cols()});
    SyzygyBasis br{r, timed_kernel(mr)};
    prev2 = std::move(prev);
    prev = std::move(br);
    out.strand.beta.push_back(prev.count());
    out.strand.computed_up_to = r;
    if (opt.keep_bases) out.bases.push_back(prev);
  }
  out.strand.complete =
      prev.count() == 0 || out.strand.computed_up_to >= k;
  return out;
}

mpz_class phi_index_mpz(size_t n, size_t k, uint32_t r) {
  if (r < 2) throw std::invalid_argument("phi_index: r < 2");
  // (k(k+1)/r - n) binom(k-1, r-2) == (r-1) binom(k+1, r) - n binom(k-1, r-2)
  mpz_class ind = mpz_class(r - 1) * binom_mpz(k + 1, r) -
                  mpz_class(static_cast<unsigned long>(n)) *
                      binom_mpz(k - 1, static_cast<int64_t>(r) - 2);
  return ind;
}

int64_t phi_index(size_t n, size_t k, uint32_t r) {
  mpz_class v = phi_index_mpz(n, k, r);
  if (!v.fits_slong_p()) throw std::overflow_error("phi_index overflow");
  return v.get_si();
}

int64_t defect(const BettiStrand& strand, uint32_t r, size_t n, size_t k) {
  int64_t ind = phi_index(n, k, r);
  int64_t beta = static_cast<int64_t>(strand.beta_at(r));
  int64_t d = beta - std::max<int64_t>(ind, 0);
  if (d < 0)
    throw std::logic_error("negative defect: strand inconsistent with index");
  return d;
}

BettiDiagram betti_diagram_reg2(const LinearCode& c, const BettiStrand& strand) {
  size_t n = c.length(), k = c.dim();
  if (strand.n != n || strand.k != k)
    throw std::invalid_argument("strand belongs to a different code");
  size_t dim_c2 = k * (k + 1) / 2 - strand.beta_at(2);
  if (dim_c2 != n)
    throw std::domain_error(
        "row 2 unavailable: regularity > 2 (dim C^<2> = " +
        std::to_string(dim_c2) + " < n = " + std::to_string(n) + ")");
  if (!strand.complete)
    throw std::domain_error("strand incomplete; cannot form the diagram");

  BettiDiagram d;
  d.n = n;
  d.k = k;
  d.row1.resize(k - 1);
  d.row2.resize(k - 1);
  for (size_t i = 1; i <= k - 1; ++i)
    d.row1[i - 1] = static_cast<int64_t>(strand.beta_at(static_cast<uint32_t>(i + 1)));
  for (size_t i = 1; i <= k - 1; ++i) {
    uint32_t r = static_cast<uint32_t>(i + 2);
    int64_t beta_r1r = static_cast<int64_t>(strand.beta_at(r));
    int64_t v = beta_r1r - phi_index(n, k, r);
    if (v < 0) throw std::logic_error("negative Betti entry in row 2");
    d.row2[i - 1] = v;
  }
  if (d.row2[k - 2] != static_cast<int64_t>(n - k))
    throw std::logic_error("beta_{k-1,k+1} != n-k: diagram inconsistent");
  return d;
}

RMaxResult r_max(const LinearCode& c, uint32_t cap, const StrandOptions& opt) {
  StrandOptions o = opt;
  o.max_degree = cap;
  StrandResult res = linear_strand(c, o);
  RMaxResult out;
  out.strand = res.strand;
  if (res.strand.complete) {
    out.value = res.strand.r_max().value_or(1);
  } else if (!res.strand.beta.empty() && res.strand.beta.back() == 0) {
    out.value = res.strand.r_max().value_or(1);
  }
  return out;
}

std::vector<int64_t> alternating_sums(const BettiDiagram& d) {
  size_t k = d.k;
  std::vector<int64_t> b(k + 2, 0);
  b[0] = 1;
  for (size_t i = 1; i <= k - 1; ++i) {
    size_t j1 = i + 1;  // row 1 entry beta_{i,i+1}
    int64_t sign1 = (i % 2) ? -1 : 1;
    b[j1] += sign1 * d.row1[i - 1];
    size_t j2 = i + 2;  // row 2 entry beta_{i,i+2}
    b[j2] += sign1 * d.row2[i - 1];
  }
  return b;
}

std::vector<int64_t> hilbert_prediction(size_t n, size_t k) {
  std::vector<int64_t> b(k + 2, 0);
  for (size_t j = 0; j <= k + 1; ++j) {
    int64_t v = 0;
    int64_t sign_j = (j % 2) ? -1 : 1;
    if (j <= k) v += sign_j * binom_i64(k, static_cast<int64_t>(j));
    if (j >= 1 && j - 1 <= k)
      v -= sign_j * static_cast<int64_t>(k) * binom_i64(k, static_cast<int64_t>(j) - 1);
    if (j >= 2 && j - 2 <= k - 1)
      v += sign_j * static_cast<int64_t>(n) * binom_i64(k - 1, static_cast<int64_t>(j) - 2);
    b[j] = v;
  }
  return b;
}

}  // namespace syzkit::syzygy
