// The linear strand of the graded Betti numbers of a linear code, by iterated
// canonical left kernels of (blockwise) Macaulay matrices; the index and
// defect of the strand maps; and the full two-row Betti diagram of
// regularity-2 codes.
//
// Degree-r syzygy spaces are computed as left kernels:
//   r = 2: kernel of the squared matrix (rows c_a c_b over monomial pairs),
//   r = 3: kernel of the degree-3 Macaulay matrix of the degree-2 basis,
//   r >= 4: kernel of the blockwise Macaulay matrix built from the two
//           previous bases.
// Kernel bases are canonicalized (RREF) at every stage so row labels, dumps,
// and reruns are deterministic.
#pragma once

#include <optional>
#include <string>

#include "syzkit/codes.hpp"

namespace syzkit::syzygy {

using codes::LinearCode;
using linalg::MatrixFq;

// Monomial ranks under graded lex with X_1 > ... > X_k (0-based variables).
size_t rank2(size_t k, size_t a, size_t b);                 // a <= b
size_t rank3(size_t k, size_t a, size_t b, size_t c);       // a <= b <= c
std::pair<size_t, size_t> unrank2(size_t k, size_t idx);

// Canonical kernel basis at one degree. Rows of `basis` are the beta_{r-1,r}
// kernel vectors; their entries are indexed by the rows of the Macaulay
// matrix they annihilate: monomial pairs for degree 2, (variable, previous
// basis row) pairs for degree >= 3, linearized as a * beta_prev + row.
struct SyzygyBasis {
  uint32_t degree = 0;
  MatrixFq basis;

  size_t count() const { return basis.rows(); }
};

struct BettiStrand {
  size_t n = 0, k = 0;
  uint64_t q = 0;
  std::vector<size_t> beta;     // beta_{1,2}, beta_{2,3}, ... up to degree D
  uint32_t computed_up_to = 1;  // highest degree r with beta_{r-1,r} present
  bool complete = false;        // strand reached 0 (or degree k)
  std::optional<std::string> refusal;  // set when the budget stopped us

  // beta_{r-1,r}; zero beyond the computed range when the strand completed.
  size_t beta_at(uint32_t r) const;
  std::optional<uint32_t> r_max() const;
};

struct BettiDiagram {
  size_t n = 0, k = 0;
  // row1[i] = beta_{i,i+1}, row2[i] = beta_{i,i+2}, for i = 1..k-1 at
  // index i-1. beta_{0,0} = 1 is implicit.
  std::vector<int64_t> row1, row2;
};

// --- matrix constructions (Algorithm 1 building blocks) ---

// binom(k+1,2) x n matrix whose row for the pair (a,b), a <= b, is the
// entrywise product of generator rows a and b.
MatrixFq squared_matrix(const MatrixFq& generator);

SyzygyBasis compute_B2(const MatrixFq& generator);

// k*beta_{1,2} x binom(k+2,3); the row (X_a, q) has entry q_M at column
// X_a * M.
MatrixFq macaulay_deg3(const SyzygyBasis& b2, size_t k);

// k*beta_{r-2,r-1} x binom(k+1,2)*beta_{r-3,r-2}; the row (X_a, s) has entry
// s_{X_b, t} at column (X_a X_b, t).
MatrixFq blockwise_macaulay(const SyzygyBasis& b_prev,
                            const SyzygyBasis& b_prev2, size_t k);

// --- strand computation ---

struct StrandOptions {
  uint32_t max_degree = 0;       // 0: up to k
  size_t mem_cap_bytes = size_t{3} << 30;
  bool keep_bases = false;
};

struct StrandResult {
  BettiStrand strand;
  std::vector<SyzygyBasis> bases;  // degrees 2.. when keep_bases
  std::vector<std::pair<size_t, size_t>> shapes;  // per-degree matrix shapes
  std::vector<double> kernel_seconds;             // per-degree wall time
};

StrandResult linear_strand(const LinearCode& c, const StrandOptions& opt = {});

// --- index, defect, diagram ---

// (k(k+1)/r - n) * binom(k-1, r-2), always an integer.
mpz_class phi_index_mpz(size_t n, size_t k, uint32_t r);
int64_t phi_index(size_t n, size_t k, uint32_t r);

// beta_{r-1,r} - max(ind, 0); requires the strand value at r.
int64_t defect(const BettiStrand& strand, uint32_t r, size_t n, size_t k);

// Full two-row diagram; requires regularity 2 (rank of the squared matrix
// equals n) and a complete strand. Throws std::domain_error otherwise.
BettiDiagram betti_diagram_reg2(const LinearCode& c, const BettiStrand& strand);

struct RMaxResult {
  std::optional<uint32_t> value;  // set when resolved below the cap
  BettiStrand strand;
};

RMaxResult r_max(const LinearCode& c, uint32_t cap,
                 const StrandOptions& opt = {});

// Alternating sums B_j of a two-row diagram, j = 0..k+1.
std::vector<int64_t> alternating_sums(const BettiDiagram& d);

// Coefficients of (1+kz)(1-z)^k + n z^2 (1-z)^{k-1}, j = 0..k+1; the
// Hilbert-series prediction for a regularity-2 code.
std::vector<int64_t> hilbert_prediction(size_t n, size_t k);

}  // namespace syzkit::syzygy
