// Closed-form machinery: Eagon-Northcott parameters and strand lower bounds
// for (shortened) dual alternant and binary Goppa codes, the explicit 2 x f
// matrix of linear forms with its minor and syzygy verifiers, exact
// Gilbert-Varshamov distances, entropy threshold rates, and closed-form Betti
// diagrams for parity and critical-length GRS codes.
#pragma once

#include "syzkit/codes.hpp"
#include "syzkit/syzygy.hpp"

namespace syzkit::bounds {

using codes::SupportMultiplier;
using linalg::MatrixFq;

struct ENParams {
  uint64_t q = 0;
  uint32_t t = 0;
  uint32_t e = 0;  // floor(log_q(t-1))
  int64_t f = 0;   // (e+1) t - (q^{e+1}-1)/(q-1)
};

struct GoppaENParams {
  uint32_t t = 0;
  uint32_t e_hat = 0;  // floor(log_4(2t-1))
  int64_t f_hat = 0;   // (2 e_hat + 2) t - (4^{e_hat+1}-1)/3
};

ENParams alternant_en_params(uint64_t q, uint32_t t);
GoppaENParams goppa_en_params(uint32_t t);

// (r-1) binom(f-s, r), times the multiplicity when the m-fold pattern is
// wanted.
mpz_class en_strand_bound(int64_t f, int64_t s, uint32_t r, uint32_t mult = 1);

// m (r-1) (binom(f,r) - binom(f-(t-1), r)); unshortened case.
mpz_class improved_alternant_bound(uint32_t m, uint64_t q, uint32_t t,
                                   uint32_t r);

// The 2 x f matrix of linear forms attached to a proper dual alternant code:
// block u (0 <= u <= e) is 2 x (t - q^u) with column j carrying the variable
// pair (a = j, a = j + q^u) at conjugacy level e - u. Variables are X^{(u)}_a
// with id = u * t + a; each evaluates entrywise as (y x^a)^{q^u}.
struct PhiMatrix {
  uint64_t q = 0;
  uint32_t t = 0, m = 0;
  uint32_t e = 0;
  int64_t f = 0;
  struct Column {
    uint32_t top_var;     // id of the first-row variable
    uint32_t bottom_var;  // id of the second-row variable
  };
  std::vector<Column> columns;
  std::vector<size_t> block_widths;  // t - q^u for u = 0..e

  // evaluation vector of each variable id over GF(q^m), length n
  std::vector<std::vector<uint32_t>> var_eval;
  gf::Field big_field;

  bool columns_independent() const;  // as pairs of linear forms
};

PhiMatrix build_phi(const SupportMultiplier& sm, uint64_t q, uint32_t t,
                    uint32_t m);

// True iff all 2x2 minors of phi evaluate to the zero vector.
bool verify_minors_vanish(const PhiMatrix& phi);

// Size of the degree-r family of explicit Eagon-Northcott syzygies.
mpz_class en_family_size(int64_t f, uint32_t r);

// Checks s_r(s_{r-1}) = 0 for the explicit syzygy family over a 2 x f matrix
// with independent random entries from `field`, `trials` times.
bool verify_en_syzygies(size_t f, uint32_t r, const gf::Field& field,
                        uint32_t trials, Rng& rng);

// Pinned Gilbert-Varshamov value: the largest d with
//   sum_{i<=d-1} binom(n,i)(q-1)^i < q^{n-k},
// i.e. the smallest weight at which the expected number of codewords in a
// random [n,k]_q code reaches 1. dual_gv(q,n,k) = gv_distance(q,n,n-k).
extern const char* const kGvConvention;
int64_t gv_distance(uint64_t q, uint64_t n, uint64_t k);
int64_t dual_gv_distance(uint64_t q, uint64_t n, uint64_t k);

// q-ary entropy and its inverse on [0, 1-1/q].
double entropy_q(uint64_t q, double x);
double entropy_q_inv(uint64_t q, double y);

struct ThresholdRates {
  double r1 = 0;  // root of H_q^{-1}(1-R) = R(1-R)
  double r2 = 0;  // root of H_q^{-1}(R) = R^2
};

ThresholdRates entropy_threshold_rates(uint64_t q);

enum class DiagramKind { parity, grs_critical };

// Predicted full diagram of the [k+1,k] MDS code / the [2k-1,k] GRS code.
syzygy::BettiDiagram closed_form_diagram(DiagramKind kind, size_t k);

}  // namespace syzkit::bounds
