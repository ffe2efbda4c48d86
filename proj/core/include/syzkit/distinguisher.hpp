// Decision procedures: the beta-threshold distinguisher, the shortened
// distinguisher, heuristic-condition gates, calibration of reference Betti
// values on sampled families, the kappa complexity estimate, the Classic
// McEliece parameter audit, and the distance-based baseline.
#pragma once

#include "syzkit/bounds.hpp"
#include "syzkit/codes.hpp"
#include "syzkit/syzygy.hpp"

namespace syzkit::dist {

using codes::FamilySpec;
using codes::LinearCode;

// Smallest n at which random codes (under the small-defect heuristic) fall
// below beta_star at degree r:
//   n >= ceil( k(k+1)/r - (beta_star - 1) / binom(k-1, r-2) ).
int64_t basic_threshold(size_t k, uint32_t r, const mpz_class& beta_star);

// Largest s with (k-s)(k-s+1)/(n-s) < r_star - s; nullopt when none exists.
std::optional<int64_t> max_admissible_shortening(int64_t n, int64_t k,
                                                 int64_t r_star);

struct HeuristicConditions {
  int64_t d_gv = 0;
  int64_t d_gv_dual = 0;
  bool cond1 = false;  // d_gv > k+1 - k(k+1)/n
  bool cond2 = false;  // d_gv_dual > k(k+1)/n
  double margin1 = 0;
  double margin2 = 0;
};

HeuristicConditions heuristic_conditions(uint64_t q, int64_t n_s, int64_t k_s);

struct ComplexityEstimate {
  double log2_kappa = 0;
  std::vector<std::pair<uint32_t, double>> term_log2;  // (i, log2 of term)
  uint32_t dominating_index = 0;
  double omega = 2.372;
  bool heuristic_unsupported = false;  // cond2 failed; value parenthesized
};

ComplexityEstimate kappa_estimate(int64_t n_s, int64_t k_s,
                                  double omega = 2.372);

// Leading exponent of the asymptotic complexity:
//   omega R^2/(1-R) (log_q log_q n)^3 / (log_q n)^2 * n.
double asymptotic_exponent(uint64_t q, double rate, double n,
                           double omega = 2.372);

struct Calibration {
  std::vector<size_t> beta_star;  // consensus per degree, from r = 2
  bool consensus = true;
  std::vector<size_t> beta_min, beta_max;  // when consensus fails
  std::optional<uint32_t> r_max;
  size_t samples = 0;
};

// Strands of `samples` random (s-shortened) family members; the consensus
// values per degree. Each sample draws from an rng stream derived from
// (rng, sample index).
Calibration calibrate(const FamilySpec& spec, size_t samples, uint32_t max_degree,
                      size_t s, Rng& rng,
                      const syzygy::StrandOptions& opt = {});

enum class Decision { special, random, indistinguishable };

struct DistinguisherConfig {
  uint32_t r = 0;                   // degree used by the basic test
  std::optional<size_t> beta_star;  // reference value at that degree
  size_t s = 0;                     // shortening order (shortened mode)
  uint32_t r_star = 0;              // r used = r_star - s in shortened mode
  bool shortened = false;
  uint64_t seed = 0;                // drives the shortening positions
  syzygy::StrandOptions strand;
};

struct Verdict {
  Decision decision = Decision::random;
  size_t beta = 0;          // computed beta_{r-1,r}
  uint32_t degree = 0;      // the r it was computed at
  size_t threshold = 0;     // reference beta_star used (0 = positivity test)
  HeuristicConditions conditions;
  std::vector<std::string> warnings;
};

Verdict classify(const LinearCode& c, const DistinguisherConfig& cfg);

struct McElieceParamSet {
  int64_t n = 0, m = 0, t = 0;
  int64_t k = 0;        // mt
  int64_t r_star = 0;   // f-hat
  int64_t s = 0;
  int64_t n_s = 0, k_s = 0;
  double ratio = 0;     // k_s(k_s+1)/n_s
  int64_t d_gv = 0, d_gv_dual = 0;
  bool cond1 = false, cond2 = false;
  double log2_kappa = 0;
  bool parenthesized = false;  // cond2 violated
};

McElieceParamSet audit_one(int64_t n, int64_t m, int64_t t);

// The five Classic McEliece parameter sets.
std::vector<McElieceParamSet> mceliece_audit();

// Primal-side baseline: declares Goppa iff d_min >= 2t+1.
Verdict distance_distinguisher(const LinearCode& c, uint32_t t);

}  // namespace syzkit::dist
