#include "syzkit/distinguisher.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace syzkit::dist {

int64_t basic_threshold(size_t k, uint32_t r, const mpz_class& beta_star) {
  if (r < 2) throw std::invalid_argument("basic_threshold: r < 2");
  if (beta_star < 1) throw std::invalid_argument("basic_threshold: beta* < 1");
  // ceil( k(k+1)/r - (beta*-1)/binom(k-1,r-2) ), exact rational arithmetic.
  mpq_class val(mpz_class(static_cast<unsigned long>(k)) * (k + 1),
                mpz_class(r));
  mpz_class denom = binom_mpz(k - 1, static_cast<int64_t>(r) - 2);
  if (denom == 0) throw std::invalid_argument("basic_threshold: r > k+1");
  val -= mpq_class(beta_star - 1, denom);
  val.canonicalize();
  mpz_class num = val.get_num(), den = val.get_den();
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_si();
}

std::optional<int64_t> max_admissible_shortening(int64_t n, int64_t k,
                                                 int64_t r_star) {
  if (r_star < 2) throw std::invalid_argument("r_star < 2");
  int64_t s_hi = std::min({k - 2, r_star - 2, n - 1});
  for (int64_t s = s_hi; s >= 0; --s) {
    // (k-s)(k-s+1) < (r_star - s)(n - s), exact in 64 bits for our ranges
    mpz_class lhs = mpz_class(k - s) * (k - s + 1);
    mpz_class rhs = mpz_class(r_star - s) * (n - s);
    if (lhs < rhs) return s;
  }
  return std::nullopt;
}

HeuristicConditions heuristic_conditions(uint64_t q, int64_t n_s, int64_t k_s) {
  HeuristicConditions h;
  h.d_gv = bounds::gv_distance(q, n_s, k_s);
  h.d_gv_dual = bounds::gv_distance(q, n_s, n_s - k_s);
  // cond1: d > k+1 - k(k+1)/n  <=>  d n > (k+1) n - k(k+1)
  mpz_class lhs1 = mpz_class(h.d_gv) * n_s;
  mpz_class rhs1 = mpz_class(k_s + 1) * n_s - mpz_class(k_s) * (k_s + 1);
  h.cond1 = lhs1 > rhs1;
  // cond2: d_dual > k(k+1)/n  <=>  d_dual n > k(k+1)
  mpz_class lhs2 = mpz_class(h.d_gv_dual) * n_s;
  mpz_class rhs2 = mpz_class(k_s) * (k_s + 1);
  h.cond2 = lhs2 > rhs2;
  double ratio = static_cast<double>(k_s) * (k_s + 1) / n_s;
  h.margin1 = static_cast<double>(h.d_gv) - (k_s + 1 - ratio);
  h.margin2 = static_cast<double>(h.d_gv_dual) - ratio;
  return h;
}

namespace {

// log2 of ind(phi_j)^+ = ((k(k+1)/j - n) binom(k-1, j-2))^+, -inf when <= 0.
double log2_ind_pos(int64_t n, int64_t k, uint32_t j) {
  if (j < 2) return -HUGE_VAL;
  double head = static_cast<double>(k) * (k + 1) / j - static_cast<double>(n);
  if (head <= 0) return -HUGE_VAL;
  return std::log2(head) + log2_binom(static_cast<double>(k - 1),
                                      static_cast<double>(j) - 2);
}

}  // namespace

ComplexityEstimate kappa_estimate(int64_t n_s, int64_t k_s, double omega) {
  ComplexityEstimate est;
  est.omega = omega;
  HeuristicConditions h = heuristic_conditions(2, n_s, k_s);
  est.heuristic_unsupported = !h.cond2;

  int64_t imax =
      static_cast<int64_t>(static_cast<double>(k_s) * (k_s + 1) / n_s) + 1;
  double log2_k = std::log2(static_cast<double>(k_s));
  double log2_pairs =
      std::log2(static_cast<double>(k_s) * (k_s + 1) / 2.0);
  double best = -HUGE_VAL;
  for (int64_t i = 2; i <= imax; ++i) {
    double t1 = log2_k + log2_ind_pos(n_s, k_s, static_cast<uint32_t>(i - 1));
    double t2 =
        log2_pairs + log2_ind_pos(n_s, k_s, static_cast<uint32_t>(i - 2));
    double m = std::max(t1, t2);
    if (m == -HUGE_VAL) continue;
    double term = omega * m;
    est.term_log2.push_back({static_cast<uint32_t>(i), term});
    if (term > best) {
      best = term;
      est.dominating_index = static_cast<uint32_t>(i);
    }
  }
  if (est.term_log2.empty()) {
    est.log2_kappa = 0;
    return est;
  }
  // log2 of the sum of 2^term over terms.
  double acc = 0;
  for (const auto& [i, term] : est.term_log2) acc += std::exp2(term - best);
  est.log2_kappa = best + std::log2(acc);
  return est;
}

double asymptotic_exponent(uint64_t q, double rate, double n, double omega) {
  if (rate <= 0 || rate >= 1) throw std::invalid_argument("rate out of (0,1)");
  double lq = std::log(static_cast<double>(q));
  double logqn = std::log(n) / lq;
  double loglogqn = std::log(logqn) / lq;
  return omega * rate * rate / (1 - rate) * loglogqn * loglogqn * loglogqn /
         (logqn * logqn) * n;
}

Calibration calibrate(const FamilySpec& spec, size_t samples,
                      uint32_t max_degree, size_t s, Rng& rng,
                      const syzygy::StrandOptions& opt) {
  Calibration cal;
  cal.samples = samples;
  syzygy::StrandOptions so = opt;
  so.max_degree = max_degree;
  for (size_t i = 0; i < samples; ++i) {
    Rng stream = rng.derive(i);
    codes::FamilySample fs = codes::sample_family(spec, stream);
    LinearCode c = fs.code;
    if (s) {
      std::vector<size_t> pos = stream.sample_distinct(c.length(), s);
      c = codes::shorten(c, pos);
    }
    syzygy::StrandResult res = syzygy::linear_strand(c, so);
    if (res.strand.refusal)
      throw std::runtime_error("calibrate: " + *res.strand.refusal);
    const auto& beta = res.strand.beta;
    if (i == 0) {
      cal.beta_star = beta;
      cal.beta_min = beta;
      cal.beta_max = beta;
      cal.r_max = res.strand.r_max();
    } else {
      size_t len = std::max(cal.beta_star.size(), beta.size());
      cal.beta_star.resize(len, 0);
      cal.beta_min.resize(len, 0);
      cal.beta_max.resize(len, 0);
      std::vector<size_t> b = beta;
      b.resize(len, 0);
      for (size_t j = 0; j < len; ++j) {
        if (b[j] != cal.beta_star[j]) cal.consensus = false;
        cal.beta_min[j] = std::min(cal.beta_min[j], b[j]);
        cal.beta_max[j] = std::max(cal.beta_max[j], b[j]);
      }
      if (res.strand.r_max() != cal.r_max) cal.consensus = false;
    }
  }
  return cal;
}

Verdict classify(const LinearCode& c, const DistinguisherConfig& cfg) {
  Verdict v;
  LinearCode target = c;
  uint32_t r;
  if (cfg.shortened) {
    if (cfg.r_star < 2) throw std::invalid_argument("classify: r_star < 2");
    if (cfg.s + 2 > cfg.r_star)
      throw std::invalid_argument("classify: s leaves degree below 2");
    r = cfg.r_star - static_cast<uint32_t>(cfg.s);
    if (cfg.s) {
      Rng rng(cfg.seed);
      std::vector<size_t> pos = rng.sample_distinct(c.length(), cfg.s);
      target = codes::shorten(c, pos);
    }
  } else {
    if (cfg.r < 2) throw std::invalid_argument("classify: r < 2");
    r = cfg.r;
  }
  v.degree = r;
  v.conditions =
      heuristic_conditions(c.field().order(), target.length(), target.dim());
  if (!v.conditions.cond1)
    v.warnings.push_back("heuristic condition 1 (distance) not satisfied");
  if (!v.conditions.cond2)
    v.warnings.push_back("heuristic condition 2 (dual distance) not satisfied");

  syzygy::StrandOptions so = cfg.strand;
  so.max_degree = r;
  syzygy::StrandResult res = syzygy::linear_strand(target, so);
  if (res.strand.refusal)
    throw std::runtime_error("classify: " + *res.strand.refusal);
  v.beta = res.strand.beta_at(r);

  if (cfg.beta_star) {
    v.threshold = *cfg.beta_star;
    // When the heuristic predicts random codes at or above beta_star, the
    // degree does not separate the classes.
    mpz_class ind = syzygy::phi_index_mpz(target.length(), target.dim(), r);
    if (ind >= static_cast<long>(*cfg.beta_star)) {
      v.decision = Decision::indistinguishable;
      v.warnings.push_back("expected random value reaches beta*");
    } else {
      v.decision =
          v.beta >= *cfg.beta_star ? Decision::special : Decision::random;
    }
  } else {
    v.decision = v.beta > 0 ? Decision::special : Decision::random;
  }
  return v;
}

McElieceParamSet audit_one(int64_t n, int64_t m, int64_t t) {
  McElieceParamSet p;
  p.n = n;
  p.m = m;
  p.t = t;
  p.k = m * t;
  p.r_star = bounds::goppa_en_params(static_cast<uint32_t>(t)).f_hat;
  auto s = max_admissible_shortening(n, p.k, p.r_star);
  if (!s) throw std::runtime_error("audit: no admissible shortening");
  p.s = *s;
  p.n_s = n - p.s;
  p.k_s = p.k - p.s;
  p.ratio = static_cast<double>(p.k_s) * (p.k_s + 1) / p.n_s;
  HeuristicConditions h = heuristic_conditions(2, p.n_s, p.k_s);
  p.d_gv = h.d_gv;
  p.d_gv_dual = h.d_gv_dual;
  p.cond1 = h.cond1;
  p.cond2 = h.cond2;
  ComplexityEstimate est = kappa_estimate(p.n_s, p.k_s);
  p.log2_kappa = est.log2_kappa;
  p.parenthesized = est.heuristic_unsupported;
  return p;
}

std::vector<McElieceParamSet> mceliece_audit() {
  static const int64_t sets[5][3] = {{3488, 12, 64},
                                     {4608, 13, 96},
                                     {6688, 13, 128},
                                     {6960, 13, 119},
                                     {8192, 13, 128}};
  std::vector<McElieceParamSet> out;
  for (const auto& s : sets) out.push_back(audit_one(s[0], s[1], s[2]));
  return out;
}

Verdict distance_distinguisher(const LinearCode& c, uint32_t t) {
  Verdict v;
  v.degree = 0;
  size_t designed = 2 * static_cast<size_t>(t) + 1;
  size_t d = codes::min_distance(c);
  v.beta = d;
  v.threshold = designed;
  v.decision = d >= designed ? Decision::special : Decision::random;
  return v;
}

}  // namespace syzkit::dist
