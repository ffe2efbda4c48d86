#include "syzkit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace syzkit::bounds {

ENParams alternant_en_params(uint64_t q, uint32_t t) {
  if (t < 2) throw std::invalid_argument("alternant_en_params: t < 2");
  ENParams p;
  p.q = q;
  p.t = t;
  uint32_t e = 0;
  mpz_class qe = 1;
  while (qe * static_cast<long>(q) <= t - 1) {
    qe *= static_cast<long>(q);
    ++e;
  }
  p.e = e;
  mpz_class qpow = 1;
  for (uint32_t i = 0; i <= e; ++i) qpow *= static_cast<long>(q);
  mpz_class geo = (qpow - 1) / static_cast<long>(q - 1);
  mpz_class f = mpz_class(e + 1) * t - geo;
  p.f = f.get_si();
  return p;
}

GoppaENParams goppa_en_params(uint32_t t) {
  if (t < 1) throw std::invalid_argument("goppa_en_params: t < 1");
  GoppaENParams p;
  p.t = t;
  uint32_t e = 0;
  uint64_t pow4 = 1;
  while (pow4 * 4 <= 2ull * t - 1) {
    pow4 *= 4;
    ++e;
  }
  p.e_hat = e;
  uint64_t pow4e1 = pow4 * 4;
  p.f_hat = static_cast<int64_t>((2ull * e + 2) * t - (pow4e1 - 1) / 3);
  return p;
}

mpz_class en_strand_bound(int64_t f, int64_t s, uint32_t r, uint32_t mult) {
  if (r < 1) return 0;
  if (f - s < 0) return 0;
  return mpz_class(mult) * (r - 1) *
         binom_mpz(static_cast<uint64_t>(f - s), static_cast<int64_t>(r));
}

mpz_class improved_alternant_bound(uint32_t m, uint64_t q, uint32_t t,
                                   uint32_t r) {
  if (r < 2) return 0;
  ENParams p = alternant_en_params(q, t);
  mpz_class inner = binom_mpz(static_cast<uint64_t>(p.f), r);
  int64_t reduced = p.f - (static_cast<int64_t>(t) - 1);
  if (reduced >= 0) inner -= binom_mpz(static_cast<uint64_t>(reduced), r);
  return mpz_class(m) * (r - 1) * inner;
}

PhiMatrix build_phi(const SupportMultiplier& sm, uint64_t q, uint32_t t,
                    uint32_t m) {
  sm.validate();
  ENParams p = alternant_en_params(q, t);
  PhiMatrix phi;
  phi.q = q;
  phi.t = t;
  phi.m = m;
  phi.e = p.e;
  phi.f = p.f;
  phi.big_field = sm.field;

  uint64_t qu = 1;
  for (uint32_t u = 0; u <= p.e; ++u) {
    size_t width = t - static_cast<size_t>(qu);
    phi.block_widths.push_back(width);
    uint32_t level = p.e - u;
    for (size_t j = 0; j < width; ++j)
      phi.columns.push_back({level * t + static_cast<uint32_t>(j),
                             level * t + static_cast<uint32_t>(j + qu)});
    qu *= q;
  }
  if (static_cast<int64_t>(phi.columns.size()) != p.f)
    throw std::logic_error("phi column count mismatch");

  // Evaluations (y x^a)^{q^u} for levels 0..e.
  const gf::Field& big = sm.field;
  size_t n = sm.length();
  phi.var_eval.assign(static_cast<size_t>(p.e + 1) * t, {});
  std::vector<uint32_t> base = sm.multiplier;  // y x^0
  for (uint32_t a = 0; a < t; ++a) {
    for (uint32_t u = 0; u <= p.e; ++u) {
      auto& v = phi.var_eval[static_cast<size_t>(u) * t + a];
      v.resize(n);
      for (size_t i = 0; i < n; ++i) v[i] = big.frobenius(base[i], q, u);
    }
    if (a + 1 < t)
      for (size_t i = 0; i < n; ++i) base[i] = big.mul(base[i], sm.support[i]);
  }
  return phi;
}

bool PhiMatrix::columns_independent() const {
  size_t nvars = static_cast<size_t>(e + 1) * t;
  MatrixFq m2(big_field, columns.size(), 2 * nvars);
  for (size_t c = 0; c < columns.size(); ++c) {
    m2.set(c, columns[c].top_var, 1);
    m2.set(c, nvars + columns[c].bottom_var, 1);
  }
  return linalg::rank_of(m2) == columns.size();
}

bool verify_minors_vanish(const PhiMatrix& phi) {
  const gf::Field& f = phi.big_field;
  size_t n = phi.var_eval.empty() ? 0 : phi.var_eval[0].size();
  for (size_t i = 0; i < phi.columns.size(); ++i)
    for (size_t j = i + 1; j < phi.columns.size(); ++j) {
      const auto& ti = phi.var_eval[phi.columns[i].top_var];
      const auto& bi = phi.var_eval[phi.columns[i].bottom_var];
      const auto& tj = phi.var_eval[phi.columns[j].top_var];
      const auto& bj = phi.var_eval[phi.columns[j].bottom_var];
      for (size_t pos = 0; pos < n; ++pos)
        if (f.mul(ti[pos], bj[pos]) != f.mul(tj[pos], bi[pos])) return false;
    }
  return true;
}

mpz_class en_family_size(int64_t f, uint32_t r) {
  if (r < 2) return 0;
  return mpz_class(r - 1) * binom_mpz(static_cast<uint64_t>(f), r);
}

namespace {

using Combo = std::vector<uint32_t>;

void for_each_combo(size_t f, uint32_t r,
                    const std::function<void(const Combo&)>& fn) {
  Combo c(r);
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t start,
                                                    uint32_t depth) {
    if (depth == r) {
      fn(c);
      return;
    }
    for (uint32_t i = start; i + (r - depth) <= f; ++i) {
      c[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

Combo erase_at(const Combo& c, size_t pos) {
  Combo out;
  out.reserve(c.size() - 1);
  for (size_t i = 0; i < c.size(); ++i)
    if (i != pos) out.push_back(c[i]);
  return out;
}

}  // namespace

bool verify_en_syzygies(size_t f, uint32_t r, const gf::Field& field,
                        uint32_t trials, Rng& rng) {
  if (r < 3) throw std::invalid_argument("verify_en_syzygies: r < 3");
  if (r > f) return true;  // empty family
  for (uint32_t trial = 0; trial < trials; ++trial) {
    std::vector<uint32_t> x(f), xp(f);
    for (size_t i = 0; i < f; ++i) {
      x[i] = static_cast<uint32_t>(rng.below(field.order()));
      xp[i] = static_cast<uint32_t>(rng.below(field.order()));
    }
    auto minor2 = [&](const Combo& c) {
      return field.sub(field.mul(x[c[0]], xp[c[1]]),
                       field.mul(xp[c[0]], x[c[1]]));
    };
    bool ok = true;
    for_each_combo(f, r, [&](const Combo& idx) {
      if (!ok) return;
      for (uint32_t j = 1; j <= r - 1 && ok; ++j) {
        // Compose s^{(j)}_{r;idx} with the degree r-1 family; the result is a
        // combination of degree r-2 symbols (a plain field value when r = 3)
        // and must vanish.
        uint32_t scalar_acc = 0;
        std::map<std::pair<uint32_t, Combo>, uint32_t> acc;
        for (uint32_t u = 0; u < r; ++u) {
          Combo inner = erase_at(idx, u);
          bool neg_u = u % 2;
          struct Term {
            uint32_t coef;
            int level;
          } terms[2] = {{x[idx[u]], static_cast<int>(j)},
                        {xp[idx[u]], static_cast<int>(j) - 1}};
          for (const Term& tm : terms) {
            if (tm.level < 1 || tm.level > static_cast<int>(r) - 2) continue;
            if (r == 3) {
              uint32_t v = field.mul(tm.coef, minor2(inner));
              scalar_acc =
                  neg_u ? field.sub(scalar_acc, v) : field.add(scalar_acc, v);
              continue;
            }
            for (uint32_t w = 0; w < r - 1; ++w) {
              Combo leaf = erase_at(inner, w);
              bool neg = neg_u ^ (w % 2 == 1);
              struct Sub {
                uint32_t coef;
                int level;
              } subs[2] = {{x[inner[w]], tm.level},
                          {xp[inner[w]], tm.level - 1}};
              for (const Sub& sb : subs) {
                if (sb.level < 1 || sb.level > static_cast<int>(r) - 3)
                  continue;
                uint32_t v = field.mul(tm.coef, sb.coef);
                auto key =
                    std::make_pair(static_cast<uint32_t>(sb.level), leaf);
                uint32_t& slot = acc[key];
                slot = neg ? field.sub(slot, v) : field.add(slot, v);
              }
            }
          }
        }
        if (r == 3) {
          if (scalar_acc != 0) ok = false;
        } else {
          for (const auto& [key, v] : acc) {
            (void)key;
            if (v != 0) {
              ok = false;
              break;
            }
          }
        }
      }
    });
    if (!ok) return false;
  }
  return true;
}

const char* const kGvConvention =
    "largest d with sum_{i<=d-1} C(n,i)(q-1)^i < q^(n-k)";

int64_t gv_distance(uint64_t q, uint64_t n, uint64_t k) {
  if (k > n) throw std::invalid_argument("gv_distance: k > n");
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(n - k));
  mpz_class sum = 0, term = 1;
  int64_t maxj = -1;
  for (uint64_t j = 0; j <= n; ++j) {
    sum += term;
    if (sum < bound)
      maxj = static_cast<int64_t>(j);
    else
      break;
    term *= static_cast<unsigned long>(n - j);
    term /= static_cast<unsigned long>(j + 1);
    term *= static_cast<unsigned long>(q - 1);
  }
  return std::max<int64_t>(maxj + 1, 1);
}

int64_t dual_gv_distance(uint64_t q, uint64_t n, uint64_t k) {
  return gv_distance(q, n, n - k);
}

double entropy_q(uint64_t q, double x) {
  if (x <= 0) return 0;
  double lq = std::log(static_cast<double>(q));
  double h = x * std::log(static_cast<double>(q - 1)) / lq;
  h -= x * std::log(x) / lq;
  if (x < 1) h -= (1 - x) * std::log(1 - x) / lq;
  return h;
}

double entropy_q_inv(uint64_t q, double y) {
  if (y <= 0) return 0;
  double hi = 1.0 - 1.0 / static_cast<double>(q);
  if (y >= 1) return hi;
  double lo = 0;
  for (int it = 0; it < 100; ++it) {
    double mid = (lo + hi) / 2;
    if (entropy_q(q, mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

namespace {

double bisect_root(const std::function<double(double)>& fn, double lo,
                   double hi) {
  double flo = fn(lo);
  for (int it = 0; it < 100; ++it) {
    double mid = (lo + hi) / 2;
    double fm = fn(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

double find_sign_change(const std::function<double(double)>& fn, double from,
                        double to, double step) {
  double prev = fn(from);
  for (double r = from + step; r <= to; r += step) {
    double cur = fn(r);
    if ((cur < 0) != (prev < 0)) return bisect_root(fn, r - step, r);
    prev = cur;
  }
  throw std::logic_error("no sign change found");
}

}  // namespace

ThresholdRates entropy_threshold_rates(uint64_t q) {
  if (q < 2) throw std::invalid_argument("entropy_threshold_rates: q < 2");
  ThresholdRates out;
  out.r1 = find_sign_change(
      [&](double r) { return entropy_q_inv(q, 1 - r) - r * (1 - r); }, 1e-6,
      1 - 1e-6, 0.01);
  out.r2 = find_sign_change(
      [&](double r) { return entropy_q_inv(q, r) - r * r; }, 1e-6, 1 - 1e-6,
      0.01);
  return out;
}

syzygy::BettiDiagram closed_form_diagram(DiagramKind kind, size_t k) {
  if (k < 3) throw std::invalid_argument("closed_form_diagram: k < 3");
  syzygy::BettiDiagram d;
  d.k = k;
  d.row1.assign(k - 1, 0);
  d.row2.assign(k - 1, 0);
  if (kind == DiagramKind::parity) {
    d.n = k + 1;
    for (size_t i = 1; i <= k - 1; ++i) {
      uint32_t r = static_cast<uint32_t>(i + 1);
      mpz_class v =
          mpz_class(r - 1) * (static_cast<long>(k) - r) * binom_mpz(k + 1, r);
      if (v % static_cast<long>(k) != 0)
        throw std::logic_error("parity diagram: non-integral entry");
      v /= static_cast<long>(k);
      d.row1[i - 1] = v.get_si();
    }
    d.row2[k - 2] = 1;  // beta_{k-1,k+1} = n - k
  } else {
    d.n = 2 * k - 1;
    for (size_t i = 1; i <= k - 1; ++i) {
      uint32_t r = static_cast<uint32_t>(i + 1);
      mpz_class v = mpz_class(r - 1) * binom_mpz(k - 1, r);
      d.row1[i - 1] = v.get_si();
    }
    for (size_t i = 1; i <= k - 1; ++i) {
      uint32_t r = static_cast<uint32_t>(i + 2);
      mpz_class v =
          mpz_class(r - 2) * binom_mpz(k - 1, static_cast<int64_t>(r) - 2);
      d.row2[i - 1] = v.get_si();
    }
  }
  return d;
}

}  // namespace syzkit::bounds
