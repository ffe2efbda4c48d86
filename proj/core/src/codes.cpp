#include "syzkit/codes.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace syzkit::codes {

using linalg::rank_of;
using linalg::rref;
using linalg::RrefResult;

LinearCode::LinearCode(const MatrixFq& generator, bool allow_redimension) {
  RrefResult r = rref(generator);
  if (r.rank < generator.rows() && !allow_redimension)
    throw std::invalid_argument("rank-deficient generator");
  gen_ = MatrixFq(generator.field(), r.rank, generator.cols(),
                  generator.storage());
  for (size_t i = 0; i < r.rank; ++i)
    for (size_t j = 0; j < generator.cols(); ++j) {
      uint32_t v = r.matrix.get(i, j);
      if (v) gen_.set(i, j, v);
    }
}

void SupportMultiplier::validate() const {
  if (support.size() != multiplier.size())
    throw std::invalid_argument("support/multiplier length mismatch");
  std::set<uint32_t> seen;
  for (uint32_t x : support)
    if (!seen.insert(x).second)
      throw std::invalid_argument("repeated support entry");
  for (uint32_t y : multiplier)
    if (y == 0) throw std::invalid_argument("zero multiplier entry");
}

size_t FamilySpec::effective_n() const {
  if (n) return n;
  uint64_t qm = 1;
  for (uint32_t i = 0; i < m; ++i) qm *= q;
  return static_cast<size_t>(qm);
}

void FamilySpec::validate() const {
  uint64_t qm = 1;
  for (uint32_t i = 0; i < m; ++i) {
    qm *= q;
    if (qm > (1ULL << 20)) throw std::invalid_argument("q^m above 2^20");
  }
  size_t nn = effective_n();
  if (nn > qm) throw std::invalid_argument("n exceeds q^m");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (static_cast<uint64_t>(m) * t > nn)
    throw std::invalid_argument("mt exceeds n");
}

std::string FamilySpec::name() const {
  std::ostringstream os;
  if (family == CodeFamily::alt_dual) {
    os << "alt-dual";
  } else {
    os << "goppa-dual";
    switch (mode) {
      case GoppaMode::irr: os << "-irr"; break;
      case GoppaMode::sqfr: os << "-sqfr"; break;
      case GoppaMode::any: break;
    }
  }
  os << " q=" << q << " m=" << m << " n=" << effective_n() << " t=" << t;
  return os.str();
}

LinearCode grs_code(const SupportMultiplier& sm, size_t k) {
  sm.validate();
  size_t n = sm.length();
  if (k > n) throw std::invalid_argument("grs_code: k > n");
  const gf::Field& f = sm.field;
  MatrixFq g(f, k, n);
  std::vector<uint32_t> row = sm.multiplier;  // y * x^0
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < n; ++j) g.set(i, j, row[j]);
    if (i + 1 < k)
      for (size_t j = 0; j < n; ++j) row[j] = f.mul(row[j], sm.support[j]);
  }
  return LinearCode(g);
}

DualResult dual_alternant_code(const SupportMultiplier& sm, uint32_t t,
                               const gf::SubfieldEmbedding& emb) {
  sm.validate();
  if (!emb.big().same_as(sm.field))
    throw std::invalid_argument("embedding/support field mismatch");
  size_t n = sm.length();
  uint32_t m = emb.m();
  if (static_cast<uint64_t>(m) * t > n)
    throw std::invalid_argument("mt exceeds n");
  const gf::Field& big = emb.big();

  // Delsarte: expand the t parity rows y x^j over the subfield basis.
  MatrixFq g(emb.small(), static_cast<size_t>(m) * t, n);
  std::vector<uint32_t> row = sm.multiplier;
  for (uint32_t j = 0; j < t; ++j) {
    for (size_t col = 0; col < n; ++col) {
      std::vector<uint32_t> coords = emb.expand(row[col]);
      for (uint32_t u = 0; u < m; ++u)
        if (coords[u]) g.set(static_cast<size_t>(j) * m + u, col, coords[u]);
    }
    if (j + 1 < t)
      for (size_t col = 0; col < n; ++col)
        row[col] = big.mul(row[col], sm.support[col]);
  }
  LinearCode code(g, /*allow_redimension=*/true);
  return {code, code.dim() == static_cast<size_t>(m) * t};
}

DualResult dual_goppa_code(const std::vector<uint32_t>& support,
                           const gf::Poly& goppa_poly,
                           const gf::SubfieldEmbedding& emb) {
  const gf::Field& big = emb.big();
  if (!goppa_poly.field().same_as(big))
    throw std::invalid_argument("goppa polynomial field mismatch");
  SupportMultiplier sm{big, support, {}};
  sm.multiplier.resize(support.size());
  for (size_t i = 0; i < support.size(); ++i) {
    uint32_t gx = goppa_poly.eval(support[i]);
    if (gx == 0) throw std::invalid_argument("root in support");
    sm.multiplier[i] = big.inv(gx);
  }
  return dual_alternant_code(sm, static_cast<uint32_t>(goppa_poly.degree()),
                             emb);
}

SupportMultiplier random_support_multiplier(const gf::Field& big, size_t n,
                                            Rng& rng) {
  uint64_t qm = big.order();
  if (n > qm) throw std::invalid_argument("support longer than field");
  // Fisher-Yates over all field elements, keep the first n.
  std::vector<uint32_t> all(qm);
  std::iota(all.begin(), all.end(), 0u);
  for (size_t i = 0; i < n; ++i) {
    size_t j = i + static_cast<size_t>(rng.below(qm - i));
    std::swap(all[i], all[j]);
  }
  SupportMultiplier sm{big, {all.begin(), all.begin() + n}, {}};
  sm.multiplier.resize(n);
  for (auto& y : sm.multiplier)
    y = 1 + static_cast<uint32_t>(rng.below(qm - 1));
  return sm;
}

FamilySample sample_family(const FamilySpec& spec, Rng& rng) {
  spec.validate();
  gf::Field small = linalg::field_of_order(spec.q);
  gf::Field big =
      gf::make_field(small.p(), small.degree() * spec.m);
  gf::SubfieldEmbedding emb(small, big);
  size_t n = spec.effective_n();

  size_t retries = 0;
  for (;;) {
    DualResult res;
    if (spec.family == CodeFamily::alt_dual) {
      SupportMultiplier sm = random_support_multiplier(big, n, rng);
      res = dual_alternant_code(sm, spec.t, emb);
    } else {
      SupportMultiplier sm = random_support_multiplier(big, n, rng);
      gf::Poly g;
      switch (spec.mode) {
        case GoppaMode::irr:
          g = gf::find_irreducible(big, spec.t, gf::PolyMode::irreducible, rng);
          break;
        case GoppaMode::sqfr:
          g = gf::find_irreducible(big, spec.t, gf::PolyMode::squarefree, rng);
          break;
        case GoppaMode::any: {
          std::vector<uint32_t> c(spec.t + 1);
          for (uint32_t i = 0; i < spec.t; ++i)
            c[i] = static_cast<uint32_t>(rng.below(big.order()));
          c[spec.t] = 1;
          g = gf::Poly(big, std::move(c));
          break;
        }
      }
      bool has_root = false;
      for (uint32_t x : sm.support)
        if (g.eval(x) == 0) {
          has_root = true;
          break;
        }
      if (has_root) {
        ++retries;
        continue;
      }
      res = dual_goppa_code(sm.support, g, emb);
    }
    if (res.proper) return {res.code, retries};
    ++retries;
    if (retries > 10000)
      throw std::runtime_error("sample_family: proper draw cap exceeded");
  }
}

LinearCode dual(const LinearCode& c) {
  MatrixFq h = linalg::left_kernel_basis(c.generator().transposed());
  return LinearCode(h, /*allow_redimension=*/true);
}

LinearCode shorten(const LinearCode& c, const std::vector<size_t>& positions) {
  size_t n = c.length();
  std::vector<uint8_t> in_s(n, 0);
  for (size_t p : positions) {
    if (p >= n) throw std::invalid_argument("shorten: position out of range");
    in_s[p] = 1;
  }
  std::vector<size_t> order, rest;
  for (size_t j = 0; j < n; ++j)
    if (in_s[j]) order.push_back(j);
  size_t s = order.size();
  for (size_t j = 0; j < n; ++j)
    if (!in_s[j]) {
      order.push_back(j);
      rest.push_back(j);
    }
  // RREF with the shortened positions first; rows with pivots there are
  // exactly the ones not vanishing on S.
  RrefResult r = rref(c.generator().select_columns(order));
  std::vector<size_t> keep_rows;
  for (size_t i = 0; i < r.rank; ++i)
    if (r.pivots[i] >= s) keep_rows.push_back(i);
  std::vector<size_t> tail(rest.size());
  std::iota(tail.begin(), tail.end(), s);
  MatrixFq g = r.matrix.select_rows(keep_rows).select_columns(tail);
  return LinearCode(g, /*allow_redimension=*/true);
}

LinearCode puncture(const LinearCode& c, const std::vector<size_t>& positions) {
  size_t n = c.length();
  std::vector<uint8_t> drop(n, 0);
  for (size_t p : positions) {
    if (p >= n) throw std::invalid_argument("puncture: position out of range");
    drop[p] = 1;
  }
  std::vector<size_t> keep;
  for (size_t j = 0; j < n; ++j)
    if (!drop[j]) keep.push_back(j);
  return LinearCode(c.generator().select_columns(keep),
                    /*allow_redimension=*/true);
}

namespace {

constexpr uint64_t kEnumLimit = 1ULL << 24;

size_t min_distance_gf2(const LinearCode& c) {
  size_t k = c.dim(), n = c.length();
  size_t words = (n + 63) / 64;
  std::vector<uint64_t> rows(k * words, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j)
      if (c.generator().get(i, j)) rows[i * words + (j >> 6)] |= uint64_t{1} << (j & 63);
  std::vector<uint64_t> cw(words, 0);
  size_t best = n + 1;
  uint64_t total = uint64_t{1} << k;
  for (uint64_t i = 1; i < total; ++i) {
    size_t bit = static_cast<size_t>(std::countr_zero(i));
    const uint64_t* rp = rows.data() + bit * words;
    size_t weight = 0;
    for (size_t w = 0; w < words; ++w) {
      cw[w] ^= rp[w];
      weight += static_cast<size_t>(std::popcount(cw[w]));
    }
    if (weight < best) best = weight;
  }
  return best;
}

size_t min_distance_generic(const LinearCode& c) {
  size_t k = c.dim(), n = c.length();
  const gf::Field& f = c.field();
  uint64_t q = f.order();
  // Scaled generator rows, so stepping one message digit is one vector add.
  std::vector<std::vector<uint32_t>> scaled(k * q);
  for (size_t i = 0; i < k; ++i)
    for (uint64_t s = 0; s < q; ++s) {
      auto& v = scaled[i * q + s];
      v.resize(n);
      for (size_t j = 0; j < n; ++j)
        v[j] = f.mul(static_cast<uint32_t>(s), c.generator().get(i, j));
    }
  std::vector<uint32_t> msg(k, 0);
  std::vector<uint32_t> cw(n, 0);
  size_t best = n + 1;
  for (;;) {
    // odometer increment
    size_t pos = 0;
    while (pos < k && msg[pos] == q - 1) {
      // subtract (q-1) * row[pos]: equivalently add row scaled by 1 (since
      // going q-1 -> 0 subtracts (q-1)x = adds x in char p | q)
      const auto& v = scaled[pos * q + (q - 1)];
      for (size_t j = 0; j < n; ++j) cw[j] = f.sub(cw[j], v[j]);
      msg[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    const auto& v = scaled[pos * q + 1];
    for (size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], v[j]);
    ++msg[pos];
    size_t weight = 0;
    for (size_t j = 0; j < n; ++j) weight += cw[j] != 0;
    if (weight < best) best = weight;
  }
  return best;
}

// Minimal w <= limit with some w columns of g linearly dependent; 0 if none.
// count (optional) receives the number of dependent w-subsets at the minimal
// w, i.e. the number of weight-w dual codewords up to scalar.
size_t min_dependent_columns(const MatrixFq& g, size_t limit, size_t* count) {
  size_t n = g.cols(), k = g.rows();
  const gf::Field& f = g.field();
  if (limit > n) limit = n;
  mpz_class work = binom_mpz(n, static_cast<int64_t>(limit));
  if (work > 300000000)
    throw std::invalid_argument("dependency search budget exceeded");

  if (f.order() == 2 && k <= 64) {
    std::vector<uint64_t> col(n);
    for (size_t j = 0; j < n; ++j) {
      uint64_t v = 0;
      for (size_t i = 0; i < k; ++i)
        if (g.get(i, j)) v |= uint64_t{1} << i;
      col[j] = v;
    }
    for (size_t w = 1; w <= limit; ++w) {
      size_t found = 0;
      // DFS over index-increasing subsets, all proper prefixes independent.
      std::vector<uint64_t> basis;  // reduced chosen columns
      std::vector<size_t> idx;
      auto reduce = [&](uint64_t v) {
        for (uint64_t b : basis) {
          uint64_t lead = b & (~b + 1);
          (void)lead;
          // reduce by leading bit: use highest bit of b
          int hb = 63 - std::countl_zero(b);
          if (v >> hb & 1) v ^= b;
        }
        return v;
      };
      std::function<void(size_t)> dfs = [&](size_t start) {
        size_t depth = idx.size();
        for (size_t j = start; j + (w - depth) <= n; ++j) {
          uint64_t red = reduce(col[j]);
          if (depth + 1 == w) {
            if (red == 0) {
              ++found;
              if (!count) return;  // existence is enough
            }
          } else if (red != 0) {
            basis.push_back(red);
            idx.push_back(j);
            dfs(j + 1);
            basis.pop_back();
            idx.pop_back();
            if (found && !count) return;
          }
        }
      };
      dfs(0);
      if (found) {
        if (count) *count = found;
        return w;
      }
    }
    return 0;
  }

  // Generic field: columns as vectors, echelon reduction per prefix.
  std::vector<std::vector<uint32_t>> col(n, std::vector<uint32_t>(k));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < k; ++i) col[j][i] = g.get(i, j);
  auto reduce_vec = [&](std::vector<uint32_t> v,
                        const std::vector<std::vector<uint32_t>>& basis) {
    for (const auto& b : basis) {
      size_t lead = 0;
      while (lead < k && b[lead] == 0) ++lead;
      if (lead < k && v[lead] != 0) {
        uint32_t c = f.mul(v[lead], f.inv(b[lead]));
        for (size_t i = lead; i < k; ++i) v[i] = f.sub(v[i], f.mul(c, b[i]));
      }
    }
    return v;
  };
  for (size_t w = 1; w <= limit; ++w) {
    size_t found = 0;
    std::vector<std::vector<uint32_t>> basis;
    std::function<void(size_t)> dfs = [&](size_t start) {
      size_t depth = basis.size();
      for (size_t j = start; j + (w - depth) <= n; ++j) {
        auto red = reduce_vec(col[j], basis);
        bool zero = std::all_of(red.begin(), red.end(),
                                [](uint32_t x) { return x == 0; });
        if (depth + 1 == w) {
          if (zero) {
            ++found;
            if (!count) return;
          }
        } else if (!zero) {
          basis.push_back(std::move(red));
          dfs(j + 1);
          basis.pop_back();
          if (found && !count) return;
        }
      }
    };
    dfs(0);
    if (found) {
      if (count) *count = found;
      return w;
    }
  }
  return 0;
}

}  // namespace

size_t min_distance(const LinearCode& c) {
  if (c.dim() == 0) throw std::invalid_argument("zero code has no distance");
  double bits = static_cast<double>(c.dim()) *
                std::log2(static_cast<double>(c.field().order()));
  if (bits > std::log2(static_cast<double>(kEnumLimit)))
    throw std::invalid_argument("instance too large for exact enumeration");
  if (c.field().order() == 2) return min_distance_gf2(c);
  return min_distance_generic(c);
}

DistanceResult min_distance_capped(const LinearCode& c, size_t cap) {
  if (cap < 2) throw std::invalid_argument("min_distance_capped: cap < 2");
  LinearCode h = dual(c);
  size_t found = min_dependent_columns(h.generator(), cap - 1, nullptr);
  if (found) return {found, true};
  return {cap, false};
}

std::vector<size_t> weight_counts(const LinearCode& c, size_t wmax) {
  size_t k = c.dim(), n = c.length();
  double bits = static_cast<double>(k) *
                std::log2(static_cast<double>(c.field().order()));
  if (bits > std::log2(static_cast<double>(kEnumLimit)))
    throw std::invalid_argument("instance too large for exact enumeration");
  std::vector<size_t> counts(wmax + 1, 0);
  if (c.field().order() == 2) {
    size_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(k * words, 0);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < n; ++j)
        if (c.generator().get(i, j))
          rows[i * words + (j >> 6)] |= uint64_t{1} << (j & 63);
    std::vector<uint64_t> cw(words, 0);
    uint64_t total = uint64_t{1} << k;
    for (uint64_t i = 1; i < total; ++i) {
      size_t bit = static_cast<size_t>(std::countr_zero(i));
      const uint64_t* rp = rows.data() + bit * words;
      size_t weight = 0;
      for (size_t w = 0; w < words; ++w) {
        cw[w] ^= rp[w];
        weight += static_cast<size_t>(std::popcount(cw[w]));
      }
      if (weight <= wmax) ++counts[weight];
    }
  } else {
    const gf::Field& f = c.field();
    uint64_t q = f.order();
    std::vector<uint32_t> msg(k, 0), cw(n, 0);
    for (;;) {
      size_t pos = 0;
      while (pos < k && msg[pos] == q - 1) {
        for (size_t j = 0; j < n; ++j)
          cw[j] = f.sub(cw[j], f.mul(static_cast<uint32_t>(q - 1),
                                     c.generator().get(pos, j)));
        msg[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
      for (size_t j = 0; j < n; ++j)
        cw[j] = f.add(cw[j], c.generator().get(pos, j));
      ++msg[pos];
      size_t weight = 0;
      for (size_t j = 0; j < n; ++j) weight += cw[j] != 0;
      if (weight <= wmax) ++counts[weight];
    }
  }
  return {counts.begin() + 1, counts.end()};
}

bool dual_distance_leq(const LinearCode& c, size_t w, size_t* count) {
  size_t found = min_dependent_columns(c.generator(), w, count);
  if (found != 0 && found != w && count)
    throw std::invalid_argument("count requested at non-minimal weight");
  return found != 0;
}

size_t dual_distance(const LinearCode& c, size_t limit) {
  return min_dependent_columns(c.generator(), limit, nullptr);
}

DistanceProfile distance_profile(const LinearCode& c, size_t dual_limit,
                                 size_t wmax) {
  DistanceProfile p;
  p.d = min_distance(c);
  p.d_dual = dual_distance(c, dual_limit);
  if (wmax) p.weight_counts = weight_counts(c, wmax);
  return p;
}

PowerDims power_dims(const LinearCode& c, uint32_t r_max) {
  size_t k = c.dim(), n = c.length();
  const gf::Field& f = c.field();
  PowerDims out;
  for (uint32_t r = 1; r <= r_max; ++r) {
    mpz_class rows_mpz = binom_mpz(k + r - 1, r);
    if (rows_mpz > (1 << 22))
      throw std::invalid_argument("power_dims budget exceeded");
    size_t rows = rows_mpz.get_ui();
    MatrixFq m(f, rows, n);
    // monomials = multisets i1 <= ... <= ir over the rows of G
    std::vector<uint32_t> prod(n);
    size_t next_row = 0;
    std::function<void(size_t, uint32_t)> rec = [&](size_t start, uint32_t depth) {
      if (depth == r) {
        for (size_t j = 0; j < n; ++j)
          if (prod[j]) m.set(next_row, j, prod[j]);
        ++next_row;
        return;
      }
      std::vector<uint32_t> saved = prod;
      for (size_t i = start; i < k; ++i) {
        for (size_t j = 0; j < n; ++j)
          prod[j] = f.mul(saved[j], c.generator().get(i, j));
        rec(i, depth + 1);
      }
      prod = saved;
    };
    std::fill(prod.begin(), prod.end(), 1u);
    rec(0, 0);
    size_t dim = rank_of(m);
    out.dims.push_back(dim);
    if (!out.regularity && dim == n) out.regularity = r;
    if (dim == n) break;
  }
  return out;
}

bool has_regularity_two(const LinearCode& c) {
  PowerDims pd = power_dims(c, 2);
  return pd.regularity && *pd.regularity <= 2;
}

LinearCode random_code(size_t n, size_t k, const gf::Field& f, Rng& rng) {
  if (k > n) throw std::invalid_argument("random_code: k > n");
  for (uint64_t tries = 0; tries < 1000000; ++tries) {
    MatrixFq g = linalg::random_matrix(f, k, n, rng);
    if (rank_of(g) == k) return LinearCode(g);
  }
  throw std::runtime_error("random_code: full-rank cap exceeded");
}

LinearCode random_code_conditioned(size_t n, size_t k, const gf::Field& f,
                                   size_t d, size_t d_dual, Rng& rng,
                                   uint64_t cap) {
  for (uint64_t tries = 0; tries < cap; ++tries) {
    LinearCode c = random_code(n, k, f, rng);
    // Cheap screen first: dual distance needs only subsets up to d_dual.
    size_t dd = dual_distance(c, d_dual);
    if (dd != d_dual) continue;
    if (min_distance(c) != d) continue;
    return c;
  }
  throw std::runtime_error("random_code_conditioned: rejection cap exceeded");
}

namespace {

// Lexicographically first monic degree-d divisor of x^N - 1 over f.
gf::Poly cyclic_generator(const gf::Field& f, size_t n, size_t d) {
  std::vector<uint32_t> xn(n + 1, 0);
  xn[0] = f.neg(1);
  xn[n] = 1;
  gf::Poly target(f, xn);
  uint64_t q = f.order();
  uint64_t total = 1;
  for (size_t i = 0; i < d; ++i) total *= q;
  std::vector<uint32_t> c(d + 1);
  c[d] = 1;
  for (uint64_t e = 0; e < total; ++e) {
    uint64_t t = e;
    for (size_t i = 0; i < d; ++i) {
      c[i] = static_cast<uint32_t>(t % q);
      t /= q;
    }
    if (c[0] == 0) continue;
    gf::Poly g(f, c);
    if ((target % g).is_zero() && gf::is_irreducible(g)) return g;
  }
  throw std::logic_error("no cyclic generator found");
}

LinearCode cyclic_code(const gf::Field& f, size_t n, const gf::Poly& g) {
  size_t d = static_cast<size_t>(g.degree());
  size_t k = n - d;
  MatrixFq gen(f, k, n);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j <= d; ++j)
      if (g.coeff(j)) gen.set(i, i + j, g.coeff(j));
  return LinearCode(gen);
}

}  // namespace

LinearCode hamming_7_4() {
  gf::Field f2 = gf::make_field(2, 1);
  return LinearCode(MatrixFq::from_rows(f2, {{1, 0, 0, 0, 1, 1, 0},
                                             {0, 1, 0, 0, 1, 0, 1},
                                             {0, 0, 1, 0, 0, 1, 1},
                                             {0, 0, 0, 1, 1, 1, 1}}));
}

LinearCode binary_golay() {
  gf::Field f2 = gf::make_field(2, 1);
  return cyclic_code(f2, 23, cyclic_generator(f2, 23, 11));
}

LinearCode ternary_golay() {
  gf::Field f3 = gf::make_field(3, 1);
  return cyclic_code(f3, 11, cyclic_generator(f3, 11, 5));
}

LinearCode parity_code(size_t k, const gf::Field& f) {
  MatrixFq g(f, k, k + 1);
  for (size_t i = 0; i < k; ++i) {
    g.set(i, i, 1);
    g.set(i, k, f.neg(1));
  }
  return LinearCode(g);
}

MatrixFq pi_matrix() {
  gf::Field f2 = gf::make_field(2, 1);
  std::vector<uint8_t> bits = pi_bits(276);
  MatrixFq g(f2, 12, 23);
  for (size_t i = 0; i < 12; ++i)
    for (size_t j = 0; j < 23; ++j)
      if (bits[i * 23 + j]) g.set(i, j, 1);
  return g;
}

LinearCode pi_code() { return LinearCode(pi_matrix()); }

void write_code_file(std::ostream& os, const LinearCode& c) {
  os << c.field().order() << ' ' << c.length() << ' ' << c.dim() << '\n';
  for (size_t i = 0; i < c.dim(); ++i) {
    for (size_t j = 0; j < c.length(); ++j) {
      if (j) os << ' ';
      os << c.generator().get(i, j);
    }
    os << '\n';
  }
}

LinearCode read_code_file(std::istream& is) {
  uint64_t q;
  size_t n, k;
  if (!(is >> q >> n >> k)) throw std::invalid_argument("bad code header");
  gf::Field f = linalg::field_of_order(q);
  MatrixFq g(f, k, n);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) {
      uint32_t v;
      if (!(is >> v)) throw std::invalid_argument("truncated code file");
      if (v >= q) throw std::invalid_argument("element encoding out of range");
      if (v) g.set(i, j, v);
    }
  return LinearCode(g, /*allow_redimension=*/true);
}

}  // namespace syzkit::codes
