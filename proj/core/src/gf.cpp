#include "syzkit/gf.hpp"

#include <algorithm>
#include <sstream>

namespace syzkit::gf {

namespace {

constexpr uint64_t kMaxOrder = 1ULL << 20;
constexpr uint64_t kTableLimit = 1ULL << 16;

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// --- GF(p)[X] helpers on raw coefficient vectors (low degree first) ---

void trim(std::vector<uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of u mod v over GF(p); v monic.
std::vector<uint32_t> pmod(std::vector<uint32_t> u, const std::vector<uint32_t>& v,
                           uint32_t p) {
  trim(u);
  int dv = static_cast<int>(v.size()) - 1;
  while (static_cast<int>(u.size()) - 1 >= dv) {
    uint32_t lead = u.back();
    int shift = static_cast<int>(u.size()) - 1 - dv;
    if (lead != 0) {
      for (int i = 0; i <= dv; ++i) {
        uint64_t t = static_cast<uint64_t>(v[i]) * lead % p;
        u[i + shift] = static_cast<uint32_t>((u[i + shift] + p - t) % p);
      }
    }
    u.pop_back();
    trim(u);
    if (static_cast<int>(u.size()) - 1 < dv) break;
  }
  return u;
}

bool irreducible_by_trial_division(const std::vector<uint32_t>& f, uint32_t p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  if (f[0] == 0) return false;  // divisible by X
  // All monic divisors of degree d <= deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    uint64_t count = ipow(p, static_cast<uint32_t>(d));
    std::vector<uint32_t> div(d + 1);
    div[d] = 1;
    for (uint64_t e = 0; e < count; ++e) {
      uint64_t t = e;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      if (pmod(f, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<uint32_t> factor_u64(uint64_t n) {
  std::vector<uint32_t> primes;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(static_cast<uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(static_cast<uint32_t>(n));
  return primes;
}

}  // namespace

namespace detail {

uint32_t FieldData::add(uint32_t x, uint32_t y) const {
  if (p == 2) return x ^ y;
  if (a == 1) return (x + y) % p;
  uint32_t r = 0, mul = 1;
  for (uint32_t i = 0; i < a; ++i) {
    uint32_t xd = x % p, yd = y % p;
    r += ((xd + yd) % p) * mul;
    x /= p;
    y /= p;
    mul *= p;
  }
  return r;
}

uint32_t FieldData::neg(uint32_t x) const {
  if (p == 2) return x;
  if (a == 1) return x == 0 ? 0 : p - x;
  uint32_t r = 0, mul = 1;
  for (uint32_t i = 0; i < a; ++i) {
    uint32_t xd = x % p;
    r += (xd == 0 ? 0 : p - xd) * mul;
    x /= p;
    mul *= p;
  }
  return r;
}

uint32_t FieldData::sub(uint32_t x, uint32_t y) const { return add(x, neg(y)); }

uint32_t FieldData::mul_raw(uint32_t x, uint32_t y) const {
  if (x == 0 || y == 0) return 0;
  if (p == 2) {
    // Carry-less multiply with interleaved reduction.
    uint64_t mod_bits = 0;
    for (uint32_t i = 0; i <= a; ++i)
      if (modulus[i]) mod_bits |= 1ULL << i;
    uint64_t acc = 0, xv = x;
    for (uint32_t yv = y; yv; yv >>= 1, xv <<= 1) {
      if (yv & 1) acc ^= xv;
    }
    for (int bit = 2 * static_cast<int>(a) - 2; bit >= static_cast<int>(a); --bit) {
      if (acc >> bit & 1) acc ^= mod_bits << (bit - a);
    }
    return static_cast<uint32_t>(acc);
  }
  if (a == 1) return static_cast<uint32_t>(static_cast<uint64_t>(x) * y % p);
  // Schoolbook convolution then reduction, digits base p.
  std::vector<uint32_t> xd(a), yd(a), prod(2 * a - 1, 0);
  for (uint32_t i = 0; i < a; ++i) {
    xd[i] = x % p;
    x /= p;
    yd[i] = y % p;
    y /= p;
  }
  for (uint32_t i = 0; i < a; ++i) {
    if (!xd[i]) continue;
    for (uint32_t j = 0; j < a; ++j)
      prod[i + j] = static_cast<uint32_t>(
          (prod[i + j] + static_cast<uint64_t>(xd[i]) * yd[j]) % p);
  }
  std::vector<uint32_t> rem = pmod(std::move(prod), modulus, p);
  uint32_t r = 0, mul = 1;
  for (uint32_t i = 0; i < a; ++i) {
    r += (i < rem.size() ? rem[i] : 0) * mul;
    mul *= p;
  }
  return r;
}

uint32_t FieldData::mul(uint32_t x, uint32_t y) const {
  if (x == 0 || y == 0) return 0;
  if (has_tables()) return exp_table[log_table[x] + log_table[y]];
  return mul_raw(x, y);
}

uint32_t FieldData::pow(uint32_t x, uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  uint64_t ord = q - 1;
  e %= ord;
  if (has_tables()) {
    uint64_t le = static_cast<uint64_t>(log_table[x]) * e % ord;
    return exp_table[le];
  }
  uint32_t r = 1, b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint32_t FieldData::inv(uint32_t x) const {
  if (x == 0) throw std::domain_error("division by zero");
  if (has_tables()) {
    uint32_t lx = log_table[x];
    return exp_table[(q - 1 - lx) % (q - 1)];
  }
  return pow(x, q - 2);
}

}  // namespace detail

bool Field::same_as(const Field& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->p == o.d_->p && d_->a == o.d_->a && d_->modulus == o.d_->modulus;
}

uint32_t Field::frobenius(uint32_t x, uint64_t q0, uint32_t i) const {
  // q0 must be a power of the characteristic.
  uint64_t t = q0;
  while (t > 1) {
    if (t % p() != 0) throw std::invalid_argument("frobenius: base not a power of p");
    t /= p();
  }
  if (x == 0) return 0;
  uint64_t ord = order() - 1;
  uint64_t e = 1 % ord;
  uint64_t b = q0 % ord;
  if (ord == 1) return x;  // GF(2)
  for (uint32_t j = 0; j < i; ++j) e = e * b % ord;
  // e == 0 means the true exponent is a multiple of ord: x^e = 1.
  return e == 0 ? 1u : pow(x, e);
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << p() << ' ' << degree();
  for (uint32_t c : modulus()) os << ' ' << c;
  return os.str();
}

Field Field::from_descriptor(const std::string& line) {
  std::istringstream is(line);
  uint32_t p, a;
  if (!(is >> p >> a)) throw std::invalid_argument("bad field descriptor");
  std::vector<uint32_t> mod(a + 1);
  for (auto& c : mod)
    if (!(is >> c)) throw std::invalid_argument("bad field descriptor");
  return make_field(p, a, mod);
}

Field make_field(uint32_t p, uint32_t a,
                 const std::optional<std::vector<uint32_t>>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (a < 1) throw std::invalid_argument("degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < a; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order above 2^20");
  }

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->a = a;
  d->q = q;

  if (modulus) {
    auto m = *modulus;
    trim(m);
    if (m.size() != a + 1 || m.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree a");
    for (uint32_t c : m)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!irreducible_by_trial_division(m, p))
      throw std::invalid_argument("reducible modulus");
    d->modulus = std::move(m);
  } else if (a == 1) {
    d->modulus = {0, 1};  // X
  } else {
    // Lexicographically smallest monic irreducible, scanning (c_0, ..., c_{a-1})
    // in dictionary order with c_0 most significant. c_0 = 0 gives an X factor,
    // so start each scan position accordingly.
    std::vector<uint32_t> f(a + 1, 0);
    f[a] = 1;
    uint64_t total = q;
    bool found = false;
    for (uint64_t e = 0; e < total && !found; ++e) {
      uint64_t t = e;
      for (int i = static_cast<int>(a) - 1; i >= 0; --i) {
        f[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      if (f[0] == 0) continue;
      if (irreducible_by_trial_division(f, p)) found = true;
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
    d->modulus = f;
  }

  // Smallest primitive element; needed both for the tables and to locate
  // subfields deterministically.
  if (q == 2) {
    d->generator = 1;
  } else {
    auto primes = factor_u64(q - 1);
    for (uint32_t g = 2; g < q; ++g) {
      bool ok = true;
      for (uint32_t ell : primes) {
        // pow without tables
        uint64_t e = (q - 1) / ell;
        uint32_t r = 1, b = g;
        while (e) {
          if (e & 1) r = d->mul_raw(r, b);
          b = d->mul_raw(b, b);
          e >>= 1;
        }
        if (r == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        d->generator = g;
        break;
      }
    }
    if (d->generator == 0) throw std::logic_error("no primitive element found");
  }

  if (q <= kTableLimit) {
    d->exp_table.resize(2 * (q - 1));
    d->log_table.assign(q, 0);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
      d->exp_table[i] = cur;
      d->exp_table[i + (q - 1)] = cur;
      d->log_table[cur] = static_cast<uint32_t>(i);
      cur = d->mul_raw(cur, d->generator);
    }
  }

  Field f;
  f.d_ = std::move(d);
  return f;
}

SubfieldEmbedding::SubfieldEmbedding(Field small, Field big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_.p() != big_.p())
    throw std::invalid_argument("embedding: characteristic mismatch");
  if (big_.degree() % small_.degree() != 0)
    throw std::invalid_argument("embedding: small degree does not divide big degree");
  m_ = big_.degree() / small_.degree();
  uint32_t p = small_.p();
  uint32_t as = small_.degree(), ab = big_.degree();
  uint64_t qs = small_.order();

  // Root of the small modulus among the subfield elements of big, smallest
  // encoding. Subfield = {0} union powers of g^((Q-1)/(qs-1)).
  std::vector<uint32_t> subfield;
  subfield.push_back(0);
  if (qs == 2) {
    subfield.push_back(1);
  } else {
    uint64_t step = (big_.order() - 1) / (qs - 1);
    uint32_t zeta = big_.pow(big_.generator(), step);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < qs - 1; ++i) {
      subfield.push_back(cur);
      cur = big_.mul(cur, zeta);
    }
  }
  std::sort(subfield.begin(), subfield.end());

  const auto& mod = small_.modulus();
  bool found = false;
  for (uint32_t z : subfield) {
    // Horner; prime-subfield constants share encodings in both fields.
    uint32_t acc = 0;
    for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i)
      acc = big_.add(big_.mul(acc, z), mod[i]);
    if (acc == 0) {
      theta_ = z;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("embedding: no root of small modulus");

  // Basis of big over the injected small field: powers of w = class of X.
  uint32_t w = ab >= 2 ? p : 1;
  basis_.resize(m_);
  uint32_t bw = 1;
  for (uint32_t j = 0; j < m_; ++j) {
    basis_[j] = bw;
    bw = big_.mul(bw, w);
  }

  // GF(p)-basis {theta^i * w^j}; invert the change-of-basis matrix once.
  uint32_t n = ab;
  std::vector<std::vector<uint8_t>> mat(n, std::vector<uint8_t>(2 * n, 0));
  uint32_t ti = 1;
  for (uint32_t i = 0; i < as; ++i) {
    for (uint32_t j = 0; j < m_; ++j) {
      uint32_t v = big_.mul(ti, basis_[j]);
      for (uint32_t row = 0; row < n; ++row) {
        mat[row][i + as * j] = static_cast<uint8_t>(v % p);
        v /= p;
      }
    }
    ti = big_.mul(ti, theta_);
  }
  for (uint32_t i = 0; i < n; ++i) mat[i][n + i] = 1;
  // Gauss-Jordan mod p.
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t piv = col;
    while (piv < n && mat[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("embedding: singular basis matrix");
    std::swap(mat[piv], mat[col]);
    uint32_t lead = mat[col][col];
    uint32_t linv = 1;
    for (uint32_t t = 1; t < p; ++t)
      if (t * lead % p == 1) {
        linv = t;
        break;
      }
    for (auto& x : mat[col]) x = static_cast<uint8_t>(x * linv % p);
    for (uint32_t r = 0; r < n; ++r) {
      if (r == col || mat[r][col] == 0) continue;
      uint32_t c = mat[r][col];
      for (uint32_t j = 0; j < 2 * n; ++j)
        mat[r][j] = static_cast<uint8_t>((mat[r][j] + (p - c) * mat[col][j]) % p);
    }
  }
  inv_mat_.assign(n, std::vector<uint8_t>(n));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) inv_mat_[i][j] = mat[i][n + j];

  if (qs <= kTableLimit) {
    inject_table_.resize(qs);
    for (uint64_t e = 0; e < qs; ++e) {
      uint32_t acc = 0, tpow = 1, x = static_cast<uint32_t>(e);
      for (uint32_t i = 0; i < as; ++i) {
        acc = big_.add(acc, big_.mul(x % p, tpow));
        x /= p;
        tpow = big_.mul(tpow, theta_);
      }
      inject_table_[e] = acc;
    }
  }
}

uint32_t SubfieldEmbedding::inject(uint32_t small_enc) const {
  if (small_enc >= small_.order())
    throw std::invalid_argument("inject: encoding out of range");
  if (!inject_table_.empty()) return inject_table_[small_enc];
  uint32_t p = small_.p();
  uint32_t acc = 0, tpow = 1, x = small_enc;
  for (uint32_t i = 0; i < small_.degree(); ++i) {
    acc = big_.add(acc, big_.mul(x % p, tpow));
    x /= p;
    tpow = big_.mul(tpow, theta_);
  }
  return acc;
}

uint32_t SubfieldEmbedding::basis(uint32_t j) const {
  if (j < 1 || j > m_) throw std::invalid_argument("basis index");
  return basis_[j - 1];
}

std::vector<uint32_t> SubfieldEmbedding::expand(uint32_t big_enc) const {
  uint32_t p = small_.p();
  uint32_t n = big_.degree(), as = small_.degree();
  std::vector<uint8_t> digits(n);
  uint32_t x = big_enc;
  for (uint32_t i = 0; i < n; ++i) {
    digits[i] = static_cast<uint8_t>(x % p);
    x /= p;
  }
  std::vector<uint32_t> out(m_, 0);
  for (uint32_t j = 0; j < m_; ++j) {
    uint32_t enc = 0, mul = 1;
    for (uint32_t i = 0; i < as; ++i) {
      uint32_t row = i + as * j;
      uint32_t acc = 0;
      for (uint32_t c = 0; c < n; ++c) acc += inv_mat_[row][c] * digits[c];
      enc += (acc % p) * mul;
      mul *= p;
    }
    out[j] = enc;
  }
  return out;
}

uint32_t SubfieldEmbedding::recombine(const std::vector<uint32_t>& coords) const {
  if (coords.size() != m_) throw std::invalid_argument("recombine: size mismatch");
  uint32_t acc = 0;
  for (uint32_t j = 0; j < m_; ++j)
    acc = big_.add(acc, big_.mul(inject(coords[j]), basis_[j]));
  return acc;
}

}  // namespace syzkit::gf
