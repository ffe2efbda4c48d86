#include "syzkit/poly.hpp"

namespace syzkit::gf {

Poly::Poly(Field f, std::vector<uint32_t> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  for (uint32_t c : c_)
    if (c >= f_.order()) throw std::invalid_argument("coefficient out of range");
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
  return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = f_.sub(coeff(i), o.coeff(i));
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return zero(f_);
  std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
  }
  return Poly(f_, std::move(r));
}

Poly Poly::operator%(const Poly& o) const {
  if (o.is_zero()) throw std::domain_error("poly mod zero");
  std::vector<uint32_t> r = c_;
  uint32_t linv = f_.inv(o.leading());
  int dv = o.degree();
  while (static_cast<int>(r.size()) - 1 >= dv) {
    uint32_t lead = r.back();
    if (lead != 0) {
      uint32_t factor = f_.mul(lead, linv);
      int shift = static_cast<int>(r.size()) - 1 - dv;
      for (int i = 0; i <= dv; ++i)
        r[i + shift] = f_.sub(r[i + shift], f_.mul(factor, o.c_[i]));
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(f_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  uint32_t linv = f_.inv(leading());
  std::vector<uint32_t> r = c_;
  for (auto& x : r) x = f_.mul(x, linv);
  return Poly(f_, std::move(r));
}

Poly Poly::derivative() const {
  if (degree() < 1) return zero(f_);
  std::vector<uint32_t> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) {
    uint32_t scalar = static_cast<uint32_t>(i % f_.p());
    r[i - 1] = f_.mul(c_[i], scalar);
  }
  return Poly(f_, std::move(r));
}

uint32_t Poly::eval(uint32_t x) const {
  uint32_t acc = 0;
  for (int i = degree(); i >= 0; --i) acc = f_.add(f_.mul(acc, x), c_[i]);
  return acc;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& g) { return (a * b) % g; }

// h^Q mod g by square-and-multiply over the exponent bits of Q.
Poly powmod_q(const Poly& h, const Poly& g) {
  uint64_t e = h.field().order();
  Poly r = Poly::one(h.field());
  Poly b = h;
  while (e) {
    if (e & 1) r = mulmod(r, b, g);
    b = mulmod(b, b, g);
    e >>= 1;
  }
  return r;
}

}  // namespace

Poly frobenius_power_mod(const Poly& g, uint32_t i) {
  Poly h = Poly::x(g.field()) % g;
  for (uint32_t j = 0; j < i; ++j) h = powmod_q(h, g);
  return h;
}

bool is_irreducible(const Poly& g) {
  int t = g.degree();
  if (t <= 0) return false;
  if (t == 1) return true;
  Poly x = Poly::x(g.field()) % g;
  Poly h = x;
  for (int i = 1; 2 * i <= t; ++i) {
    h = powmod_q(h, g);
    Poly d = poly_gcd(h - x, g);
    if (d.degree() != 0) return false;
  }
  return true;
}

bool is_squarefree(const Poly& g) {
  if (g.degree() < 1) return false;
  Poly d = g.derivative();
  if (d.is_zero()) return false;
  return poly_gcd(g, d).degree() == 0;
}

Poly find_irreducible(const Field& f, uint32_t t, PolyMode mode, Rng& rng) {
  if (t < 1) throw std::invalid_argument("degree must be >= 1");
  for (uint64_t tries = 0; tries < 1000000; ++tries) {
    std::vector<uint32_t> c(t + 1);
    for (uint32_t i = 0; i < t; ++i)
      c[i] = static_cast<uint32_t>(rng.below(f.order()));
    c[t] = 1;
    Poly g(f, std::move(c));
    if (mode == PolyMode::irreducible ? is_irreducible(g) : is_squarefree(g))
      return g;
  }
  throw std::runtime_error("find_irreducible: retry cap exceeded");
}

}  // namespace syzkit::gf
