// Dense univariate polynomials over a Field. Small-degree workhorse for
// moduli, Goppa polynomials, and irreducibility / squarefreeness tests.
#pragma once

#include <vector>

#include "syzkit/gf.hpp"

namespace syzkit::gf {

class Poly {
 public:
  Poly() = default;
  Poly(Field f, std::vector<uint32_t> coeffs);

  static Poly zero(const Field& f) { return Poly(f, {}); }
  static Poly one(const Field& f) { return Poly(f, {1}); }
  static Poly x(const Field& f) { return Poly(f, {0, 1}); }

  const Field& field() const { return f_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return leading() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator%(const Poly& o) const;
  Poly monic() const;
  Poly derivative() const;

  uint32_t eval(uint32_t x) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void normalize();
  Field f_;
  std::vector<uint32_t> c_;  // c_[i] multiplies X^i
};

Poly poly_gcd(Poly a, Poly b);

// x^(Q^i) mod g, Q the order of g's field; building block of the
// irreducibility test.
Poly frobenius_power_mod(const Poly& g, uint32_t i);

bool is_irreducible(const Poly& g);
bool is_squarefree(const Poly& g);

// Uniformly random monic degree-t polynomial over f that is irreducible
// (resp. squarefree), by rejection; throws after 10^6 draws.
Poly find_irreducible(const Field& f, uint32_t t, PolyMode mode, Rng& rng);

}  // namespace syzkit::gf
