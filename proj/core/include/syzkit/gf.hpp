// Exact arithmetic in GF(p^a) for prime-power orders up to 2^20, with
// extension towers GF(q) < GF(q^m), Frobenius, and expansion to the subfield.
//
// Elements are encoded as integers: an element with polynomial-basis
// coordinates (c_0, ..., c_{a-1}) over GF(p) encodes as sum c_i p^i. For a
// fixed (p, a) the default modulus is deterministic, so encodings are stable
// across runs and machines.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzkit/util.hpp"

namespace syzkit::gf {

class Field;

namespace detail {

struct FieldData {
  uint32_t p = 0;               // characteristic
  uint32_t a = 0;               // extension degree over GF(p)
  uint64_t q = 0;               // order p^a
  std::vector<uint32_t> modulus;  // c_0 .. c_a, monic irreducible over GF(p)
  uint32_t generator = 0;       // smallest primitive element encoding

  // Discrete-log tables, built when q <= 2^16.
  std::vector<uint32_t> exp_table;  // size 2(q-1), exp[i] = g^i
  std::vector<uint32_t> log_table;  // size q, log[g^i] = i, log[0] unused

  bool has_tables() const { return !exp_table.empty(); }

  uint32_t add(uint32_t x, uint32_t y) const;
  uint32_t sub(uint32_t x, uint32_t y) const;
  uint32_t neg(uint32_t x) const;
  uint32_t mul(uint32_t x, uint32_t y) const;
  uint32_t inv(uint32_t x) const;
  uint32_t pow(uint32_t x, uint64_t e) const;

  uint32_t mul_raw(uint32_t x, uint32_t y) const;  // table-free path
};

}  // namespace detail

// Immutable handle on a finite field; cheap to copy, safe to share across
// threads. Two Field handles compare equal iff they share the same (p, a,
// modulus).
class Field {
 public:
  Field() = default;

  uint32_t p() const { return d_->p; }
  uint32_t degree() const { return d_->a; }
  uint64_t order() const { return d_->q; }
  const std::vector<uint32_t>& modulus() const { return d_->modulus; }
  uint32_t generator() const { return d_->generator; }

  bool valid() const { return d_ != nullptr; }
  bool same_as(const Field& o) const;

  uint32_t add(uint32_t x, uint32_t y) const { return d_->add(x, y); }
  uint32_t sub(uint32_t x, uint32_t y) const { return d_->sub(x, y); }
  uint32_t neg(uint32_t x) const { return d_->neg(x); }
  uint32_t mul(uint32_t x, uint32_t y) const { return d_->mul(x, y); }
  uint32_t inv(uint32_t x) const { return d_->inv(x); }
  uint32_t pow(uint32_t x, uint64_t e) const { return d_->pow(x, e); }

  // x^(q0^i) where q0 is a power of p. Additive and multiplicative.
  uint32_t frobenius(uint32_t x, uint64_t q0, uint32_t i) const;

  // One-line descriptor "p a c_0 c_1 ... c_a".
  std::string descriptor() const;
  static Field from_descriptor(const std::string& line);

  const detail::FieldData* data() const { return d_.get(); }

 private:
  friend Field make_field(uint32_t, uint32_t,
                          const std::optional<std::vector<uint32_t>>&);
  std::shared_ptr<const detail::FieldData> d_;
};

// Builds GF(p^a). When no modulus is supplied, uses the lexicographically
// smallest monic irreducible polynomial of degree a over GF(p), coefficients
// compared as integers from the constant term up. A supplied modulus must be
// monic of degree a and irreducible (checked by trial division), otherwise
// throws std::invalid_argument("reducible modulus").
Field make_field(uint32_t p, uint32_t a,
                 const std::optional<std::vector<uint32_t>>& modulus = {});

// An element tagged with its field. Convenience wrapper for API-level code;
// bulk data paths (matrices) carry raw encodings plus one Field handle.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, uint32_t v) : f_(std::move(f)), v_(v) {
    if (v_ >= f_.order()) throw std::invalid_argument("encoding out of range");
  }

  const Field& field() const { return f_; }
  uint32_t value() const { return v_; }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    return FieldElement(f_, f_.add(v_, o.v_));
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    return FieldElement(f_, f_.sub(v_, o.v_));
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return FieldElement(f_, f_.mul(v_, o.v_));
  }
  FieldElement inverse() const { return FieldElement(f_, f_.inv(v_)); }
  FieldElement pow(uint64_t e) const { return FieldElement(f_, f_.pow(v_, e)); }
  bool operator==(const FieldElement& o) const {
    return f_.same_as(o.f_) && v_ == o.v_;
  }

 private:
  void check(const FieldElement& o) const {
    if (!f_.same_as(o.f_)) throw std::invalid_argument("field mismatch");
  }
  Field f_;
  uint32_t v_ = 0;
};

// Ring embedding GF(q) -> GF(q^m) together with the inverse expansion onto
// the basis (1, w, ..., w^{m-1}), w the class of X in the big field.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(Field small, Field big);

  const Field& small() const { return small_; }
  const Field& big() const { return big_; }
  uint32_t m() const { return m_; }

  // phi: GF(q) -> GF(q^m), a ring homomorphism.
  uint32_t inject(uint32_t small_enc) const;

  // Basis element b_j (1-based j in [1, m]); b_1 = 1.
  uint32_t basis(uint32_t j) const;

  // Coordinates u_1..u_m over GF(q) with z = sum inject(u_j) * b_j.
  std::vector<uint32_t> expand(uint32_t big_enc) const;
  uint32_t recombine(const std::vector<uint32_t>& coords) const;

 private:
  Field small_, big_;
  uint32_t m_ = 0;
  uint32_t theta_ = 0;  // root of small's modulus inside big
  std::vector<uint32_t> inject_table_;        // when q_small <= 2^16
  std::vector<uint32_t> basis_;               // b_1..b_m
  std::vector<std::vector<uint8_t>> inv_mat_;  // (am x am) over GF(p)
};

enum class PolyMode { irreducible, squarefree };

}  // namespace syzkit::gf
