#include <doctest.h>

#include <sstream>

#include "syzkit/poly.hpp"

using namespace syzkit;
using gf::Field;
using gf::make_field;

TEST_SUITE("gf") {
  TEST_CASE("prime field GF(2)") {
    Field f = make_field(2, 1);
    CHECK(f.order() == 2);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.mul(1, 1) == 1);
    CHECK(f.inv(1) == 1);
  }

  TEST_CASE("GF(8) with x^3+x+1") {
    Field f = make_field(2, 3, std::vector<uint32_t>{1, 1, 0, 1});
    // alpha = x (encoding 2): alpha * alpha^2 = alpha + 1 (encoding 3)
    CHECK(f.mul(2, f.mul(2, 2)) == 3);
    // the modulus has no degree-1 factor over GF(2)
    gf::Poly mod(make_field(2, 1), {1, 1, 0, 1});
    CHECK(gf::is_irreducible(mod));
    CHECK(mod.eval(0) != 0);
    CHECK(mod.eval(1) != 0);
  }

  TEST_CASE("reducible modulus rejected") {
    CHECK_THROWS_WITH_AS(make_field(2, 3, std::vector<uint32_t>{1, 0, 0, 1}),
                         "reducible modulus", std::invalid_argument);
  }

  TEST_CASE("order cap") {
    CHECK_THROWS_AS(make_field(2, 21), std::invalid_argument);
    CHECK_NOTHROW(make_field(2, 20));
  }

  TEST_CASE("default modulus is deterministic and lex-smallest") {
    Field a = make_field(2, 3);
    Field b = make_field(2, 3);
    CHECK(a.modulus() == b.modulus());
    // candidates in lex order from the constant term: (1,0,1) = x^3+x^2+1
    CHECK(a.modulus() == std::vector<uint32_t>{1, 0, 1, 1});
    CHECK(make_field(2, 2).modulus() == std::vector<uint32_t>{1, 1, 1});
  }

  TEST_CASE("inverse axiom and division by zero") {
    for (auto [p, a] : {std::pair<uint32_t, uint32_t>{2, 4},
                        {3, 2},
                        {5, 1},
                        {7, 2}}) {
      Field f = make_field(p, a);
      for (uint32_t x = 1; x < f.order(); ++x)
        CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK_THROWS_AS(f.inv(0), std::domain_error);
    }
  }

  TEST_CASE("field axioms, exhaustive for small orders") {
    for (auto [p, a] : {std::pair<uint32_t, uint32_t>{2, 1},
                        {3, 1},
                        {2, 2},
                        {2, 3},
                        {3, 2},
                        {5, 1},
                        {2, 4},
                        {3, 3},
                        {2, 5}}) {
      Field f = make_field(p, a);
      uint64_t q = f.order();
      for (uint32_t x = 0; x < q; ++x)
        for (uint32_t y = 0; y < q; ++y)
          for (uint32_t z = 0; z < q; ++z) {
            CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
            CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
          }
    }
  }

  TEST_CASE("field axioms, sampled for larger orders up to 256") {
    Rng rng(5);
    for (auto [p, a] : {std::pair<uint32_t, uint32_t>{2, 8},
                        {3, 5},
                        {5, 3},
                        {2, 7},
                        {13, 2}}) {
      Field f = make_field(p, a);
      uint64_t q = f.order();
      REQUIRE(q <= 256);
      for (int i = 0; i < 20000; ++i) {
        uint32_t x = static_cast<uint32_t>(rng.below(q));
        uint32_t y = static_cast<uint32_t>(rng.below(q));
        uint32_t z = static_cast<uint32_t>(rng.below(q));
        CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      }
      // a^q = a for every element, exhaustively
      for (uint32_t x = 0; x < q; ++x) CHECK(f.pow(x, q) == x);
    }
  }

  TEST_CASE("big-order fields without tables") {
    Field f = make_field(2, 17);  // above the table limit
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
      uint32_t x = static_cast<uint32_t>(rng.below(f.order()));
      uint32_t y = static_cast<uint32_t>(rng.below(f.order()));
      if (x) CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.mul(x, y) == f.mul(y, x));
    }
  }

  TEST_CASE("frobenius") {
    Field f16 = make_field(2, 4);  // GF(2^4) as GF(4)^2
    for (uint32_t x = 0; x < 16; ++x) {
      CHECK(f16.frobenius(x, 4, 2) == x);           // x^(q^m) = x
      CHECK(f16.frobenius(x, 2, 4) == x);
      CHECK(f16.frobenius(x, 2, 1) == f16.mul(x, x));
    }
    Field f4 = make_field(2, 2);
    CHECK(f4.frobenius(2, 2, 1) == 3);  // w^2 = w + 1
    // additive and multiplicative
    Rng rng(1);
    Field f = make_field(2, 6);
    for (int i = 0; i < 500; ++i) {
      uint32_t x = static_cast<uint32_t>(rng.below(64));
      uint32_t y = static_cast<uint32_t>(rng.below(64));
      CHECK(f.frobenius(f.add(x, y), 2, 1) ==
            f.add(f.frobenius(x, 2, 1), f.frobenius(y, 2, 1)));
      CHECK(f.frobenius(f.mul(x, y), 2, 1) ==
            f.mul(f.frobenius(x, 2, 1), f.frobenius(y, 2, 1)));
    }
  }

  TEST_CASE("subfield embedding is a ring homomorphism") {
    struct Tower {
      uint32_t p, as, ab;
    };
    for (Tower t : {Tower{2, 1, 4}, {2, 2, 8}, {2, 3, 6}, {3, 1, 3}, {3, 2, 4},
                    {2, 4, 8}, {2, 6, 12}}) {
      Field small = make_field(t.p, t.as);
      Field big = make_field(t.p, t.ab);
      gf::SubfieldEmbedding emb(small, big);
      uint64_t q = small.order();
      REQUIRE(q <= 64);
      for (uint32_t x = 0; x < q; ++x)
        for (uint32_t y = 0; y < q; ++y) {
          CHECK(emb.inject(small.add(x, y)) ==
                big.add(emb.inject(x), emb.inject(y)));
          CHECK(emb.inject(small.mul(x, y)) ==
                big.mul(emb.inject(x), emb.inject(y)));
        }
      CHECK(emb.inject(1) == 1);
      // injected elements are fixed by x -> x^q
      for (uint32_t x = 0; x < q; ++x)
        CHECK(big.frobenius(emb.inject(x), q, 1) == emb.inject(x));
    }
  }

  TEST_CASE("subfield expansion round-trips") {
    Field small = make_field(2, 2);
    Field big = make_field(2, 10);  // GF(4) in GF(2^10), m = 5
    gf::SubfieldEmbedding emb(small, big);
    CHECK(emb.m() == 5);
    CHECK(emb.basis(1) == 1);
    auto z = emb.expand(0);
    CHECK(std::all_of(z.begin(), z.end(), [](uint32_t v) { return v == 0; }));
    auto b2 = emb.expand(emb.basis(2));
    CHECK(b2[0] == 0);
    CHECK(b2[1] == 1);
    for (uint32_t j = 2; j < 5; ++j) CHECK(b2[j] == 0);
    // expand(inject(x)) = (x, 0, ..., 0) since b_1 = 1
    for (uint32_t x = 0; x < 4; ++x) {
      auto e = emb.expand(emb.inject(x));
      CHECK(e[0] == x);
      for (uint32_t j = 1; j < 5; ++j) CHECK(e[j] == 0);
    }
    // exhaustive round trip
    for (uint32_t v = 0; v < big.order(); ++v)
      CHECK(emb.recombine(emb.expand(v)) == v);
    // expansion is GF(q)-linear
    Rng rng(2);
    for (int i = 0; i < 1000; ++i) {
      uint32_t u = static_cast<uint32_t>(rng.below(big.order()));
      uint32_t v = static_cast<uint32_t>(rng.below(big.order()));
      auto eu = emb.expand(u), ev = emb.expand(v), es = emb.expand(big.add(u, v));
      for (uint32_t j = 0; j < 5; ++j)
        CHECK(es[j] == small.add(eu[j], ev[j]));
    }
  }

  TEST_CASE("element encoding serialization round-trips") {
    Field f = make_field(3, 3);
    Field g = Field::from_descriptor(f.descriptor());
    CHECK(g.same_as(f));
    for (uint32_t v = 0; v < f.order(); ++v) {
      std::ostringstream os;
      os << v;
      uint32_t back;
      std::istringstream(os.str()) >> back;
      CHECK(back == v);
    }
  }

  TEST_CASE("FieldElement wrapper") {
    Field f = make_field(2, 3);
    gf::FieldElement a(f, 5), b(f, 3);
    CHECK((a + b).value() == 6);
    CHECK((a * a.inverse()).value() == 1);
    Field g = make_field(3, 1);
    gf::FieldElement c(g, 2);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(gf::FieldElement(f, 8), std::invalid_argument);
  }

  TEST_CASE("find_irreducible") {
    Field f2 = make_field(2, 1);
    Rng rng(7);
    gf::Poly g = gf::find_irreducible(f2, 2, gf::PolyMode::irreducible, rng);
    CHECK(g == gf::Poly(f2, {1, 1, 1}));  // the unique irreducible quadratic

    Field f16 = make_field(2, 4);
    gf::Poly h = gf::find_irreducible(f16, 4, gf::PolyMode::irreducible, rng);
    CHECK(h.degree() == 4);
    CHECK(h.is_monic());
    // the stated criterion: x^(Q^i) != x mod h for i < t, = x for i = t
    gf::Poly x = gf::Poly::x(f16) % h;
    for (uint32_t i = 1; i < 4; ++i) {
      gf::Poly xi = gf::frobenius_power_mod(h, i);
      CHECK(gf::poly_gcd(xi - x, h).degree() == 0);
    }
    CHECK(gf::frobenius_power_mod(h, 4) == x);

    gf::Poly s = gf::find_irreducible(f16, 5, gf::PolyMode::squarefree, rng);
    CHECK(gf::poly_gcd(s, s.derivative()).degree() == 0);
  }

  TEST_CASE("poly arithmetic basics") {
    Field f = make_field(5, 1);
    gf::Poly a(f, {1, 2, 3});
    gf::Poly b(f, {4, 1});
    CHECK((a * b) % b == gf::Poly::zero(f));
    CHECK(((a * b + gf::Poly::one(f)) % b) == gf::Poly::one(f) % b);
    CHECK(a.eval(2) == (1 + 2 * 2 + 3 * 4) % 5);
  }
}
