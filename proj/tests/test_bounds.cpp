#include <doctest.h>

#include "syzkit/bounds.hpp"

using namespace syzkit;
using codes::LinearCode;

TEST_SUITE("bounds") {
  TEST_CASE("alternant EN parameters") {
    auto p = bounds::alternant_en_params(2, 5);
    CHECK(p.e == 2);
    CHECK(p.f == 8);
    auto p2 = bounds::alternant_en_params(3, 6);
    CHECK(p2.e == 1);
    CHECK(p2.f == 8);
    auto p3 = bounds::alternant_en_params(2, 64);
    CHECK(p3.e == 5);
    CHECK(p3.f == 321);
    CHECK_THROWS_AS(bounds::alternant_en_params(2, 1), std::invalid_argument);
  }

  TEST_CASE("binary Goppa EN parameters") {
    CHECK(bounds::goppa_en_params(64).f_hat == 427);
    CHECK(bounds::goppa_en_params(119).f_hat == 867);
    CHECK(bounds::goppa_en_params(96).f_hat == 683);
    CHECK(bounds::goppa_en_params(128).f_hat == 939);
    auto g = bounds::goppa_en_params(5);
    CHECK(g.e_hat == 1);
    CHECK(g.f_hat == 15);  // strictly below the empirical r* = 17
    // f_hat improves f for the same t
    for (uint32_t t : {2, 5, 10, 64, 128})
      CHECK(bounds::goppa_en_params(t).f_hat >=
            bounds::alternant_en_params(2, t).f);
  }

  TEST_CASE("EN strand bounds") {
    CHECK(bounds::en_strand_bound(8, 0, 8, 10) == 70);
    CHECK(bounds::en_strand_bound(8, 2, 5, 10) == 240);
    CHECK(bounds::en_strand_bound(8, 7, 8) == 0);  // r > f - s
    CHECK(bounds::improved_alternant_bound(10, 2, 5, 8) == 70);
    CHECK(bounds::improved_alternant_bound(10, 2, 5, 2) == 220);
    CHECK(bounds::improved_alternant_bound(10, 2, 5, 1) == 0);
  }

  TEST_CASE("phi matrix construction") {
    gf::Field big = gf::make_field(2, 10);
    Rng rng(20);
    auto sm = codes::random_support_multiplier(big, 40, rng);
    auto phi = bounds::build_phi(sm, 2, 5, 10);
    CHECK(phi.block_widths == std::vector<size_t>{4, 3, 1});
    CHECK(phi.f == 8);
    CHECK(phi.columns.size() == 8);
    CHECK(phi.columns_independent());
    auto phi3 = bounds::build_phi(sm, 2, 3, 10);
    CHECK(phi3.block_widths == std::vector<size_t>{2, 1});
    CHECK(phi3.f == 3);
    // column count always equals f
    for (uint32_t t : {2, 3, 4, 5, 7}) {
      auto p = bounds::build_phi(sm, 2, t, 10);
      CHECK(static_cast<int64_t>(p.columns.size()) == p.f);
    }
  }

  TEST_CASE("minors of phi vanish on alternant data") {
    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
      uint32_t m = 4 + static_cast<uint32_t>(rng.below(5));  // 4..8
      uint32_t t = 2 + static_cast<uint32_t>(rng.below(4));  // 2..5
      gf::Field big = gf::make_field(2, m);
      size_t n = std::min<size_t>(big.order(), 8 + m * t);
      auto sm = codes::random_support_multiplier(big, n, rng);
      auto phi = bounds::build_phi(sm, 2, t, m);
      CHECK(bounds::verify_minors_vanish(phi));
      // The minors vanish identically for any coherent (x, y), so the
      // negative control corrupts one variable's evaluation table at a
      // position where the support is nonzero.
      if (phi.f >= 2) {
        auto phi_bad = phi;
        size_t pos = sm.support[0] == 0 ? 1 : 0;
        uint32_t var = phi.columns[0].top_var;
        uint32_t old = phi_bad.var_eval[var][pos];
        phi_bad.var_eval[var][pos] = big.add(old, 1);
        CHECK_FALSE(bounds::verify_minors_vanish(phi_bad));
      }
    }
    // t = 2 gives f = 1: vacuously true
    gf::Field big = gf::make_field(2, 6);
    auto sm = codes::random_support_multiplier(big, 20, rng);
    auto phi1 = bounds::build_phi(sm, 2, 2, 6);
    CHECK(phi1.f == 1);
    CHECK(bounds::verify_minors_vanish(phi1));
  }

  TEST_CASE("explicit EN syzygies vanish under composition") {
    gf::Field f = gf::make_field(2, 16);
    Rng rng(22);
    CHECK(bounds::en_family_size(8, 3) == 2 * binom_i64(8, 3));
    CHECK(bounds::en_family_size(8, 4) == 3 * binom_i64(8, 4));
    for (uint32_t r : {3, 4, 5})
      CHECK(bounds::verify_en_syzygies(8, r, f, 20, rng));
    for (uint32_t r : {3, 4})
      CHECK(bounds::verify_en_syzygies(5, r, f, 20, rng));
  }

  TEST_CASE("GV distances") {
    // values pinned by the convention (exact big-integer crossings)
    CHECK(bounds::gv_distance(2, 3111, 391) == 920);
    CHECK(bounds::gv_distance(2, 3111, 2720) == 55);
    CHECK(bounds::gv_distance(2, 6191, 778) == 1828);
    CHECK(bounds::gv_distance(2, 5872, 5024) == 122);
    CHECK(bounds::gv_distance(2, 7344, 6528) == 110);
    CHECK(bounds::dual_gv_distance(2, 7344, 816) == 110);
    // monotonicity: decreasing in k at fixed n
    int64_t prev = bounds::gv_distance(2, 512, 32);
    for (uint64_t k = 64; k <= 448; k += 64) {
      int64_t cur = bounds::gv_distance(2, 512, k);
      CHECK(cur <= prev);
      prev = cur;
    }
    // the definition itself on a small case, by hand: q=2, n=10, k=5:
    // V(0)=1, V(1)=11, V(2)=56 >= 32 -> largest d with V(d-1)<32 is 2
    CHECK(bounds::gv_distance(2, 10, 5) == 2);
  }

  TEST_CASE("entropy thresholds") {
    auto tr = bounds::entropy_threshold_rates(2);
    CHECK(tr.r1 > 0.276);
    CHECK(tr.r1 < 0.278);
    CHECK(tr.r2 > 0.140);
    CHECK(tr.r2 < 0.142);
    // both heuristic conditions hold for small rates
    for (double rate : {0.01, 0.05}) {
      CHECK(bounds::entropy_q_inv(2, 1 - rate) > rate * (1 - rate));
      CHECK(bounds::entropy_q_inv(2, rate) > rate * rate);
    }
    // entropy inverse round-trips
    for (double x : {0.05, 0.2, 0.4})
      CHECK(bounds::entropy_q(2, bounds::entropy_q_inv(2, x)) ==
            doctest::Approx(x).epsilon(1e-6));
  }

  TEST_CASE("closed-form diagrams") {
    auto par = bounds::closed_form_diagram(bounds::DiagramKind::parity, 8);
    CHECK(par.row1 == std::vector<int64_t>{27, 105, 189, 189, 105, 27, 0});
    CHECK(par.row2 == std::vector<int64_t>{0, 0, 0, 0, 0, 0, 1});
    auto grs = bounds::closed_form_diagram(bounds::DiagramKind::grs_critical, 8);
    CHECK(grs.row1 == std::vector<int64_t>{21, 70, 105, 84, 35, 6, 0});
    CHECK(grs.row2 == std::vector<int64_t>{7, 42, 105, 140, 105, 42, 7});
    // parity symmetry beta_{i,j} = beta_{k-1-i,k+1-j}
    for (size_t k : {5, 6, 8, 11}) {
      auto d = bounds::closed_form_diagram(bounds::DiagramKind::parity, k);
      for (size_t i = 1; i <= k - 1; ++i) {
        size_t mi = k - 1 - i;
        if (mi >= 1 && mi <= k - 1) CHECK(d.row1[i - 1] == d.row1[mi - 1]);
      }
    }
  }

  TEST_CASE("closed forms match the computed diagrams") {
    // parity codes over GF(2) and GF(3), k <= 8
    for (uint64_t q : {2, 3}) {
      gf::Field f = linalg::field_of_order(q);
      for (size_t k : {3, 5, 8}) {
        LinearCode c = codes::parity_code(k, f);
        auto res = syzygy::linear_strand(c);
        auto computed = syzygy::betti_diagram_reg2(c, res.strand);
        auto predicted = bounds::closed_form_diagram(bounds::DiagramKind::parity, k);
        CHECK(computed.row1 == predicted.row1);
        CHECK(computed.row2 == predicted.row2);
      }
    }
    // [2k-1,k] GRS over GF(16), k <= 7
    gf::Field f16 = gf::make_field(2, 4);
    Rng rng(23);
    for (size_t k : {4, 6, 7}) {
      auto sm = codes::random_support_multiplier(f16, 2 * k - 1, rng);
      LinearCode c = codes::grs_code(sm, k);
      auto res = syzygy::linear_strand(c);
      auto computed = syzygy::betti_diagram_reg2(c, res.strand);
      auto predicted =
          bounds::closed_form_diagram(bounds::DiagramKind::grs_critical, k);
      CHECK(computed.row1 == predicted.row1);
      CHECK(computed.row2 == predicted.row2);
    }
  }

  TEST_CASE("GreLaz vanishing on computed MDS diagrams") {
    // [k+1,k] MDS: beta_{r-2,r} = 0 for r <= 2k+1-n = k
    gf::Field f2 = gf::make_field(2, 1);
    for (size_t k : {5, 8}) {
      LinearCode c = codes::parity_code(k, f2);
      auto res = syzygy::linear_strand(c);
      auto d = syzygy::betti_diagram_reg2(c, res.strand);
      for (size_t i = 1; i + 2 <= k; ++i)  // r = i+2 <= k
        CHECK(d.row2[i - 1] == 0);
    }
  }

  TEST_CASE("EN lower bounds never exceed computed strands") {
    Rng rng(24);
    struct Config {
      uint32_t q, m, t;
      bool goppa;
    };
    // t <= 5, m <= 8; strands computed to degree 3
    for (Config cfg : {Config{2, 4, 3, false}, {2, 5, 4, false}, {2, 6, 5, false},
                       {3, 3, 4, false}, {2, 5, 4, true}, {2, 6, 3, true},
                       {2, 8, 5, true}, {4, 3, 2, false}}) {
      codes::FamilySpec spec;
      spec.family = cfg.goppa ? codes::CodeFamily::goppa_dual
                              : codes::CodeFamily::alt_dual;
      spec.mode = codes::GoppaMode::sqfr;
      spec.q = cfg.q;
      spec.m = cfg.m;
      spec.t = cfg.t;
      auto fs = codes::sample_family(spec, rng);
      int64_t f = cfg.goppa && cfg.q == 2
                      ? bounds::goppa_en_params(cfg.t).f_hat
                      : bounds::alternant_en_params(cfg.q, cfg.t).f;
      for (size_t s : {0u, 1u, 2u}) {
        LinearCode cs = fs.code;
        if (s) cs = codes::shorten(cs, rng.sample_distinct(cs.length(), s));
        auto res = syzygy::linear_strand(cs, {3, size_t{3} << 30, false});
        for (uint32_t r = 2; r <= 3; ++r) {
          mpz_class lower =
              bounds::en_strand_bound(f, static_cast<int64_t>(s), r);
          CHECK(mpz_class(static_cast<unsigned long>(res.strand.beta_at(r))) >=
                lower);
        }
      }
    }
  }
}
