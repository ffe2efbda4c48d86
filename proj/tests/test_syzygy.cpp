#include <doctest.h>

#include "syzkit/syzygy.hpp"

using namespace syzkit;
using codes::LinearCode;
using linalg::MatrixFq;

namespace {

// Random code with a full square (regularity 2), k <= 10.
LinearCode random_reg2_code(size_t n, size_t k, const gf::Field& f, Rng& rng) {
  for (int tries = 0; tries < 200; ++tries) {
    LinearCode c = codes::random_code(n, k, f, rng);
    if (codes::has_regularity_two(c)) return c;
  }
  throw std::runtime_error("no regularity-2 sample found");
}

}  // namespace

TEST_SUITE("syzygy") {
  TEST_CASE("monomial ranks enumerate in order") {
    for (size_t k : {2, 3, 6}) {
      size_t idx = 0;
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a; b < k; ++b) {
          CHECK(syzygy::rank2(k, a, b) == idx);
          auto [ua, ub] = syzygy::unrank2(k, idx);
          CHECK(ua == a);
          CHECK(ub == b);
          ++idx;
        }
      CHECK(idx == k * (k + 1) / 2);
      idx = 0;
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a; b < k; ++b)
          for (size_t c = b; c < k; ++c) {
            CHECK(syzygy::rank3(k, a, b, c) == idx);
            ++idx;
          }
      CHECK(idx == static_cast<size_t>(binom_i64(k + 2, 3)));
    }
  }

  TEST_CASE("squared matrix shapes and small cases") {
    gf::Field f2 = gf::make_field(2, 1);
    // k = 1: single row, entrywise square
    MatrixFq g1 = MatrixFq::from_rows(f2, {{1, 0, 1}});
    MatrixFq m1 = syzygy::squared_matrix(g1);
    CHECK(m1.rows() == 1);
    CHECK(m1.row(0) == std::vector<uint32_t>{1, 0, 1});
    // k = 2: three rows c1c1, c1c2, c2c2
    gf::Field f3 = gf::make_field(3, 1);
    MatrixFq g2 = MatrixFq::from_rows(f3, {{1, 2, 0}, {0, 1, 1}});
    MatrixFq m2 = syzygy::squared_matrix(g2);
    CHECK(m2.rows() == 3);
    CHECK(m2.row(0) == std::vector<uint32_t>{1, 4 % 3, 0});
    CHECK(m2.row(1) == std::vector<uint32_t>{0, 2, 0});
    CHECK(m2.row(2) == std::vector<uint32_t>{0, 1, 1});
    // Hamming: 10 x 7 of rank 7, kernel of dimension 3
    MatrixFq mh = syzygy::squared_matrix(codes::hamming_7_4().generator());
    CHECK(mh.rows() == 10);
    CHECK(mh.cols() == 7);
    CHECK(linalg::rank_of(mh) == 7);
    CHECK(syzygy::compute_B2(codes::hamming_7_4().generator()).count() == 3);
  }

  TEST_CASE("degree-2 kernels of the named codes") {
    CHECK(syzygy::compute_B2(codes::ternary_golay().generator()).count() == 10);
    CHECK(syzygy::compute_B2(codes::binary_golay().generator()).count() == 55);
    // full square means no quadratic relations
    Rng rng(12);
    LinearCode c = codes::random_code(20, 4, gf::make_field(2, 1), rng);
    if (codes::power_dims(c, 2).dims[1] == 10)  // binom(5,2)
      CHECK(syzygy::compute_B2(c.generator()).count() == 0);
  }

  TEST_CASE("degree-3 Macaulay matrices") {
    // Hamming: 12 x 20 with trivial kernel
    auto b2 = syzygy::compute_B2(codes::hamming_7_4().generator());
    MatrixFq m3 = syzygy::macaulay_deg3(b2, 4);
    CHECK(m3.rows() == 12);
    CHECK(m3.cols() == 20);
    CHECK(linalg::left_kernel_basis(m3).rows() == 0);
    // ternary Golay: kernel of dimension 16
    auto b2g = syzygy::compute_B2(codes::ternary_golay().generator());
    MatrixFq m3g = syzygy::macaulay_deg3(b2g, 6);
    CHECK(m3g.rows() == 60);
    CHECK(m3g.cols() == 56);
    CHECK(linalg::left_kernel_basis(m3g).rows() == 16);
    // empty basis gives an empty matrix
    syzygy::SyzygyBasis empty{2, MatrixFq(gf::make_field(2, 1), 0, 10)};
    CHECK(syzygy::macaulay_deg3(empty, 4).rows() == 0);
  }

  TEST_CASE("blockwise Macaulay entry rule") {
    gf::Field f2 = gf::make_field(2, 1);
    size_t k = 3, beta_prev2 = 2;
    // one degree-3 basis vector s with entries s_{(b,t)}
    MatrixFq basis(f2, 1, k * beta_prev2);
    basis.set(0, 0 * beta_prev2 + 1, 1);  // s_{X0,t1}
    basis.set(0, 2 * beta_prev2 + 0, 1);  // s_{X2,t0}
    syzygy::SyzygyBasis b3{3, basis};
    syzygy::SyzygyBasis b2{2, MatrixFq(f2, beta_prev2, k * (k + 1) / 2)};
    MatrixFq m4 = syzygy::blockwise_macaulay(b3, b2, k);
    CHECK(m4.rows() == k * 1);
    CHECK(m4.cols() == (k * (k + 1) / 2) * beta_prev2);
    // row (X_a, s) has entry s_{X_b,t} at column (X_a X_b, t)
    for (size_t a = 0; a < k; ++a) {
      size_t row = a * 1 + 0;
      for (size_t b = 0; b < k; ++b)
        for (size_t t = 0; t < beta_prev2; ++t) {
          size_t col = syzygy::rank2(k, std::min(a, b), std::max(a, b)) *
                           beta_prev2 + t;
          uint32_t expect = basis.get(0, b * beta_prev2 + t);
          CHECK(m4.get(row, col) == expect);
        }
    }
    // the rows for X0 and X2 place their entries at the same unordered column
    size_t col02 = syzygy::rank2(k, 0, 2);
    CHECK(m4.get(0, col02 * beta_prev2 + 0) == 1);  // row X0 picks s_{X2,t0}
    CHECK(m4.get(2, col02 * beta_prev2 + 1) == 1);  // row X2 picks s_{X0,t1}
  }

  TEST_CASE("strands of the named codes") {
    auto hs = syzygy::linear_strand(codes::hamming_7_4());
    CHECK(hs.strand.beta == std::vector<size_t>{3, 0});
    CHECK(hs.strand.complete);
    CHECK(hs.strand.beta_at(4) == 0);
    CHECK(hs.strand.r_max() == 2);

    auto ts = syzygy::linear_strand(codes::ternary_golay());
    CHECK(ts.strand.beta == std::vector<size_t>{10, 16, 0});
    CHECK(ts.strand.beta_at(5) == 0);
    CHECK(ts.strand.r_max() == 3);

    // recorded shapes match the definitions
    size_t k = 6;
    CHECK(ts.shapes[0] == std::pair<size_t, size_t>{21, 11});
    CHECK(ts.shapes[1] ==
          std::pair<size_t, size_t>{k * 10, static_cast<size_t>(binom_i64(8, 3))});
  }

  TEST_CASE("phi index") {
    CHECK(syzygy::phi_index(23, 12, 2) == 55);
    CHECK(syzygy::phi_index(23, 12, 3) == 319);
    CHECK(syzygy::phi_index(7, 4, 5) == -3);
    // integrality of the (k(k+1)/r - n) binom(k-1, r-2) form
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
      size_t k = 2 + rng.below(30);
      uint32_t r = 2 + static_cast<uint32_t>(rng.below(k));
      mpz_class lhs = mpz_class(static_cast<unsigned long>(k)) * (k + 1) *
                      binom_mpz(k - 1, static_cast<int64_t>(r) - 2);
      CHECK(lhs % r == 0);
      size_t n = 1 + rng.below(3 * k);
      CHECK(syzygy::phi_index_mpz(n, k, r) ==
            lhs / r - mpz_class(static_cast<unsigned long>(n)) *
                          binom_mpz(k - 1, static_cast<int64_t>(r) - 2));
    }
  }

  TEST_CASE("Hamming diagram and defects") {
    auto hs = syzygy::linear_strand(codes::hamming_7_4());
    auto d = syzygy::betti_diagram_reg2(codes::hamming_7_4(), hs.strand);
    CHECK(d.row1 == std::vector<int64_t>{3, 0, 0});
    CHECK(d.row2 == std::vector<int64_t>{1, 6, 3});
    for (uint32_t r = 2; r <= 4; ++r)
      CHECK(syzygy::defect(hs.strand, r, 7, 4) >= 0);
    // ternary Golay: beta_{2,3} = 16, ind = 15, defect 1
    auto ts = syzygy::linear_strand(codes::ternary_golay());
    CHECK(syzygy::defect(ts.strand, 3, 11, 6) ==
          16 - syzygy::phi_index(11, 6, 3));
  }

  TEST_CASE("diagram refuses regularity above 2") {
    // [6,4]_2 repetition-ish code with a small square
    gf::Field f2 = gf::make_field(2, 1);
    MatrixFq g = MatrixFq::from_rows(
        f2,
        {{1, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 1}, {0, 0, 1, 0, 1, 1},
         {0, 0, 0, 1, 1, 1}});
    LinearCode c(g);
    if (!codes::has_regularity_two(c)) {
      auto res = syzygy::linear_strand(c);
      CHECK_THROWS_AS(syzygy::betti_diagram_reg2(c, res.strand),
                      std::domain_error);
    }
  }

  TEST_CASE("r_max with caps") {
    auto rm = syzygy::r_max(codes::ternary_golay(), 6);
    CHECK(rm.value == 3);
    // cap too small to resolve
    auto rm2 = syzygy::r_max(codes::binary_golay(), 3);
    CHECK_FALSE(rm2.value.has_value());
  }

  TEST_CASE("coarse strand bound") {
    Rng rng(14);
    for (int i = 0; i < 20; ++i) {
      gf::Field f = linalg::field_of_order(i % 2 ? 2 : 3);
      size_t k = 4 + rng.below(5);
      size_t n = k + 2 + rng.below(2 * k);
      LinearCode c = codes::random_code(n, k, f, rng);
      auto res = syzygy::linear_strand(c);
      const auto& b = res.strand.beta;
      CHECK(b[0] <= k * (k - 1) / 2);
      for (size_t j = 1; j < b.size(); ++j) CHECK(b[j] <= (k - 1) * b[j - 1]);
    }
  }

  TEST_CASE("strands are invariant under monomial equivalence") {
    Rng rng(15);
    for (int i = 0; i < 20; ++i) {
      gf::Field f = linalg::field_of_order(i % 2 ? 4 : 3);
      size_t k = 4 + rng.below(3);
      size_t n = k + 3 + rng.below(k);
      LinearCode c = codes::random_code(n, k, f, rng);
      // S G P D: elementary row operations, column permutation, scaling
      MatrixFq sg = c.generator();
      for (int op = 0; op < 3 * static_cast<int>(k); ++op) {
        size_t r = rng.below(k), r2 = rng.below(k);
        if (r == r2) continue;
        sg.row_axpy(r, sg, r2,
                    1 + static_cast<uint32_t>(rng.below(f.order() - 1)));
      }
      std::vector<size_t> perm(n);
      for (size_t j = 0; j < n; ++j) perm[j] = j;
      for (size_t j = n; j > 1; --j)
        std::swap(perm[j - 1], perm[rng.below(j)]);
      MatrixFq gpd(f, k, n);
      for (size_t j = 0; j < n; ++j) {
        uint32_t scale = 1 + static_cast<uint32_t>(rng.below(f.order() - 1));
        for (size_t r = 0; r < k; ++r)
          gpd.set(r, j, f.mul(scale, sg.get(r, perm[j])));
      }
      LinearCode c2(gpd, true);
      REQUIRE(c2.dim() == k);
      auto s1 = syzygy::linear_strand(c, {4, size_t{1} << 30, false});
      auto s2 = syzygy::linear_strand(c2, {4, size_t{1} << 30, false});
      CHECK(s1.strand.beta == s2.strand.beta);
    }
  }

  TEST_CASE("the strand only depends on the quadratic relations") {
    // Feed the pipeline the degree-2 kernel of a different generator matrix
    // of the same row space; the downstream kernels must agree.
    Rng rng(16);
    for (int i = 0; i < 10; ++i) {
      gf::Field f2 = gf::make_field(2, 1);
      size_t k = 5, n = 10 + rng.below(6);
      LinearCode c = codes::random_code(n, k, f2, rng);
      MatrixFq alt(f2, k, n);
      for (size_t r = 0; r < k; ++r) {
        alt.row_axpy(r, c.generator(), r, 1);
        alt.row_axpy(r, c.generator(), (r + 1) % k, 1);
      }
      if (linalg::rank_of(alt) != k) continue;
      auto strand_a = syzygy::linear_strand(c, {3, size_t{1} << 30, false});
      auto b2 = syzygy::compute_B2(alt);
      auto m3 = syzygy::macaulay_deg3(b2, k);
      CHECK(b2.count() == strand_a.strand.beta_at(2));
      CHECK(linalg::left_kernel_basis(m3).rows() == strand_a.strand.beta_at(3));
    }
  }

  TEST_CASE("puncturing does not lose strand values") {
    Rng rng(17);
    int done = 0;
    while (done < 20) {
      gf::Field f = linalg::field_of_order(done % 2 ? 2 : 3);
      size_t k = 4 + rng.below(3);
      size_t n = k + 4 + rng.below(k);
      LinearCode c = codes::random_code(n, k, f, rng);
      auto pos = rng.sample_distinct(n, 1 + rng.below(2));
      LinearCode pc = codes::puncture(c, pos);
      if (pc.dim() != k) continue;
      auto sc = syzygy::linear_strand(c, {3, size_t{1} << 30, false});
      auto sp = syzygy::linear_strand(pc, {3, size_t{1} << 30, false});
      for (uint32_t r = 2; r <= 3; ++r)
        CHECK(sp.strand.beta_at(r) >= sc.strand.beta_at(r));
      ++done;
    }
  }

  TEST_CASE("Hilbert series cross-check on random regularity-2 codes") {
    Rng rng(18);
    int done = 0;
    while (done < 30) {
      uint64_t q = done % 3 == 0 ? 3 : 2;
      gf::Field f = linalg::field_of_order(q);
      size_t k = 4 + rng.below(7);  // up to 10
      size_t max_n = k * (k + 1) / 2 - 1;
      size_t n = k + 3 + rng.below(max_n - k - 2);
      LinearCode c;
      try {
        c = random_reg2_code(n, k, f, rng);
      } catch (const std::runtime_error&) {
        continue;
      }
      auto res = syzygy::linear_strand(c);
      REQUIRE(res.strand.complete);
      auto diagram = syzygy::betti_diagram_reg2(c, res.strand);
      CHECK(syzygy::alternating_sums(diagram) ==
            syzygy::hilbert_prediction(n, k));
      ++done;
    }
  }

  TEST_CASE("budget refusals are structured") {
    syzygy::StrandOptions opt;
    opt.mem_cap_bytes = 1 << 16;  // 64 KiB: the Golay strand cannot fit
    auto res = syzygy::linear_strand(codes::binary_golay(), opt);
    REQUIRE(res.strand.refusal.has_value());
    CHECK_FALSE(res.strand.complete);
    CHECK_THROWS_AS(res.strand.beta_at(9), std::out_of_range);
  }

  TEST_CASE("kernel bases dumped by the strand are canonical") {
    syzygy::StrandOptions opt;
    opt.keep_bases = true;
    auto res = syzygy::linear_strand(codes::ternary_golay(), opt);
    REQUIRE(res.bases.size() >= 2);
    for (const auto& b : res.bases)
      CHECK(linalg::rref(b.basis).matrix == b.basis);
  }
}
