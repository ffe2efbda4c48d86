#include <doctest.h>

#include <sstream>

#include "syzkit/linalg.hpp"

using namespace syzkit;
using linalg::MatrixFq;
using linalg::Storage;

TEST_SUITE("linalg") {
  TEST_CASE("rref on identity and zero") {
    gf::Field f2 = gf::make_field(2, 1);
    MatrixFq id = MatrixFq::identity(f2, 5);
    auto r = linalg::rref(id);
    CHECK(r.rank == 5);
    CHECK(r.matrix == id);
    CHECK(r.pivots == std::vector<size_t>{0, 1, 2, 3, 4});

    MatrixFq z(f2, 3, 4);
    auto rz = linalg::rref(z);
    CHECK(rz.rank == 0);
    CHECK(linalg::is_zero(rz.matrix));
  }

  TEST_CASE("rref rank example over GF(2)") {
    gf::Field f2 = gf::make_field(2, 1);
    MatrixFq m = MatrixFq::from_rows(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(linalg::rref(m).rank == 2);  // row3 = row1 + row2
    CHECK(linalg::rank_of(m) == 2);
  }

  TEST_CASE("rref idempotence") {
    Rng rng(10);
    for (auto q : {2, 3, 4, 16}) {
      gf::Field f = linalg::field_of_order(q);
      for (int i = 0; i < 10; ++i) {
        MatrixFq m = linalg::random_matrix(f, 6 + rng.below(6), 8, rng);
        MatrixFq r = linalg::rref(m).matrix;
        CHECK(linalg::rref(r).matrix == r);
      }
    }
  }

  TEST_CASE("left kernel basics") {
    gf::Field f2 = gf::make_field(2, 1);
    CHECK(linalg::left_kernel_basis(MatrixFq::identity(f2, 4)).rows() == 0);
    MatrixFq dup = MatrixFq::from_rows(f2, {{1, 0}, {1, 0}});
    MatrixFq k = linalg::left_kernel_basis(dup);
    CHECK(k == MatrixFq::from_rows(f2, {{1, 1}}));
  }

  TEST_CASE("left kernel of a random 6x9 over GF(3)") {
    gf::Field f3 = gf::make_field(3, 1);
    Rng rng(42);
    MatrixFq m = linalg::random_matrix(f3, 6, 9, rng);
    // force some dependent rows
    m.row_axpy(4, m, 0, 1);
    m.row_axpy(4, m, 1, 2);
    for (size_t j = 0; j < 9; ++j) m.set(5, j, m.get(4, j));
    size_t rank = linalg::rank_of(m);
    MatrixFq k = linalg::left_kernel_basis(m);
    CHECK(k.rows() == 6 - rank);
    CHECK(linalg::is_zero(linalg::mat_mul(k, m)));
    // kernel basis is itself canonical
    CHECK(linalg::rref(k).matrix == k);
  }

  TEST_CASE("rank plus kernel dimension equals rows") {
    Rng rng(11);
    for (auto q : {2, 3, 4, 5, 8, 9}) {
      gf::Field f = linalg::field_of_order(q);
      for (int i = 0; i < 8; ++i) {
        size_t rows = 1 + rng.below(20), cols = 1 + rng.below(20);
        MatrixFq m = linalg::random_matrix(f, rows, cols, rng);
        MatrixFq k = linalg::left_kernel_basis(m);
        CHECK(linalg::rank_of(m) + k.rows() == rows);
        CHECK(linalg::is_zero(linalg::mat_mul(k, m)));
      }
    }
  }

  TEST_CASE("mat_mul") {
    gf::Field f2 = gf::make_field(2, 1);
    MatrixFq a = MatrixFq::from_rows(f2, {{1, 1}, {0, 1}});
    MatrixFq b = MatrixFq::from_rows(f2, {{1, 0}, {1, 1}});
    CHECK(linalg::mat_mul(a, b) == MatrixFq::from_rows(f2, {{0, 1}, {1, 1}}));
    CHECK(linalg::mat_mul(a, MatrixFq::identity(f2, 2)) == a);
    CHECK_THROWS_AS(linalg::mat_mul(a, MatrixFq(f2, 3, 2)),
                    std::invalid_argument);
    // exactness over a bigger field
    gf::Field f9 = gf::make_field(3, 2);
    Rng rng(3);
    MatrixFq x = linalg::random_matrix(f9, 4, 5, rng);
    MatrixFq y = linalg::random_matrix(f9, 5, 3, rng);
    MatrixFq xy = linalg::mat_mul(x, y);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 3; ++j) {
        uint32_t acc = 0;
        for (size_t l = 0; l < 5; ++l)
          acc = f9.add(acc, f9.mul(x.get(i, l), y.get(l, j)));
        CHECK(xy.get(i, j) == acc);
      }
  }

  TEST_CASE("packed GF(2) path agrees with the generic path") {
    gf::Field f2 = gf::make_field(2, 1);
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
      size_t rows = 1 + rng.below(512), cols = 1 + rng.below(512);
      // keep the expected cost sane while still hitting large shapes
      if (i >= 20) {
        rows = 1 + rng.below(96);
        cols = 1 + rng.below(96);
      }
      MatrixFq packed = linalg::random_matrix(f2, rows, cols, rng);
      MatrixFq generic = packed.with_storage(Storage::words);
      auto rp = linalg::rref(packed);
      auto rg = linalg::rref(generic);
      CHECK(rp.rank == rg.rank);
      CHECK(rp.pivots == rg.pivots);
      CHECK(rp.matrix == rg.matrix.with_storage(Storage::bitplanes));
      MatrixFq kp = linalg::left_kernel_basis(packed);
      MatrixFq kg = linalg::left_kernel_basis(generic);
      CHECK(kp == kg.with_storage(Storage::bitplanes));
    }
  }

  TEST_CASE("bitplane GF(4) path agrees with the generic path") {
    gf::Field f4 = gf::make_field(2, 2);
    Rng rng(78);
    for (int i = 0; i < 40; ++i) {
      size_t rows = 1 + rng.below(48), cols = 1 + rng.below(48);
      MatrixFq packed = linalg::random_matrix(f4, rows, cols, rng);
      MatrixFq generic = packed.with_storage(Storage::words);
      CHECK(linalg::rref(packed).matrix ==
            linalg::rref(generic).matrix.with_storage(Storage::bitplanes));
      CHECK(linalg::left_kernel_basis(packed) ==
            linalg::left_kernel_basis(generic).with_storage(Storage::bitplanes));
    }
  }

  TEST_CASE("matrix text format round-trips") {
    gf::Field f4 = gf::make_field(2, 2);
    Rng rng(8);
    MatrixFq m = linalg::random_matrix(f4, 5, 7, rng);
    std::stringstream ss;
    linalg::write_matrix_text(ss, m);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "4 5 7");
    ss.seekg(0);
    MatrixFq back = linalg::read_matrix_text(ss);
    CHECK(back == m);
  }

  TEST_CASE("field_of_order") {
    CHECK(linalg::field_of_order(4).degree() == 2);
    CHECK(linalg::field_of_order(27).p() == 3);
    CHECK(linalg::field_of_order(1024).degree() == 10);
    CHECK_THROWS_AS(linalg::field_of_order(6), std::invalid_argument);
  }

  TEST_CASE("transpose and column selection") {
    gf::Field f3 = gf::make_field(3, 1);
    Rng rng(9);
    MatrixFq m = linalg::random_matrix(f3, 4, 6, rng);
    MatrixFq t = m.transposed();
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 6; ++j) CHECK(m.get(i, j) == t.get(j, i));
    MatrixFq sel = m.select_columns({5, 0, 2});
    CHECK(sel.cols() == 3);
    CHECK(sel.get(1, 0) == m.get(1, 5));
    CHECK(sel.get(3, 2) == m.get(3, 2));
  }
}
