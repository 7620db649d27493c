#include "doctest.h"
#include "simflat/error.hpp"
#include "simflat/hnf.hpp"
#include "simflat/matrix.hpp"

using namespace simflat;

TEST_CASE("matrix arithmetic basics") {
  QMat a = QMat::from_int(2, 2, {1, 2, 3, 4});
  QMat b = QMat::from_int(2, 2, {0, 1, 1, 0});
  CHECK(a * b == QMat::from_int(2, 2, {2, 1, 4, 3}));
  CHECK((a + b) - b == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(a.det() == Rat(-2));
  CHECK(a.trace() == Rat(5));
  auto inv = a.inverse();
  REQUIRE(inv);
  CHECK((a * *inv).is_identity());
  CHECK(QMat::identity(3).pow(Int(5)).is_identity());
  QMat p = b.pow(Int(3));
  CHECK(p == b);
}

TEST_CASE("kron and vectorize") {
  QMat a = QMat::from_int(1, 2, {1, 2});
  QMat b = QMat::from_int(1, 2, {3, 4});
  CHECK(a.kron(b) == QMat::from_int(1, 4, {3, 4, 6, 8}));
  QMat m = QMat::from_int(2, 2, {1, 2, 3, 4});
  CHECK(QMat::unvectorize(m.vectorize(), 2, 2) == m);
}

TEST_CASE("left kernel and solve") {
  QMat m = QMat::from_int(3, 2, {1, 0, 0, 1, 1, 1});
  QMat k = m.left_kernel();
  REQUIRE(k.rows() == 1);
  CHECK((k * m).is_zero());
  auto x = m.solve_left(QMat::from_int(1, 2, {2, 3}));
  REQUIRE(x);
  CHECK(*x * m == QMat::from_int(1, 2, {2, 3}));
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(QMat::from_int(2, 2, {2, 1, 1, 2})));
  CHECK_FALSE(is_positive_definite(QMat::from_int(2, 2, {1, 2, 2, 1})));
  CHECK_FALSE(is_positive_definite(QMat::from_int(2, 2, {0, 1, -1, 0})));
}

TEST_CASE("hnf examples") {
  // rows {(2,0),(1,1)} -> {(1,1),(0,2)}
  QMat m = QMat::from_int(2, 2, {2, 0, 1, 1});
  CHECK(hnf_basis(m) == QMat::from_int(2, 2, {1, 1, 0, 2}));
  CHECK(hnf_basis(QMat::identity(3)) == QMat::identity(3));
  QMat bad = QMat::from_int(2, 2, {1, 0, 1, 0});
  CHECK_THROWS_AS((void)hnf_basis(bad), Error);
  try {
    (void)hnf_basis(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Err::RankDeficient);
  }
}

TEST_CASE("hnf is canonical under row operations") {
  QMat m = QMat::from_int(3, 3, {2, 1, 0, 0, 3, 1, 4, 0, 5});
  QMat u = QMat::from_int(3, 3, {1, 1, 0, 0, 1, 0, 1, 2, 1});  // unimodular
  CHECK(u.det() == Rat(1));
  CHECK(hnf_basis(m) == hnf_basis(u * m));
}

TEST_CASE("snf invariants") {
  QMat m = QMat::from_int(2, 2, {2, 0, 0, 4});
  auto inv = snf_invariants(m);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 4);
  // divisibility fixup case
  QMat n = QMat::from_int(2, 2, {2, 0, 0, 3});
  auto inv2 = snf_invariants(n);
  REQUIRE(inv2.size() == 2);
  CHECK(inv2[0] == 1);
  CHECK(inv2[1] == 6);
}

TEST_CASE("primitive scaling") {
  QMat m(1, 2);
  m.at(0, 0) = Rat(2, 3);
  m.at(0, 1) = Rat(4, 3);
  QMat p = m.primitive_scaled();
  CHECK(p == QMat::from_int(1, 2, {1, 2}));
}
