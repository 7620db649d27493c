#include "doctest.h"
#include "simflat/error.hpp"
#include "simflat/lattice.hpp"

using namespace simflat;

namespace {
QMat I2 = QMat::identity(2);
QMat gramA2 = QMat::from_int(2, 2, {2, 1, 1, 2});
QMat J1 = QMat::from_int(2, 2, {0, 1, -1, 0});
}  // namespace

TEST_CASE("dual lattice") {
  Lattice z2 = Lattice::standard(2);
  CHECK(dual_lattice(z2, I2) == z2);
  CHECK(dual_lattice(z2, I2 * Rat(2)) == z2.scaled(Rat(1, 2)));
  // A2 root lattice: dual has index 3
  Lattice a2 = Lattice::standard(2);
  Lattice dual = dual_lattice(a2, gramA2);
  CHECK(lattice_index(a2, dual) == 3);
  // involution
  CHECK(dual_lattice(dual_lattice(a2, gramA2), gramA2) == a2);
  QMat sing = QMat::from_int(2, 2, {1, 1, 1, 1});
  CHECK_THROWS_AS((void)dual_lattice(z2, sing), Error);
}

TEST_CASE("sum and intersection") {
  Lattice z2 = Lattice::standard(2);
  Lattice half = z2.scaled(Rat(1, 2));
  CHECK(lattice_intersect(z2, half) == z2);
  Lattice a(QMat::from_int(2, 2, {1, 1, 2, 0}));
  CHECK(lattice_sum(a, z2) == z2);
  Lattice l1(QMat::from_int(2, 2, {2, 0, 0, 1}));
  Lattice l2(QMat::from_int(2, 2, {1, 0, 0, 2}));
  CHECK(lattice_intersect(l1, l2) == Lattice(QMat::from_int(2, 2, {2, 0, 0, 2})));
  Lattice l3(QMat::identity(3));
  CHECK_THROWS_AS((void)lattice_sum(l1, l3), Error);
}

TEST_CASE("short vectors") {
  Lattice z2 = Lattice::standard(2);
  auto sv = short_vectors(z2, I2, Rat(1));
  REQUIRE(sv.size() == 2);
  CHECK(sv[0].norm == Rat(1));
  // hexagonal: 3 +- pairs of norm 2
  auto hex = short_vectors(z2, gramA2, Rat(2));
  CHECK(hex.size() == 3);
  for (auto& s : hex) CHECK(s.norm == Rat(2));
  // anisotropic direction
  auto an = short_vectors(z2, QMat::from_int(2, 2, {1, 0, 0, 4}), Rat(1));
  REQUIRE(an.size() == 1);
  CHECK(an[0].v == QMat::from_int(1, 2, {1, 0}));
  CHECK_THROWS_AS((void)short_vectors(z2, J1, Rat(2)), Error);
}

TEST_CASE("short vectors against brute force") {
  // random-ish gram, compare against a box scan
  QMat a = QMat::from_int(3, 3, {1, 0, 1, -1, 2, 0, 0, 1, 3});
  QMat g = a * a.transpose();
  Lattice z3 = Lattice::standard(3);
  Rat bound(20);
  auto sv = short_vectors(z3, g, bound);
  long count = 0;
  for (long x = -8; x <= 8; ++x)
    for (long y = -8; y <= 8; ++y)
      for (long z = -8; z <= 8; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        QMat v = QMat::from_int(1, 3, {x, y, z});
        Rat n = (v * g * v.transpose()).at(0, 0);
        if (n <= bound) ++count;
      }
  CHECK(count == 2 * (long)sv.size());
  for (auto& s : sv) {
    CHECK((s.v * g * s.v.transpose()).at(0, 0) == s.norm);
    CHECK(s.norm <= bound);
    CHECK(s.norm > 0);
  }
}

TEST_CASE("short vectors stable under base change") {
  QMat u = QMat::from_int(2, 2, {1, 3, 0, 1});
  Lattice z2 = Lattice::standard(2);
  Lattice same(u);  // same lattice, different generating set
  auto a = short_vectors(z2, gramA2, Rat(6));
  auto b = short_vectors(same, gramA2, Rat(6));
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].v == b[i].v);
}

TEST_CASE("normalize_pair examples") {
  Lattice z2 = Lattice::standard(2);
  // already normalized
  IntegralPair p1{z2, QMat::from_int(2, 2, {1, 0, 0, 2})};
  IntegralPair n1 = normalize_pair(p1);
  CHECK(n1.lattice == p1.lattice);
  CHECK(n1.form == p1.form);
  // diag(2,2) -> determinant 1
  IntegralPair p2{z2, I2 * Rat(2)};
  CHECK(pair_det(normalize_pair(p2)) == 1);
  // diag(1,4) -> determinant 1
  IntegralPair p3{z2, QMat::from_int(2, 2, {1, 0, 0, 4})};
  CHECK(pair_det(normalize_pair(p3)) == 1);
  // mixed determinant diag(2,6) -> C3 quotient
  IntegralPair p4{z2, QMat::from_int(2, 2, {2, 0, 0, 6})};
  IntegralPair n4 = normalize_pair(p4);
  CHECK(pair_det(n4) == 3);
  // non-integral rejected
  IntegralPair bad{z2, I2 * Rat(1, 2)};
  CHECK_THROWS_AS((void)normalize_pair(bad), Error);
}

TEST_CASE("normalize_pair idempotent and quotient shape") {
  Lattice z3 = Lattice::standard(3);
  QMat f = QMat::from_int(3, 3, {4, 1, 0, 1, 6, 1, 0, 1, 8});
  IntegralPair n = normalize_pair({z3, f});
  IntegralPair nn = normalize_pair(n);
  CHECK(n.lattice == nn.lattice);
  CHECK(n.form == nn.form);
  auto inv = quotient_invariants(n.lattice, dual_lattice(n.lattice, n.form));
  Int expo = inv.empty() ? Int(1) : inv.back();
  for (auto& q : prime_divisors(expo)) {
    CHECK(expo % (q * q) != 0);
    int rank = 0;
    for (auto& d : inv)
      if (d % q == 0) ++rank;
    CHECK(2 * rank <= 3);
  }
}

TEST_CASE("perp decomposition") {
  Lattice z2 = Lattice::standard(2);
  auto c1 = perp_decompose(z2, {I2});
  CHECK(c1.size() == 2);
  auto c2 = perp_decompose(z2, {I2, J1});
  CHECK(c2.size() == 1);
  auto c3 = perp_decompose(z2, {gramA2});
  CHECK(c3.size() == 1);
  // components sum back to L and are pairwise perpendicular
  Lattice z4 = Lattice::standard(4);
  QMat f4 = QMat::from_int(4, 4, {1, 0, 0, 0, 0, 2, 1, 0, 0, 1, 2, 0, 0, 0, 0, 3});
  auto c4 = perp_decompose(z4, {f4});
  CHECK(c4.size() == 3);
  Lattice sum = c4[0];
  for (size_t i = 1; i < c4.size(); ++i) sum = lattice_sum(sum, c4[i]);
  CHECK(sum == z4);
  for (size_t i = 0; i < c4.size(); ++i)
    for (size_t j = i + 1; j < c4.size(); ++j)
      CHECK((c4[i].basis() * f4 * c4[j].basis().transpose()).is_zero());
}
