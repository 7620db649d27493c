#include "doctest.h"
#include "simflat/algebra.hpp"
#include "simflat/error.hpp"
#include "simflat/zorder.hpp"
#include "simflat/families.hpp"

using namespace simflat;

TEST_CASE("cyclic groups") {
  CHECK(cyclic_group(4).order() == 4);
  MatrixGroup c5 = cyclic_group(5);
  CHECK(c5.dim() == 4);
  CHECK(c5.order() == 5);
  MatrixGroup c6 = cyclic_group(6);
  CHECK(c6.dim() == 2);
  CHECK(c6.order() == 6);
  CHECK_THROWS_AS((void)cyclic_group(2), Error);
}

TEST_CASE("cp_co family") {
  MatrixGroup g5 = cp_co(5);
  CHECK(g5.dim() == 4);
  CHECK(g5.order() == 10);
  MatrixGroup g7 = cp_co(7);
  CHECK(g7.dim() == 6);
  CHECK(g7.order() == 42);
  MatrixGroup g13 = cp_co(13);
  CHECK(g13.dim() == 12);
  CHECK(g13.order() == 78);
  CHECK_THROWS_AS((void)cp_co(9), Error);
}

TEST_CASE("quasidihedral groups") {
  MatrixGroup q4 = qd_group(4);
  CHECK(q4.dim() == 4);
  CHECK(q4.order() == 16);
  MatrixGroup q5 = qd_group(5);
  CHECK(q5.dim() == 8);
  CHECK(q5.order() == 32);
  CHECK_THROWS_AS((void)qd_group(3), Error);
  // defining relation x^y = x^(2^(n-2)-1) as matrices, n = 6
  MatrixGroup q6 = qd_group(6);
  const QMat& x = q6.generators()[0];
  const QMat& y = q6.generators()[1];
  QMat lhs = *y.inverse() * x * y;
  QMat rhs = x.pow(Int((1 << 4) - 1));
  CHECK(lhs == rhs);
  CHECK(y * y == QMat::identity(16));
  CHECK(x.pow(Int(32)).is_identity());
  CHECK_FALSE(x.pow(Int(16)).is_identity());
}

TEST_CASE("extraspecial 2-groups") {
  CHECK(extraspecial_T(1).order() == 8);
  MatrixGroup t2 = extraspecial_T(2);
  CHECK(t2.order() == 32);
  auto z = center_of(t2.elements(), t2.generators());
  CHECK(z.size() == 2);
  auto der = derived_subgroup(t2);
  CHECK(der.size() == 2);
  CHECK(extraspecial_T(3).order() == 128);
}

TEST_CASE("extraspecial p-groups") {
  auto e3 = extraspecial_p(3, 1);
  CHECK(e3.group.dim() == 6);
  CHECK(e3.group.order() == 27);
  CHECK(min_poly(e3.zeta_action) == cyclotomic(3));
  // center acts as zeta_p
  auto z = center_of(e3.group.elements(), e3.group.generators());
  CHECK(z.size() == 3);
  bool zeta_in_center = false;
  for (auto& c : z)
    if (c == e3.zeta_action) zeta_in_center = true;
  CHECK(zeta_in_center);

  auto e5 = extraspecial_p(5, 1);
  CHECK(e5.group.dim() == 20);
  CHECK(e5.group.order() == 125);
  CHECK(min_poly(e5.zeta_action) == cyclotomic(5));
}

TEST_CASE("wall lattices") {
  WallPair w1 = wall_lattices(1);
  CHECK(w1.L == Lattice::standard(2));
  CHECK(w1.Lp == Lattice(QMat::from_int(2, 2, {1, 1, 0, 2})));
  CHECK(lattice_index(w1.Lp, w1.L) == 2);

  WallPair w2 = wall_lattices(2);
  CHECK(gram(w2.L, QMat::identity(4)).det() == Rat(4));
  CHECK(gram(w2.Lp, QMat::identity(4)).det() == Rat(64));
  QMat expected(0, 4);
  expected = expected.vcat(QMat::from_int(1, 4, {1, 1, 1, 1}));
  expected = expected.vcat(QMat::from_int(1, 4, {0, 2, 0, 0}));
  expected = expected.vcat(QMat::from_int(1, 4, {0, 0, 2, 0}));
  expected = expected.vcat(QMat::from_int(1, 4, {0, 0, 0, 2}));
  CHECK(w2.Lp == Lattice(expected));

  WallPair w3 = wall_lattices(3);
  CHECK(w3.L.contains(w3.Lp));
  CHECK(w3.Lp.contains(w3.L.scaled(Rat(2))));

  // T_n stabilizes both lattices
  for (int n = 1; n <= 3; ++n) {
    WallPair w = wall_lattices(n);
    MatrixGroup t = extraspecial_T(n);
    for (const auto& g : t.generators()) {
      CHECK(w.L.image(g) == w.L);
      CHECK(w.Lp.image(g) == w.Lp);
    }
  }
}

TEST_CASE("wall gauss lattices") {
  GaussLattice2 m1 = wall_M(1);
  CHECK(m1.blowup.rank() == 4);
  CHECK(m1.sqrt_minus2 * m1.sqrt_minus2 == QMat::identity(4) * Rat(-2));
  CHECK(m1.blowup.contains(m1.blowup.image(m1.sqrt_minus2)));

  GaussLattice2 m2 = wall_M(2);
  CHECK(m2.blowup.rank() == 8);
  CHECK(gauss_tensor(m1, m1) == m2.blowup);

  GaussLattice2 m3 = wall_M(3);
  CHECK(gauss_tensor(m2, m1) == m3.blowup);
  CHECK(m3.sqrt_minus2 * m3.sqrt_minus2 == QMat::identity(16) * Rat(-2));

  for (int n = 1; n <= 4; ++n) {
    QMat h = wall_h(n);
    CHECK(h * h == QMat::identity(1 << n) * Rat(2));
  }
}

TEST_CASE("minkowski bound") {
  CHECK(minkowski_bound(1) == 2);
  CHECK(minkowski_bound(2) == 24);
  CHECK(minkowski_bound(3) == 48);
  CHECK(minkowski_bound(4) == 5760);
  // every family order divides the bound of its dimension
  CHECK(minkowski_bound(2) % cyclic_group(4).order() == 0);
  CHECK(minkowski_bound(2) % cyclic_group(6).order() == 0);
  CHECK(minkowski_bound(4) % gl23().order() == 0);
  CHECK(minkowski_bound(4) % sl23_circ_c3().order() == 0);
  CHECK(minkowski_bound(4) % cp_co(5).order() == 0);
  CHECK(minkowski_bound(4) % qd_group(4).order() == 0);
}

TEST_CASE("fitting candidates") {
  auto has = [](const std::vector<FittingCandidate>& v, const std::string& n, long p) {
    for (auto& c : v)
      if (c.name == n && c.p == p) return true;
    return false;
  };
  auto c12 = fitting_candidates(12);
  std::vector<std::string> expect2 = {"C2",  "C4",   "C8",    "D8",    "Q8",
                                      "D16", "QD16", "D8tC4", "2+^(1+4)"};
  long count2 = 0;
  for (auto& c : c12)
    if (c.p == 2) ++count2;
  CHECK(count2 == (long)expect2.size());
  for (auto& n : expect2) CHECK(has(c12, n, 2));
  CHECK(has(c12, "C5", 5));
  CHECK(has(c12, "C7", 7));
  CHECK_FALSE(has(c12, "C25", 5));
  // degree column
  for (auto& c : c12)
    if (c.name == "C5") CHECK(c.degree == 4);

  auto c2 = fitting_candidates(2);
  long n2 = 0, n3 = 0;
  for (auto& c : c2) {
    if (c.p == 2) ++n2;
    if (c.p == 3) ++n3;
  }
  CHECK(n2 == 2);  // C2, C4
  CHECK(n3 == 1);  // C3
  CHECK(has(c2, "C2", 2));
  CHECK(has(c2, "C4", 2));
  CHECK(has(c2, "C3", 3));
  CHECK_FALSE(has(c2, "D8", 2));
}

TEST_CASE("explicit database groups") {
  CHECK(sl23().order() == 24);
  CHECK(gl23().order() == 48);
  CHECK(sl23_circ_c3().order() == 72);
  CHECK(c4_tensor_aut_a2().order() == 24);
  CHECK(aut_a2().order() == 12);
  // the Hurwitz lattice is the SL2(3)-span
  ZOrder hur = enveloping_order(sl23());
  CHECK(hur.rank() == 4);
}
