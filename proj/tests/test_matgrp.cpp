#include "doctest.h"
#include "simflat/algebra.hpp"
#include "simflat/error.hpp"
#include "simflat/families.hpp"
#include "simflat/matgrp.hpp"

using namespace simflat;

namespace {
MatrixGroup c4() { return MatrixGroup(2, {QMat::from_int(2, 2, {0, 1, -1, 0})}); }
}  // namespace

TEST_CASE("enumerate_group") {
  CHECK(c4().order() == 4);
  CHECK(MatrixGroup::trivial(3).order() == 1);
  CHECK(wreath(c4(), 2).order() == 32);
  CHECK(wreath(cyclic_group(6), 2).order() == 72);
  // cap errors out
  CHECK_THROWS_AS((void)cyclic_group(12).order(5), Error);
}

TEST_CASE("enumeration is conjugation invariant") {
  QMat u = QMat::from_int(2, 2, {1, 1, 0, 1});
  auto ui = *u.inverse();
  MatrixGroup c6 = cyclic_group(6);
  std::vector<QMat> gens;
  for (const auto& g : c6.generators()) gens.push_back(ui * g * u);
  CHECK(MatrixGroup(2, gens).order() == 6);
}

TEST_CASE("fixed_forms") {
  FormSpace fs = fixed_forms(c4());
  CHECK(fs.dim() == 2);
  CHECK(fs.basis_sym.size() == 1);
  CHECK(fs.basis_skew.size() == 1);
  MatrixGroup c4g = c4();
  for (const auto& g : c4g.generators())
    for (const auto& b : fs.basis_sym) CHECK(g * b * g.transpose() == b);

  // trivial group in dim m: full m^2-dimensional form space
  FormSpace ft = fixed_forms(MatrixGroup::trivial(3));
  CHECK(ft.dim() == 9);

  // Aut(A2): skew part vanishes, symmetric part is the Gram line
  FormSpace fa = fixed_forms(aut_a2());
  CHECK(fa.basis_skew.empty());
  REQUIRE(fa.basis_sym.size() == 1);
  CHECK(fa.basis_sym[0] == QMat::from_int(2, 2, {2, 1, 1, 2}));
}

TEST_CASE("average_form") {
  QMat f0 = QMat::from_int(2, 2, {1, 0, 0, 2});
  CHECK(average_form(MatrixGroup::trivial(2), f0) == f0);
  QMat got = average_form(c4(), f0);
  CHECK(got == QMat::identity(2) * Rat(3, 2));
  MatrixGroup swap2(2, {QMat::from_int(2, 2, {0, 1, 1, 0})});
  CHECK(average_form(swap2, f0) == QMat::identity(2) * Rat(3, 2));
  // always invariant and positive definite
  MatrixGroup g = cyclic_group(5);
  QMat f = average_form(g, QMat::identity(4));
  CHECK(is_positive_definite(f));
  for (const auto& x : g.generators()) CHECK(x * f * x.transpose() == f);
}

TEST_CASE("end_algebra") {
  EndAlgebra e1 = end_algebra(c4());
  CHECK(e1.basis.size() == 2);
  CHECK(e1.commutative);
  CHECK(e1.tag == AlgebraTag::ImaginaryQuadratic);
  REQUIRE(e1.min_poly);
  CHECK(e1.min_poly->deg() == 2);

  EndAlgebra e2 = end_algebra(MatrixGroup::trivial(3));
  CHECK(e2.basis.size() == 9);
  CHECK(e2.tag == AlgebraTag::MatrixOverDivision);

  EndAlgebra e3 = end_algebra(q8());
  CHECK(e3.basis.size() == 4);
  CHECK_FALSE(e3.commutative);
  CHECK(e3.tag == AlgebraTag::QuaternionDefinite);
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(c4()));
  CHECK_FALSE(is_symplectic(aut_a2()));
  // odd dimension is never symplectic
  CHECK_FALSE(is_symplectic(MatrixGroup::trivial(3)));
  MatrixGroup c2_3(3, {-QMat::identity(3)});
  CHECK_FALSE(is_symplectic(c2_3));
  // wreath preserves symplecticity
  CHECK(is_symplectic(wreath(c4(), 2)));
  CHECK_FALSE(is_symplectic(wreath(aut_a2(), 2)));
}

TEST_CASE("is_rationally_irreducible") {
  CHECK(is_rationally_irreducible(c4()));
  CHECK_FALSE(is_rationally_irreducible(MatrixGroup(2, {-QMat::identity(2)})));
  CHECK(is_rationally_irreducible(cyclic_group(3)));
  CHECK(is_rationally_irreducible(q8()));
  CHECK_FALSE(is_rationally_irreducible(MatrixGroup::trivial(2)));
}

TEST_CASE("wreath and tensor") {
  MatrixGroup w = wreath(MatrixGroup::trivial(1), 2);
  CHECK(w.order() == 2);
  CHECK(w.dim() == 2);
  MatrixGroup d8(2, {QMat::from_int(2, 2, {0, 1, 1, 0}), QMat::from_int(2, 2, {1, 0, 0, -1})});
  MatrixGroup t2 = tensor(d8, d8);
  CHECK(t2.dim() == 4);
  CHECK(t2.order() == 32);
  MatrixGroup gt = tensor(c4(), MatrixGroup::trivial(1));
  CHECK(gt.order() == 4);
  CHECK(tensor(c4(), c4()).order() == 8);
  CHECK(wreath(cyclic_group(4), 2).order() == 32);
}

TEST_CASE("group helpers") {
  MatrixGroup t2 = extraspecial_T(2);
  CHECK(t2.order() == 32);
  auto z = center_of(t2.elements(), t2.generators());
  CHECK(z.size() == 2);
  auto derived = derived_subgroup(t2);
  CHECK(derived.size() == 2);
  CHECK(element_order(QMat::from_int(2, 2, {0, 1, -1, 0})) == 4);
  auto core = p_core(wreath(cyclic_group(6), 2), 3);
  CHECK(core.size() == 9);
  auto core2 = p_core(wreath(cyclic_group(6), 2), 2);
  CHECK(core2.size() == 4);
}

TEST_CASE("form space dimension equals End dimension for shipped groups") {
  for (auto g : {cyclic_group(4), cyclic_group(6), q8(), gl23()}) {
    FormSpace fs = fixed_forms(g);
    EndAlgebra e = end_algebra(g);
    CHECK(fs.dim() == (int)e.basis.size());
  }
}
