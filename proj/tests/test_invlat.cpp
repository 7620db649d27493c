#include <set>

#include "doctest.h"
#include "simflat/algebra.hpp"
#include "simflat/error.hpp"
#include "simflat/families.hpp"
#include "simflat/fp.hpp"
#include "simflat/invlat.hpp"

using namespace simflat;

namespace {

MatrixGroup c4() { return MatrixGroup(2, {QMat::from_int(2, 2, {0, 1, -1, 0})}); }

// Brute-force count of proper nonzero invariant subspaces of F_p^n: spans of
// all subsets of projective representatives (needs small p^n).
long brute_force_invariant_subspaces(const std::vector<QMat>& gens, int n, long p) {
  std::vector<FpMat> action;
  for (auto& g : gens) action.push_back(fp_reduce(g, p));
  // all nonzero vectors
  std::vector<std::vector<long>> vecs;
  std::vector<long> v(n, 0);
  while (true) {
    int i = 0;
    while (i < n && v[i] == p - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    vecs.push_back(v);
  }
  std::set<std::vector<long>> spaces;
  size_t nv = vecs.size();
  REQUIRE(nv <= 16);  // subsets must stay enumerable
  for (size_t mask = 1; mask < (size_t(1) << nv); ++mask) {
    FpMat m(p, (int)__builtin_popcountll(mask), n);
    int r = 0;
    for (size_t i = 0; i < nv; ++i)
      if (mask & (size_t(1) << i)) {
        for (int j = 0; j < n; ++j) m.at(r, j) = vecs[i][j];
        ++r;
      }
    FpMat span = fp_row_space(m);
    if (span.rows == 0 || span.rows == n) continue;
    bool inv = true;
    for (auto& a : action) {
      FpMat img = fp_mul(span, a);
      FpMat sum(p, span.rows + img.rows, n);
      for (int i = 0; i < span.rows; ++i)
        for (int j = 0; j < n; ++j) sum.at(i, j) = span.at(i, j);
      for (int i = 0; i < img.rows; ++i)
        for (int j = 0; j < n; ++j) sum.at(span.rows + i, j) = img.at(i, j);
      if (fp_row_space(sum).rows != span.rows) { inv = false; break; }
    }
    if (inv) spaces.insert(span.e);
  }
  return (long)spaces.size();
}

}  // namespace

TEST_CASE("centerings examples") {
  Lattice z2 = Lattice::standard(2);
  auto c2 = centerings(c4(), z2, 2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == Lattice(QMat::from_int(2, 2, {1, 1, 2, 0})));
  CHECK(centerings(c4(), z2, 3).empty());
  // dim 1 has no proper nonzero invariant subspace mod p
  auto t = centerings(MatrixGroup::trivial(1), Lattice::standard(1), 2);
  CHECK(t.empty());
  // invariance required
  MatrixGroup g3 = cyclic_group(3);
  Lattice bad(QMat::from_int(2, 2, {1, 0, 0, 5}));
  CHECK_THROWS_AS((void)centerings(g3, bad, 2), Error);
}

TEST_CASE("every centering is invariant and between pL and L") {
  MatrixGroup g = cyclic_group(6);
  Lattice z2 = Lattice::standard(2);
  for (long p : {2L, 3L}) {
    for (const auto& m : centerings(g, z2, p)) {
      CHECK(z2.contains(m));
      CHECK(m.contains(z2.scaled(Rat(p))));
      for (const auto& x : g.generators()) CHECK(m.image(x) == m);
    }
  }
}

TEST_CASE("centerings count equals brute-force invariant subspace count") {
  // D8 in dim 2 at p = 2 and 3
  MatrixGroup d8(2, {QMat::from_int(2, 2, {0, 1, 1, 0}), QMat::from_int(2, 2, {1, 0, 0, -1})});
  Lattice z2 = Lattice::standard(2);
  CHECK((long)centerings(d8, z2, 2).size() == brute_force_invariant_subspaces(d8.generators(), 2, 2));
  CHECK((long)centerings(d8, z2, 3).size() == brute_force_invariant_subspaces(d8.generators(), 2, 3));
  CHECK((long)centerings(c4(), z2, 2).size() == brute_force_invariant_subspaces(c4().generators(), 2, 2));
  CHECK((long)centerings(c4(), z2, 3).size() == brute_force_invariant_subspaces(c4().generators(), 2, 3));
  // trivial group dim 2: every subspace is invariant
  MatrixGroup triv = MatrixGroup::trivial(2);
  CHECK((long)centerings(triv, z2, 3).size() == brute_force_invariant_subspaces({}, 2, 3));
}

TEST_CASE("lattice classes") {
  Lattice z2 = Lattice::standard(2);
  QMat f4 = average_form(c4(), QMat::identity(2));
  CenteringGraph g1 = lattice_classes(c4(), z2, f4);
  CHECK(g1.class_reps.size() == 1);
  CHECK(g1.nodes.size() >= 1);

  MatrixGroup c5 = cyclic_group(5);
  QMat f5 = average_form(c5, QMat::identity(4));
  QMat stack(0, 4);
  for (const auto& e : c5.elements()) stack = stack.vcat(e);
  CenteringGraph g2 = lattice_classes(c5, Lattice(stack), f5);
  CHECK(g2.class_reps.size() == 1);

  CenteringGraph g3 =
      lattice_classes(MatrixGroup::trivial(1), Lattice::standard(1), QMat::identity(1));
  CHECK(g3.class_reps.size() == 1);
}

TEST_CASE("lattice classes independent of the start node") {
  QMat f = average_form(c4(), QMat::identity(2));
  CenteringGraph a = lattice_classes(c4(), Lattice::standard(2), f);
  Lattice checker(QMat::from_int(2, 2, {1, 1, 2, 0}));
  CenteringGraph b = lattice_classes(c4(), checker, f);
  CHECK(a.class_reps.size() == b.class_reps.size());
}

TEST_CASE("module isomorphism") {
  std::vector<QMat> endb = commutant_basis(c4().generators(), 2);
  Lattice z2 = Lattice::standard(2);
  Lattice checker(QMat::from_int(2, 2, {1, 1, 2, 0}));
  // (1+i) maps Z[i] onto the checkerboard
  auto x = module_isomorphism(z2, checker, endb);
  REQUIRE(x);
  CHECK(Lattice(z2.basis() * *x) == checker);
  auto y = module_isomorphism(checker, z2, endb);
  REQUIRE(y);
  // Z[zeta6] is a PID: the index-3 centering is a principal multiple
  MatrixGroup c6 = cyclic_group(6);
  std::vector<QMat> endb6 = commutant_basis(c6.generators(), 2);
  auto cents = centerings(c6, Lattice::standard(2), 3);
  REQUIRE(cents.size() == 1);
  auto z = module_isomorphism(Lattice::standard(2), cents[0], endb6);
  REQUIRE(z);
  CHECK(Lattice(Lattice::standard(2).basis() * *z) == cents[0]);
}
