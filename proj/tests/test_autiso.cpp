#include <functional>
#include <random>

#include "doctest.h"
#include "simflat/autiso.hpp"
#include "simflat/error.hpp"
#include "simflat/families.hpp"

using namespace simflat;

namespace {

const QMat I2 = QMat::identity(2);
const QMat J1 = QMat::from_int(2, 2, {0, 1, -1, 0});
const QMat GramA2 = QMat::from_int(2, 2, {2, 1, 1, 2});

// Independent oracle: brute-force search over images of a spanning subset of
// the short-vector set, no fingerprints, no stabilizer chain.
Int brute_force_aut_order(const Lattice& L, const std::vector<QMat>& forms) {
  int m = L.dim();
  QMat g1 = gram(L, forms[0]);
  Rat bound = g1.at(0, 0);
  for (int i = 1; i < m; ++i) bound = std::max(bound, g1.at(i, i));
  auto sv = short_vectors(L, forms[0], bound);
  std::vector<QMat> vecs;
  for (auto& s : sv) {
    vecs.push_back(s.v);
    vecs.push_back(-s.v);
  }
  // greedy spanning subset
  std::vector<int> span;
  QMat stack(0, m);
  for (size_t i = 0; i < vecs.size() && (int)span.size() < m; ++i) {
    QMat trial = stack.vcat(vecs[i]);
    if (trial.rank() == (int)span.size() + 1) {
      span.push_back((int)i);
      stack = trial;
    }
  }
  REQUIRE((int)span.size() == m);
  auto sinv = *stack.inverse();

  long count = 0;
  std::vector<int> img(m, 0);
  auto pair_ok = [&](int lvl) {
    for (const auto& f : forms) {
      for (int l = 0; l <= lvl; ++l) {
        Rat want = (vecs[span[lvl]] * f * vecs[span[l]].transpose()).at(0, 0);
        Rat got = (vecs[img[lvl]] * f * vecs[img[l]].transpose()).at(0, 0);
        if (want != got) return false;
        Rat want2 = (vecs[span[l]] * f * vecs[span[lvl]].transpose()).at(0, 0);
        Rat got2 = (vecs[img[l]] * f * vecs[img[lvl]].transpose()).at(0, 0);
        if (want2 != got2) return false;
      }
    }
    return true;
  };
  std::function<void(int)> rec = [&](int lvl) {
    if (lvl == m) {
      QMat target(0, m);
      for (int i = 0; i < m; ++i) target = target.vcat(vecs[img[i]]);
      QMat g = sinv * target;
      if (abs(g.det()) != 1) return;
      QMat coords = L.basis() * g * *L.basis().inverse();
      if (!coords.is_integral()) return;
      for (const auto& f : forms)
        if (g * f * g.transpose() != f) return;
      ++count;
      return;
    }
    for (size_t v = 0; v < vecs.size(); ++v) {
      img[lvl] = (int)v;
      if (pair_ok(lvl)) rec(lvl + 1);
    }
  };
  rec(0);
  return Int(count);
}

}  // namespace

TEST_CASE("aut_group basic examples") {
  Lattice z2 = Lattice::standard(2);
  AutResult a1 = aut_group(z2, {I2, {}});
  CHECK(a1.order == 8);
  AutResult a2 = aut_group(z2, {I2, {J1}});
  CHECK(a2.order == 4);
  AutResult a3 = aut_group(z2, {GramA2, {}});
  CHECK(a3.order == 12);
  for (const auto& g : a3.generators) {
    CHECK(g * GramA2 * g.transpose() == GramA2);
    CHECK(Lattice(z2.basis() * g) == z2);
  }
}

TEST_CASE("aut_group order matches enumerated generated group") {
  Lattice z2 = Lattice::standard(2);
  AutResult a = aut_group(z2, {GramA2, {}});
  CHECK(a.group(2).order() == a.order);
  AutResult b = aut_group(z2, {I2, {J1}});
  CHECK(b.group(2).order() == b.order);
}

TEST_CASE("aut_group invariance under base change and form scaling") {
  QMat u = QMat::from_int(2, 2, {3, 1, 2, 1});  // det 1
  Lattice other(u);
  CHECK(aut_group(other, {GramA2, {}}).order == 12);
  CHECK(aut_group(Lattice::standard(2), {GramA2 * Rat(7, 3), {}}).order == 12);
}

TEST_CASE("aut_group agrees with brute force on small lattices") {
  Lattice z2 = Lattice::standard(2);
  CHECK(brute_force_aut_order(z2, {I2}) == aut_group(z2, {I2, {}}).order);
  CHECK(brute_force_aut_order(z2, {GramA2}) == aut_group(z2, {GramA2, {}}).order);
  CHECK(brute_force_aut_order(z2, {I2, J1}) == aut_group(z2, {I2, {J1}}).order);
  std::mt19937 rng(20240815);
  int done = 0;
  while (done < 8) {
    QMat a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = Rat((long)(rng() % 5) - 2);
    if (a.det() == 0) continue;
    QMat g = a * a.transpose();
    Rat d = g.det();
    if (d > 16) continue;
    Lattice z3 = Lattice::standard(3);
    CHECK(brute_force_aut_order(z3, {g}) == aut_group(z3, {g, {}}).order);
    ++done;
  }
}

TEST_CASE("aut_group_K examples") {
  Lattice z2 = Lattice::standard(2);
  AutResult a = aut_group_K(z2, I2, J1);
  CHECK(a.order == 4);
  CHECK_THROWS_AS((void)aut_group_K(z2, I2, QMat::zero(2, 2)), Error);
  try {
    (void)aut_group_K(z2, I2, QMat::zero(2, 2));
  } catch (const Error& e) {
    CHECK(e.code() == Err::ReducibleEndomorphism);
  }
  // Aut_K sits inside the plain automorphism group of the pair
  AutResult full = aut_group(z2, {I2, {J1}});
  CHECK(a.order == full.order);
}

TEST_CASE("isometry basics") {
  Lattice z2 = Lattice::standard(2);
  auto t0 = isometry(z2, {I2, {J1}}, z2, {I2, {J1}});
  REQUIRE(t0);
  CHECK(Lattice(z2.basis() * *t0) == z2);
  CHECK(*t0 * J1 * t0->transpose() == J1);
  auto t1 = isometry(z2, {I2, {J1}}, z2, {I2, {-J1}});
  REQUIRE(t1);
  CHECK(Lattice(z2.basis() * *t1) == z2);
  CHECK(*t1 * (-J1) * t1->transpose() == J1);
  CHECK(*t1 * I2 * t1->transpose() == I2);
  // determinant obstruction
  auto t2 = isometry(z2, {I2, {}}, z2, {I2 * Rat(2), {}});
  CHECK_FALSE(t2);
  // isometric rescaled lattice: (Z^2, diag(2,2)) vs (Z x (1/2)Z, diag(2,8))
  QMat hb(2, 2);
  hb.at(0, 0) = 1;
  hb.at(1, 1) = Rat(1, 2);
  Lattice half(hb);
  auto t3 = isometry(z2, {QMat::from_int(2, 2, {2, 0, 0, 2}), {}}, half,
                     {QMat::from_int(2, 2, {2, 0, 0, 8}), {}});
  REQUIRE(t3);
  CHECK(Lattice(z2.basis() * *t3) == half);
  CHECK(*t3 * QMat::from_int(2, 2, {2, 0, 0, 8}) * t3->transpose() ==
        QMat::from_int(2, 2, {2, 0, 0, 2}));
}

TEST_CASE("isometry consistent with aut conjugation") {
  QMat u = QMat::from_int(2, 2, {1, 1, 0, 1});
  Lattice z2 = Lattice::standard(2);
  QMat g2 = u * GramA2 * u.transpose();
  auto t = isometry(z2, {GramA2, {}}, z2, {g2, {}});
  REQUIRE(t);
  CHECK(*t * g2 * t->transpose() == GramA2);
  AutResult a = aut_group(z2, {GramA2, {}});
  AutResult b = aut_group(z2, {g2, {}});
  CHECK(a.order == b.order);
  auto tinv = *t->inverse();
  for (const auto& g : a.generators) {
    QMat h = tinv * g * *t;
    CHECK(h * g2 * h.transpose() == g2);
    CHECK(h.is_integral());
  }
}

TEST_CASE("stabilize_lattices") {
  Lattice z2 = Lattice::standard(2);
  AutResult d8 = aut_group(z2, {I2, {}});
  // the checkerboard is D8-invariant: nothing changes
  Lattice checker(QMat::from_int(2, 2, {1, 1, 0, 2}));
  AutResult s1 = stabilize_lattices(d8, {checker});
  CHECK(s1.order == 8);
  // scaled copy of the full lattice: nothing changes
  AutResult s2 = stabilize_lattices(d8, {z2.scaled(Rat(3))});
  CHECK(s2.order == 8);
  // an anisotropic sublattice cuts the swap
  Lattice skew(QMat::from_int(2, 2, {1, 0, 0, 2}));
  AutResult s3 = stabilize_lattices(d8, {skew});
  CHECK(s3.order == 4);
  for (const auto& g : s3.generators) CHECK(Lattice(skew.basis() * g) == skew);
}
