#include <set>

#include "doctest.h"
#include "simflat/algebra.hpp"
#include "simflat/error.hpp"
#include "simflat/families.hpp"
#include "simflat/fp.hpp"
#include "simflat/zorder.hpp"

using namespace simflat;

namespace {

ZOrder gaussian_integers() {
  return make_order(2, {QMat::identity(2), QMat::from_int(2, 2, {0, 1, -1, 0})});
}

ZOrder conductor2_order() {
  return make_order(2, {QMat::identity(2), QMat::from_int(2, 2, {0, 2, -2, 0})});
}

// coordinates of X in the order basis
std::vector<long> coords_mod_p(const ZOrder& O, const QMat& X, long p) {
  QMat stack(0, O.m * O.m);
  for (auto& b : O.basis) stack = stack.vcat(b.vectorize());
  auto c = stack.solve_left(X.vectorize());
  REQUIRE(c);
  std::vector<long> out(O.rank());
  for (int i = 0; i < O.rank(); ++i) {
    Rat q = c->at(0, i);
    REQUIRE(is_integer(q));
    Int v = q.get_num() % p;
    out[i] = (long)v.get_si();
    if (out[i] < 0) out[i] += p;
  }
  return out;
}

// Brute-force radical of O/pO: elements whose generated right ideal is
// nilpotent.  Needs p^rank small.
std::set<std::vector<long>> brute_force_radical(const ZOrder& O, long p) {
  int r = O.rank();
  // right multiplication matrices in coordinates
  std::vector<FpMat> rmul(r, FpMat(p, r, r));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      auto c = coords_mod_p(O, O.basis[i] * O.basis[j], p);
      for (int k = 0; k < r; ++k) rmul[j].at(i, k) = c[k];
    }
  auto mult = [&](const std::vector<long>& x, const std::vector<long>& y) {
    // (sum x_i b_i)(sum y_j b_j)
    std::vector<long> out(r, 0);
    for (int i = 0; i < r; ++i) {
      if (!x[i]) continue;
      for (int j = 0; j < r; ++j) {
        if (!y[j]) continue;
        for (int k = 0; k < r; ++k)
          out[k] = (out[k] + x[i] * y[j] % p * rmul[j].at(i, k)) % p;
      }
    }
    return out;
  };
  auto right_ideal_nilpotent = [&](const std::vector<long>& x) {
    std::vector<std::vector<long>> rgen;
    for (int j = 0; j < r; ++j) {
      std::vector<long> e(r, 0);
      e[j] = 1;
      rgen.push_back(mult(x, e));
    }
    FpMat R(p, r, r);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) R.at(j, k) = rgen[j][k];
    R = fp_row_space(R);
    FpMat T = R;
    for (int step = 0; step <= r; ++step) {
      if (T.rows == 0) return true;
      FpMat next(p, T.rows * R.rows, r);
      int row = 0;
      for (int a = 0; a < T.rows; ++a)
        for (int b = 0; b < R.rows; ++b, ++row) {
          std::vector<long> ta(r), rb(r);
          for (int k = 0; k < r; ++k) { ta[k] = T.at(a, k); rb[k] = R.at(b, k); }
          auto pr = mult(ta, rb);
          for (int k = 0; k < r; ++k) next.at(row, k) = pr[k];
        }
      FpMat nr = fp_row_space(next);
      if (nr.rows == 0) return true;
      if (nr == T) return false;
      T = nr;
    }
    return false;
  };
  std::set<std::vector<long>> rad;
  std::vector<long> x(r, 0);
  while (true) {
    if (right_ideal_nilpotent(x)) rad.insert(x);
    int i = 0;
    while (i < r && x[i] == p - 1) x[i++] = 0;
    if (i == r) break;
    ++x[i];
  }
  return rad;
}

}  // namespace

TEST_CASE("enveloping orders") {
  ZOrder zi = enveloping_order(MatrixGroup(2, {QMat::from_int(2, 2, {0, 1, -1, 0})}));
  CHECK(zi.rank() == 2);
  CHECK(zi == gaussian_integers());
  ZOrder z3 = enveloping_order(cyclic_group(3));
  CHECK(z3.rank() == 2);
  ZOrder triv = enveloping_order(MatrixGroup::trivial(1));
  CHECK(triv.rank() == 1);
  CHECK(triv.basis[0].is_identity());
}

TEST_CASE("discriminants") {
  CHECK(discriminant(gaussian_integers()) == -4);
  CHECK(discriminant(enveloping_order(cyclic_group(3))) == -3);
  CHECK(discriminant(enveloping_order(MatrixGroup::trivial(1))) == 1);
  CHECK(discriminant(conductor2_order()) == -16);
  ZOrder lip = enveloping_order(q8());
  CHECK(discriminant(lip) == -16);
}

TEST_CASE("arithmetical radical of the Gaussian integers") {
  ZOrder zi = gaussian_integers();
  OrderIdeal rad = arithmetical_radical(zi);
  QMat oneplusi = QMat::identity(2) + QMat::from_int(2, 2, {0, 1, -1, 0});
  QMat coords(0, 4);
  for (auto& b : rad.basis) coords = coords.vcat(b.vectorize());
  Lattice ideal(coords);
  CHECK(ideal.contains(oneplusi.vectorize()));
  CHECK_FALSE(ideal.contains(QMat::identity(2).vectorize()));
  for (auto& v : rad.basis)
    for (auto& b : zi.basis) CHECK(ideal.contains((v * b).vectorize()));
}

TEST_CASE("radical matches brute force") {
  auto check_algebra = [&](const ZOrder& O, long p) {
    auto brute = brute_force_radical(O, p);
    OrderIdeal rad = arithmetical_radical(O);
    std::set<std::vector<long>> image;
    std::vector<std::vector<long>> gens;
    for (auto& v : rad.basis) gens.push_back(coords_mod_p(O, v, p));
    int r = O.rank();
    std::vector<long> c(gens.size(), 0);
    while (true) {
      std::vector<long> x(r, 0);
      for (size_t i = 0; i < gens.size(); ++i)
        for (int k = 0; k < r; ++k) x[k] = (x[k] + c[i] * gens[i][k]) % p;
      image.insert(x);
      size_t i = 0;
      while (i < gens.size() && c[i] == p - 1) c[i++] = 0;
      if (i == gens.size()) break;
      ++c[i];
    }
    CHECK(image == brute);
  };
  check_algebra(gaussian_integers(), 2);
  check_algebra(conductor2_order(), 2);
  check_algebra(enveloping_order(cyclic_group(3)), 3);
  check_algebra(enveloping_order(q8()), 2);  // Lipschitz at 2
}

TEST_CASE("right idealizer") {
  ZOrder zi = gaussian_integers();
  OrderIdeal rad = arithmetical_radical(zi);
  CHECK(right_idealizer(rad) == zi);
  ZOrder cond = conductor2_order();
  OrderIdeal crad = arithmetical_radical(cond);
  CHECK(right_idealizer(crad) == zi);
  std::vector<QMat> pbasis;
  for (auto& b : zi.basis) pbasis.push_back(b * Rat(3));
  OrderIdeal p0{zi, pbasis};
  CHECK(right_idealizer(p0) == zi);
}

TEST_CASE("radical idealizer chain") {
  auto [fix1, s1] = radical_idealizer_chain(gaussian_integers());
  CHECK(s1 == 0);
  CHECK(fix1 == gaussian_integers());
  auto [fix2, s2] = radical_idealizer_chain(conductor2_order());
  CHECK(s2 <= 2);
  CHECK(fix2 == gaussian_integers());
  ZOrder z6 = enveloping_order(cyclic_group(6));
  auto [fix3, s3] = radical_idealizer_chain(z6);
  CHECK(s3 == 0);
  CHECK(fix3 == z6);
  // Lipschitz order climbs to the Hurwitz order
  ZOrder lip = enveloping_order(q8());
  ZOrder hur = enveloping_order(sl23());
  auto [fix4, s4] = radical_idealizer_chain(lip);
  CHECK(fix4 == hur);
  CHECK(s4 >= 1);
  CHECK(abs(discriminant(fix4)) <= abs(discriminant(lip)));
}

TEST_CASE("bravais groups") {
  MatrixGroup c4(2, {QMat::from_int(2, 2, {0, 1, -1, 0})});
  QMat f4 = average_form(c4, QMat::identity(2));
  CHECK(bravais_group(c4, f4).order() == 4);

  MatrixGroup c3 = cyclic_group(3);
  QMat f3 = average_form(c3, QMat::identity(2));
  MatrixGroup b3 = bravais_group(c3, f3);
  CHECK(b3.order() == 6);
  CHECK(bravais_group(b3, f3).order() == 6);  // idempotent

  MatrixGroup q = q8();
  QMat fq = average_form(q, QMat::identity(4));
  MatrixGroup bq = bravais_group(q, fq);
  CHECK(bq.order() == 24);
  FormSpace fsn = fixed_forms(q);
  FormSpace fsb = fixed_forms(bq);
  CHECK(fsn.dim() == fsb.dim());
  // N is normal in B(N)
  MatrixGroup qq = q8();
  const auto& qelems = qq.elements();
  for (const auto& g : bq.generators()) {
    auto gi = *g.inverse();
    for (const auto& n : q.generators()) {
      QMat c = gi * n * g;
      bool in_q = false;
      for (const auto& x : qelems)
        if (x == c) { in_q = true; break; }
      CHECK(in_q);
    }
  }

  MatrixGroup red(2, {-QMat::identity(2)});
  CHECK_THROWS_AS((void)bravais_group(red, QMat::identity(2)), Error);
}
