#include "doctest.h"
#include "simflat/families.hpp"
#include "simflat/poly.hpp"

using namespace simflat;

TEST_CASE("poly arithmetic and gcd") {
  QPoly f = QPoly::from_int({-1, 0, 1});  // X^2 - 1
  QPoly g = QPoly::from_int({1, 1});      // X + 1
  auto [q, r] = f.divrem(g);
  CHECK(r.is_zero());
  CHECK(q == QPoly::from_int({-1, 1}));
  CHECK(poly_gcd(f, g) == g.monic());
  CHECK(poly_lcm(g, QPoly::from_int({-1, 1})) == f.monic());
  CHECK(f.derivative() == QPoly::from_int({0, 2}));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == QPoly::from_int({-1, 1}));
  CHECK(cyclotomic(4) == QPoly::from_int({1, 0, 1}));
  CHECK(cyclotomic(6) == QPoly::from_int({1, -1, 1}));
  CHECK(cyclotomic(8) == QPoly::from_int({1, 0, 0, 0, 1}));
  CHECK(cyclotomic(5) == QPoly::from_int({1, 1, 1, 1, 1}));
  CHECK(cyclotomic(12).deg() == 4);
}

TEST_CASE("min poly of matrices") {
  QMat j = QMat::from_int(2, 2, {0, 1, -1, 0});
  CHECK(min_poly(j) == QPoly::from_int({1, 0, 1}));
  CHECK(min_poly(QMat::identity(3)) == QPoly::from_int({-1, 1}));
  QMat c = companion(cyclotomic(5));
  CHECK(min_poly(c) == cyclotomic(5));
  // nilpotent
  QMat n = QMat::from_int(2, 2, {0, 1, 0, 0});
  CHECK(min_poly(n) == QPoly::from_int({0, 0, 1}));
}

TEST_CASE("factorization over Q") {
  // (X^2+1)(X-2)
  QPoly f = QPoly::from_int({1, 0, 1}) * QPoly::from_int({-2, 1});
  auto fs = factor_q(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == QPoly::from_int({-2, 1}));
  CHECK(fs[1].first == QPoly::from_int({1, 0, 1}));
  CHECK(fs[0].second == 1);
  CHECK(fs[1].second == 1);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible_q(cyclotomic(16)));
  CHECK(is_irreducible_q(cyclotomic(7)));
  CHECK(is_irreducible_q(QPoly::from_int({2, 0, 1})));      // X^2+2
  CHECK(is_irreducible_q(QPoly::from_int({2, 4, 0, 1})));   // Eisenstein
  CHECK_FALSE(is_irreducible_q(QPoly::from_int({-1, 0, 1})));
  CHECK_FALSE(is_irreducible_q(QPoly::from_int({1, 2, 1})));  // (X+1)^2
  CHECK_FALSE(is_irreducible_q(cyclotomic(4) * cyclotomic(3)));
  // X^4+1 factors mod every prime but is irreducible
  CHECK(is_irreducible_q(QPoly::from_int({1, 0, 0, 0, 1})));
  // swinnerton-dyer-ish: minimal polynomial of sqrt2 + sqrt3
  CHECK(is_irreducible_q(QPoly::from_int({1, 0, -10, 0, 1})));
}

TEST_CASE("multiplicities") {
  QPoly f = QPoly::from_int({1, 1}) * QPoly::from_int({1, 1}) * QPoly::from_int({-3, 1});
  auto fs = factor_q(f);
  REQUIRE(fs.size() == 2);
  bool seen2 = false;
  for (auto& [g, m] : fs)
    if (g == QPoly::from_int({1, 1})) {
      CHECK(m == 2);
      seen2 = true;
    }
  CHECK(seen2);
}
