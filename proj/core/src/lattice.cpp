#include "simflat/lattice.hpp"

#include "simflat/error.hpp"

namespace simflat {

bool Lattice::contains(const QMat& row) const {
  auto x = basis_.solve_left(row);
  return x && x->is_integral();
}

bool Lattice::contains(const Lattice& sub) const {
  for (int i = 0; i < sub.rank(); ++i)
    if (!contains(sub.basis().row(i))) return false;
  return true;
}

QMat gram(const Lattice& L, const QMat& F) {
  return L.basis() * F * L.basis().transpose();
}

Lattice dual_lattice(const Lattice& L, const QMat& F) {
  if (!L.full_rank()) fail(Err::RankDeficient, "dual of non-full-rank lattice");
  if (F.rows() != L.dim() || F.cols() != L.dim()) fail(Err::DimMismatch, "dual_lattice form size");
  QMat g = gram(L, F);
  auto gi = g.inverse();
  if (!gi) fail(Err::SingularForm, "singular form in dual_lattice");
  return Lattice(*gi * L.basis());
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) fail(Err::DimMismatch, "lattice_sum");
  return Lattice(a.basis().vcat(b.basis()));
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) fail(Err::DimMismatch, "lattice_intersect");
  if (!a.full_rank() || !b.full_rank())
    fail(Err::RankDeficient, "lattice_intersect needs full rank");
  QMat id = QMat::identity(a.dim());
  Lattice da = dual_lattice(a, id);
  Lattice db = dual_lattice(b, id);
  return dual_lattice(lattice_sum(da, db), id);
}

std::vector<Int> quotient_invariants(const Lattice& sub, const Lattice& sup) {
  auto binv = sup.basis().inverse();
  if (!binv) fail(Err::RankDeficient, "quotient_invariants needs full rank");
  QMat c = sub.basis() * *binv;
  if (!c.is_integral()) fail(Err::NotIntegral, "sub is not a sublattice of sup");
  return snf_invariants(c);
}

Int lattice_index(const Lattice& sub, const Lattice& sup) {
  Int idx = 1;
  for (auto& d : quotient_invariants(sub, sup)) idx *= d;
  return idx;
}

bool pair_is_integral(const IntegralPair& p) {
  return gram(p.lattice, p.form).is_integral();
}

Int pair_det(const IntegralPair& p) {
  Rat d = gram(p.lattice, p.form).det();
  if (!is_integer(d)) fail(Err::NotIntegral, "pair determinant not integral");
  return d.get_num();
}

IntegralPair normalize_pair(const IntegralPair& p) {
  if (!pair_is_integral(p)) fail(Err::NotIntegral, "normalize_pair needs an integral pair");
  Lattice L = p.lattice;
  QMat F = p.form;
  int m = L.dim();
  while (true) {
    Lattice M = dual_lattice(L, F);
    auto inv = quotient_invariants(L, M);  // quotient M/L
    Int exponent = inv.empty() ? Int(1) : inv.back();
    Int move_p = 0;
    // Rule 1: some prime with square exponent in the quotient.
    for (auto& q : prime_divisors(exponent)) {
      if (exponent % (q * q) == 0) { move_p = q; break; }
    }
    if (move_p == 0) {
      // Rule 2: some prime with p-rank above m/2.
      for (auto& q : prime_divisors(exponent)) {
        int rank_p = 0;
        for (auto& d : inv)
          if (d % q == 0) ++rank_p;
        if (2 * rank_p > m) { move_p = q; break; }
      }
    }
    if (move_p == 0) break;
    Rat pr(move_p);
    L = lattice_intersect(M, L.scaled(1 / pr));
    F = F * pr;
  }
  return {L, F};
}

}  // namespace simflat
