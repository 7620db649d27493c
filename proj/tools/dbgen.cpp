// Regenerates the shipped class database (data/simf.db) from the explicit
// constructions.  Maintenance tool; the test suite cross-checks the shipped
// file against these same constructions.

#include <fstream>
#include <iostream>

#include "simflat/autiso.hpp"
#include "simflat/canon.hpp"
#include "simflat/enumerate.hpp"
#include "simflat/error.hpp"
#include "simflat/families.hpp"
#include "simflat/matgrp.hpp"
#include "simflat/simfdb.hpp"
#include "simflat/zorder.hpp"

using namespace simflat;

namespace {

DbEntry make_entry(const std::string& name, const MatrixGroup& G) {
  int m = G.dim();
  QMat f0 = average_form(G, QMat::identity(m));
  auto pairs = minimal_normalized_pairs(G, f0);
  if (pairs.empty()) fail(Err::BadInput, name + ": no normalized pair");
  const auto& mp = pairs.front();
  const QMat& B = mp.lattice.basis();
  auto binv = *B.inverse();
  std::vector<QMat> gens;
  for (const auto& g : G.generators()) gens.push_back(B * g * binv);
  MatrixGroup rebased(m, gens);
  QMat F = (B * mp.form * B.transpose()).primitive_scaled();
  auto skews = qualifying_skews(rebased, F);
  if (skews.empty()) fail(Err::BadInput, name + ": no qualifying skew form");
  QMat S = skews.front();
  AutResult aut = aut_group(Lattice::standard(m), {F, {S}});
  DbEntry e;
  e.dim = m;
  e.order = aut.order;
  e.name = name;
  e.F = F;
  e.S = S;
  std::cerr << name << ": dim " << m << " order " << aut.order.get_str() << "\n";
  return e;
}

MatrixGroup wall_dim8_group() {
  GaussLattice2 m2 = wall_M(2);
  int d = 1 << 2;
  QMat F = QMat::zero(2 * d, 2 * d);
  for (int i = 0; i < d; ++i) {
    F.at(i, i) = 1;
    F.at(d + i, d + i) = 2;
  }
  QMat S = m2.sqrt_minus2 * F;
  AutResult aut = aut_group_K(m2.blowup, F, S);
  return aut.group(2 * d);
}

MatrixGroup d8_2dim() {
  return MatrixGroup(2, {QMat::from_int(2, 2, {0, 1, 1, 0}), QMat::from_int(2, 2, {1, 0, 0, -1})});
}

}  // namespace

int main(int argc, char** argv) {
  std::string out = argc > 1 ? argv[1] : "data/simf.db";
  std::vector<DbEntry> entries;

  entries.push_back(make_entry("C4", cyclic_group(4)));
  entries.push_back(make_entry("C6", cyclic_group(6)));

  {
    QMat f0 = average_form(tensor(d8_2dim(), cyclic_group(4)), QMat::identity(4));
    MatrixGroup b = bravais_group(tensor(d8_2dim(), cyclic_group(4)), f0);
    entries.push_back(make_entry("D8tC4.S3", b));
  }
  entries.push_back(make_entry("C4tA2", c4_tensor_aut_a2()));
  entries.push_back(make_entry("GL23", gl23()));
  entries.push_back(make_entry("SL23oC3", sl23_circ_c3()));
  entries.push_back(make_entry("C10", cp_co(5)));
  entries.push_back(make_entry("C6wS2", wreath(cyclic_group(6), 2)));

  entries.push_back(make_entry("QD32", qd_group(5)));
  entries.push_back(make_entry("2+1+4.O4+2:2", wall_dim8_group()));

  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return 1;
  }
  db_write(f, entries);
  std::cerr << "wrote " << entries.size() << " entries to " << out << "\n";
  return 0;
}
