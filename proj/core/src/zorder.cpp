#include "simflat/zorder.hpp"

#include <sstream>

#include "simflat/algebra.hpp"
#include "simflat/error.hpp"
#include "simflat/fp.hpp"
#include "simflat/invlat.hpp"

namespace simflat {

std::string ZOrder::key() const {
  std::ostringstream os;
  for (auto& b : basis) os << b.key() << '#';
  return os.str();
}

ZOrder make_order(int m, const std::vector<QMat>& spanning) {
  QMat stack(0, m * m);
  for (auto& s : spanning) stack = stack.vcat(s.vectorize());
  QMat h = hnf_rows(stack);
  ZOrder O;
  O.m = m;
  for (int i = 0; i < h.rows(); ++i) O.basis.push_back(QMat::unvectorize(h.row(i), m, m));
  return O;
}

ZOrder enveloping_order(const MatrixGroup& N, long cap) {
  return make_order(N.dim(), N.elements(cap));
}

Int discriminant(const ZOrder& O) {
  int r = O.rank();
  EndAlgebra cls = classify_algebra(O.basis, O.m);
  bool reduced = cls.tag == AlgebraTag::QuaternionDefinite;
  QMat g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat t = (O.basis[i] * O.basis[j]).trace();
      if (reduced) t = t * Rat(2, (long)O.m);
      g.at(i, j) = t;
    }
  Rat d = g.det();
  if (!is_integer(d)) fail(Err::NotIntegral, "order trace form determinant not integral");
  return d.get_num();
}

namespace {

// Coordinates of X in the Z-basis `basis` (must be consistent).
QMat coords_in(const std::vector<QMat>& basis, const QMat& X) {
  QMat stack(0, X.rows() * X.cols());
  for (auto& b : basis) stack = stack.vcat(b.vectorize());
  auto c = stack.solve_left(X.vectorize());
  if (!c) fail(Err::BadParameter, "element outside the algebra span");
  return *c;
}

}  // namespace

OrderIdeal arithmetical_radical(const ZOrder& O) {
  int r = O.rank();
  Int disc = discriminant(O);
  auto primes = prime_divisors(disc);
  if (primes.empty()) return {O, O.basis};

  std::vector<Lattice> ideals;
  for (const auto& pz : primes) {
    long p = (long)pz.get_si();
    // radical of O/pO by the iterated p-power-trace kernel
    // current subspace: rows of integer coefficient combinations of basis
    QMat cur = QMat::identity(r);  // coefficient rows
    int e = 0;
    Int pe = 1;
    while (pe < r) { pe *= p; ++e; }
    for (int k = 0; k <= e; ++k) {
      Int pk = pow_int(Int(p), (unsigned long)k);
      // lift the current coefficient rows to matrices
      std::vector<QMat> lifts;
      for (int i = 0; i < cur.rows(); ++i) {
        QMat x = QMat::zero(O.m, O.m);
        for (int j = 0; j < r; ++j)
          if (cur.at(i, j) != 0) x = x + O.basis[j] * cur.at(i, j);
        lifts.push_back(x);
      }
      FpMat M(p, cur.rows(), r);
      for (int i = 0; i < cur.rows(); ++i)
        for (int j = 0; j < r; ++j) {
          QMat prod = lifts[i] * O.basis[j];
          Rat tr = (k == 0) ? prod.trace() : prod.pow(pk).trace();
          Rat scaled = tr / Rat(pk);
          if (!is_integer(scaled)) fail(Err::BadParameter, "trace chain denominator");
          Int v = (scaled.get_num() % p + p) % p;
          M.at(i, j) = (long)v.get_si();
        }
      FpMat ker = fp_left_kernel(M);
      // new coefficient rows = ker * cur  (over Z lifts of F_p values)
      QMat next(ker.rows, r);
      for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < r; ++j) {
          Rat acc = 0;
          for (int l = 0; l < cur.rows(); ++l)
            if (ker.at(i, l)) acc += Rat(ker.at(i, l)) * cur.at(l, j);
          next.at(i, j) = acc;
        }
      cur = next;
      if (cur.rows() == 0) break;
    }
    // ideal lattice in coordinates: pO + <cur rows>
    QMat gens = QMat::identity(r) * Rat(p);
    if (cur.rows() > 0) gens = gens.vcat(cur);
    ideals.push_back(Lattice(gens));
  }
  Lattice inter = ideals[0];
  for (size_t i = 1; i < ideals.size(); ++i) inter = lattice_intersect(inter, ideals[i]);

  OrderIdeal out;
  out.order = O;
  for (int i = 0; i < inter.basis().rows(); ++i) {
    QMat x = QMat::zero(O.m, O.m);
    for (int j = 0; j < r; ++j)
      if (inter.basis().at(i, j) != 0) x = x + O.basis[j] * inter.basis().at(i, j);
    out.basis.push_back(x);
  }
  return out;
}

ZOrder right_idealizer(const OrderIdeal& I) {
  const ZOrder& O = I.order;
  int r = O.rank();
  int m = O.m;
  // constraints: coords of v_a * b_j in the ideal basis are integral
  QMat videal(0, m * m);
  for (auto& v : I.basis) videal = videal.vcat(v.vectorize());

  QMat T(0, r);
  for (size_t a = 0; a < I.basis.size(); ++a) {
    QMat rows((int)I.basis.size(), r);
    // coords of v_a * b_j: solve against videal
    for (int j = 0; j < r; ++j) {
      QMat prod = I.basis[a] * O.basis[j];
      auto c = videal.solve_left(prod.vectorize());
      if (!c) fail(Err::BadParameter, "ideal product left the algebra");
      for (int s = 0; s < (int)I.basis.size(); ++s) rows.at(s, j) = c->at(0, s);
    }
    T = T.vcat(rows);
  }
  Lattice R(T);
  if (R.rank() != r) fail(Err::RankDeficient, "idealizer constraint rank");
  Lattice H = dual_lattice(R, QMat::identity(r));
  std::vector<QMat> gens;
  for (int i = 0; i < H.basis().rows(); ++i) {
    QMat x = QMat::zero(m, m);
    for (int j = 0; j < r; ++j)
      if (H.basis().at(i, j) != 0) x = x + O.basis[j] * H.basis().at(i, j);
    gens.push_back(x);
  }
  return make_order(m, gens);
}

std::pair<ZOrder, int> radical_idealizer_chain(const ZOrder& O) {
  ZOrder cur = O;
  std::string key = cur.key();
  for (int step = 0; step < 64; ++step) {
    ZOrder next = right_idealizer(arithmetical_radical(cur));
    std::string nk = next.key();
    if (nk == key) return {cur, step};
    cur = next;
    key = nk;
  }
  fail(Err::ChainDiverged, "radical idealizer chain did not stabilize in 64 steps");
}

MatrixGroup bravais_group(const MatrixGroup& N, const QMat& F) {
  if (!is_rationally_irreducible(N))
    fail(Err::NotHomogeneous, "bravais_group needs an irreducible natural module");
  int m = N.dim();
  ZOrder lam0 = enveloping_order(N);
  auto [lam, steps] = radical_idealizer_chain(lam0);
  (void)steps;

  QMat stack(0, m);
  for (auto& b : lam.basis) stack = stack.vcat(b);
  Lattice L0(stack);

  std::vector<Int> primes = prime_divisors(discriminant(lam));
  std::vector<QMat> endb = commutant_basis(N.generators(), m);
  CenteringGraph graph = lattice_classes_action(lam.basis, endb, L0, F, primes);

  FormSpace fs = fixed_forms(N);
  FormTuple tuple;
  tuple.posdef = F;
  for (auto& b : fs.basis_sym) tuple.extras.push_back(b);
  for (auto& b : fs.basis_skew) tuple.extras.push_back(b);

  AutResult aut = aut_group(graph.nodes[graph.class_reps[0]], tuple);
  if (graph.class_reps.size() > 1) {
    std::vector<Lattice> rest;
    for (size_t i = 1; i < graph.class_reps.size(); ++i)
      rest.push_back(graph.nodes[graph.class_reps[i]]);
    aut = stabilize_lattices(aut, rest);
  }
  return aut.group(m);
}

}  // namespace simflat
