#include "simflat/invlat.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

#include "simflat/algebra.hpp"
#include "simflat/error.hpp"
#include "simflat/fp.hpp"

namespace simflat {

namespace {

std::vector<Lattice> centerings_impl(const std::vector<QMat>& action, const Lattice& L, long p) {
  int m = L.dim();
  auto binv = L.basis().inverse();
  if (!binv) fail(Err::RankDeficient, "centerings need full rank");
  std::vector<FpMat> modp;
  for (const auto& g : action) {
    QMat cg = L.basis() * g * *binv;
    if (!cg.is_integral()) fail(Err::NotInvariant, "lattice not invariant under action");
    modp.push_back(fp_reduce(cg, p));
  }
  auto subs = fp_invariant_subspaces(modp, m, p);
  std::vector<Lattice> out;
  for (const auto& w : subs) {
    QMat rows(w.rows, m);
    for (int i = 0; i < w.rows; ++i)
      for (int j = 0; j < m; ++j) rows.at(i, j) = Rat(w.at(i, j));
    QMat gen = (rows * L.basis()).vcat(L.basis() * Rat(p));
    out.push_back(Lattice(gen));
  }
  std::sort(out.begin(), out.end(),
            [](const Lattice& a, const Lattice& b) { return a.key() < b.key(); });
  return out;
}

}  // namespace

std::vector<Lattice> centerings(const MatrixGroup& G, const Lattice& L, long p) {
  for (const auto& g : G.generators())
    if (L.image(g) != L) fail(Err::NotInvariant, "lattice not invariant under group");
  return centerings_impl(G.generators(), L, p);
}

std::vector<Lattice> centerings_action(const std::vector<QMat>& action, const Lattice& L, long p) {
  return centerings_impl(action, L, p);
}

Lattice scaling_canonical(const Lattice& L, const QMat& F) {
  QMat G = gram(L, F);
  // content of the Gram as a rational, then c with v_q(c^2 * content) in {0,1}
  Int dl = G.denominator_lcm();
  Int nm = (G * Rat(dl)).content();
  Rat content = make_rat(nm, dl);
  Rat c = 1;
  auto fix = [&](const Int& q, long v) {
    // multiply c by q^{-floor(v/2)}
    long e = v >= 0 ? v / 2 : (v - 1) / 2;
    if (e > 0)
      c /= Rat(pow_int(q, e));
    else if (e < 0)
      c *= Rat(pow_int(q, -e));
  };
  for (auto& [q, e] : factor_integer(content.get_num())) fix(q, e);
  for (auto& [q, e] : factor_integer(content.get_den())) fix(q, -e);
  return L.scaled(c);
}

std::optional<QMat> module_isomorphism(const Lattice& A, const Lattice& B,
                                       const std::vector<QMat>& end_basis) {
  if (A.dim() != B.dim()) fail(Err::DimMismatch, "module_isomorphism");
  int m = A.dim();
  int k = (int)end_basis.size();
  if (k == 0) return std::nullopt;
  auto binv = B.basis().inverse();
  if (!binv) fail(Err::RankDeficient, "module_isomorphism needs full rank");

  // Hom-lattice constraints: coords of basis(A) * x in basis(B) integral.
  QMat T(m * m, k);
  for (int i = 0; i < k; ++i) {
    QMat cols = A.basis() * end_basis[i] * *binv;
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) T.at(r * m + s, i) = cols.at(r, s);
  }
  Lattice R(T);  // row span, rank k since x -> A x is injective on End
  if (R.rank() != k) return std::nullopt;
  Lattice H = dual_lattice(R, QMat::identity(k));

  // Frobenius form on coefficients.
  QMat Q(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) Q.at(i, j) = (end_basis[i] * end_basis[j].transpose()).trace();

  Rat D = abs(B.basis().det() / A.basis().det());
  double dv = mpq_get_d(D.get_mpq_t());
  double t = std::pow(dv, 2.0 / m);
  Rat bound = Rat((long)(m * t * 8.0) + 2);

  auto sv = short_vectors(H, Q, bound);
  for (const auto& s : sv) {
    QMat x = QMat::zero(m, m);
    for (int i = 0; i < k; ++i)
      if (s.v.at(0, i) != 0) x = x + end_basis[i] * s.v.at(0, i);
    Rat d = x.det();
    if (d == 0) continue;
    if (abs(d) * abs(A.basis().det()) != abs(B.basis().det())) continue;
    if (Lattice(A.basis() * x) == B) return x;
  }
  return std::nullopt;
}

CenteringGraph lattice_classes_action(const std::vector<QMat>& action,
                                      const std::vector<QMat>& end_basis, const Lattice& L0,
                                      const QMat& F, const std::vector<Int>& primes) {
  CenteringGraph g;
  std::unordered_map<std::string, int> seen;
  Lattice start = scaling_canonical(L0, F);
  g.nodes.push_back(start);
  seen[start.key()] = 0;
  size_t q = 0;
  while (q < g.nodes.size()) {
    Lattice cur = g.nodes[q];
    for (const auto& p : primes) {
      long pl = (long)p.get_si();
      for (const auto& c : centerings_impl(action, cur, pl)) {
        Lattice canon = scaling_canonical(c, F);
        auto it = seen.find(canon.key());
        if (it == seen.end()) {
          seen[canon.key()] = (int)g.nodes.size();
          g.edges.emplace_back((int)q, pl, (int)g.nodes.size());
          g.nodes.push_back(canon);
          if (g.nodes.size() > 4000) fail(Err::OrderCapExceeded, "centering graph too large");
        } else {
          g.edges.emplace_back((int)q, pl, it->second);
        }
      }
    }
    ++q;
  }
  g.class_of.assign(g.nodes.size(), -1);
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    bool placed = false;
    for (size_t r = 0; r < g.class_reps.size() && !placed; ++r) {
      if (module_isomorphism(g.nodes[g.class_reps[r]], g.nodes[i], end_basis)) {
        g.class_of[i] = (int)r;
        placed = true;
      }
    }
    if (!placed) {
      g.class_of[i] = (int)g.class_reps.size();
      g.class_reps.push_back((int)i);
    }
  }
  return g;
}

CenteringGraph lattice_classes(const MatrixGroup& G, const Lattice& L0, const QMat& F) {
  for (const auto& gen : G.generators())
    if (L0.image(gen) != L0) fail(Err::NotInvariant, "starting lattice not invariant");
  std::vector<Int> primes = prime_divisors(G.order());
  std::vector<QMat> endb = commutant_basis(G.generators(), G.dim());
  return lattice_classes_action(G.generators(), endb, L0, F, primes);
}

}  // namespace simflat
