#include "simflat/families.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "simflat/error.hpp"

namespace simflat {

QMat companion(const QPoly& f) {
  int d = f.deg();
  QMat m(d, d);
  for (int j = 0; j + 1 < d; ++j) m.at(j, j + 1) = 1;
  for (int i = 0; i < d; ++i) m.at(d - 1, i) = -f[i] / f[d];
  return m;
}

MatrixGroup cyclic_group(int m) {
  if (m < 3) fail(Err::BadParameter, "cyclic_group needs m >= 3");
  return MatrixGroup(cyclotomic(m).deg(), {companion(cyclotomic(m))});
}

QMat galois_matrix(int m, long k) {
  QPoly phi = cyclotomic(m);
  int d = phi.deg();
  // X^t mod phi for t < m
  std::vector<QPoly> pw(m);
  pw[0] = QPoly::from_int({1});
  QPoly x = QPoly::x_power(1);
  for (int t = 1; t < m; ++t) pw[t] = (pw[t - 1] * x).divrem(phi).second;
  QMat g(d, d);
  for (int j = 0; j < d; ++j) {
    const QPoly& img = pw[(size_t(j) * k) % m];
    for (int i = 0; i <= img.deg(); ++i) g.at(j, i) = img[i];
  }
  return g;
}

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

MatrixGroup cp_co(long p) {
  if (p < 5 || !is_prime_long(p)) fail(Err::BadParameter, "cp_co needs a prime p >= 5");
  long o = p - 1;
  long a = 0;
  while (o % 2 == 0) { o /= 2; ++a; }
  // element of multiplicative order o: g^(2^a) for a primitive root g
  long g = 0;
  for (long cand = 2; cand < p; ++cand) {
    bool primitive = true;
    for (auto& [q, e] : factor_integer(Int(p - 1))) {
      long ql = (long)q.get_si();
      if (pow_mod(cand, (p - 1) / ql, p) == 1) { primitive = false; break; }
    }
    if (primitive) { g = cand; break; }
  }
  long k = pow_mod(g, 1L << a, p);
  QMat c = companion(cyclotomic((int)p));
  QMat sigma = galois_matrix((int)p, k);
  QMat minus = -QMat::identity((int)p - 1);
  return MatrixGroup((int)p - 1, {c, minus, sigma});
}

MatrixGroup qd_group(int n) {
  if (n < 4) fail(Err::BadParameter, "qd_group needs n >= 4");
  int m = 1 << (n - 1);   // zeta order
  int d = 1 << (n - 2);   // dimension
  QMat x = companion(cyclotomic(m));
  QMat y = galois_matrix(m, (1L << (n - 2)) - 1);
  return MatrixGroup(d, {x, y});
}

MatrixGroup extraspecial_T(int n) {
  if (n < 1) fail(Err::BadParameter, "extraspecial_T needs n >= 1");
  QMat a = QMat::from_int(2, 2, {0, 1, 1, 0});
  QMat b = QMat::from_int(2, 2, {1, 0, 0, -1});
  std::vector<QMat> gens;
  for (int pos = 0; pos < n; ++pos) {
    QMat ga(1, 1), gb(1, 1);
    ga.at(0, 0) = 1;
    gb.at(0, 0) = 1;
    for (int i = 0; i < n; ++i) {
      ga = ga.kron(i == pos ? a : QMat::identity(2));
      gb = gb.kron(i == pos ? b : QMat::identity(2));
    }
    gens.push_back(ga);
    gens.push_back(gb);
  }
  return MatrixGroup(1 << n, gens);
}

namespace {

// Matrices over Q(zeta_p) held as polynomial entries mod Phi_p.
struct KMat {
  int s = 0;
  std::vector<QPoly> e;
  KMat(int n) : s(n), e(size_t(n) * n) {}
  QPoly& at(int i, int j) { return e[size_t(i) * s + j]; }
  const QPoly& at(int i, int j) const { return e[size_t(i) * s + j]; }
};

KMat kmul(const KMat& a, const KMat& b, const QPoly& phi) {
  KMat r(a.s);
  for (int i = 0; i < a.s; ++i)
    for (int k = 0; k < a.s; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.s; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  for (auto& q : r.e) q = q.divrem(phi).second;
  return r;
}

KMat kkron(const KMat& a, const KMat& b, const QPoly& phi) {
  KMat r(a.s * b.s);
  for (int i = 0; i < a.s; ++i)
    for (int j = 0; j < a.s; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.s; ++k)
        for (int l = 0; l < b.s; ++l) {
          if (b.at(k, l).is_zero()) continue;
          r.at(i * b.s + k, j * b.s + l) = (a.at(i, j) * b.at(k, l)).divrem(phi).second;
        }
    }
  return r;
}

QMat blowup(const KMat& a, const QMat& comp) {
  int d = comp.rows();
  QMat r(a.s * d, a.s * d);
  for (int i = 0; i < a.s; ++i)
    for (int j = 0; j < a.s; ++j) {
      const QPoly& q = a.at(i, j);
      if (q.is_zero()) continue;
      QMat block = q.eval(comp);
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) r.at(i * d + x, j * d + y) = block.at(x, y);
    }
  return r;
}

}  // namespace

ExtraspecialP extraspecial_p(long p, int n) {
  if (p < 3 || !is_prime_long(p) || n < 1) fail(Err::BadParameter, "extraspecial_p parameters");
  QPoly phi = cyclotomic((int)p);
  QMat comp = companion(phi);
  // T_1: diag(1, zeta, ..., zeta^{p-1}) and the p-cycle
  KMat diag((int)p), cyc((int)p);
  for (int i = 0; i < p; ++i) {
    diag.at(i, i) = QPoly::x_power(i).divrem(phi).second;
    cyc.at(i, (i + 1) % p) = QPoly::from_int({1});
  }
  KMat id1(1);
  id1.at(0, 0) = QPoly::from_int({1});
  KMat idp((int)p);
  for (int i = 0; i < p; ++i) idp.at(i, i) = QPoly::from_int({1});

  std::vector<QMat> gens;
  for (int pos = 0; pos < n; ++pos) {
    KMat gd = id1, gc = id1;
    for (int i = 0; i < n; ++i) {
      gd = kkron(gd, i == pos ? diag : idp, phi);
      gc = kkron(gc, i == pos ? cyc : idp, phi);
    }
    gens.push_back(blowup(gd, comp));
    gens.push_back(blowup(gc, comp));
  }
  // zeta * identity, blown up
  int s = 1;
  for (int i = 0; i < n; ++i) s *= (int)p;
  KMat zident(s);
  for (int i = 0; i < s; ++i) zident.at(i, i) = QPoly::x_power(1);
  QMat zeta = blowup(zident, comp);
  return {MatrixGroup(s * ((int)p - 1), gens), zeta};
}

namespace {

// All affine subspaces of F_2^n as (dimension, element list of bitmasks).
std::vector<std::pair<int, std::vector<unsigned>>> affine_subspaces(int n) {
  // linear subspaces by BFS over extensions, deduped by element set
  std::set<std::vector<unsigned>> linear;
  linear.insert({0u});
  std::vector<std::vector<unsigned>> frontier{{0u}};
  while (!frontier.empty()) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& w : frontier) {
      for (unsigned v = 1; v < (1u << n); ++v) {
        if (std::find(w.begin(), w.end(), v) != w.end()) continue;
        std::set<unsigned> ext(w.begin(), w.end());
        for (unsigned u : w) ext.insert(u ^ v);
        std::vector<unsigned> key(ext.begin(), ext.end());
        if (linear.insert(key).second) next.push_back(key);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<int, std::vector<unsigned>>> out;
  for (const auto& w : linear) {
    int d = 0;
    while ((1u << d) < w.size()) ++d;
    std::set<unsigned> done;
    for (unsigned rep = 0; rep < (1u << n); ++rep) {
      unsigned base = rep ^ w[0];
      // canonical coset representative: minimum element
      unsigned mn = ~0u;
      for (unsigned u : w) mn = std::min(mn, rep ^ u);
      if (done.insert(mn).second) {
        std::vector<unsigned> coset;
        for (unsigned u : w) coset.push_back(mn ^ u ^ w[0]);
        std::sort(coset.begin(), coset.end());
        out.push_back({d, coset});
      }
      (void)base;
    }
  }
  return out;
}

}  // namespace

WallPair wall_lattices(int n) {
  if (n < 1) fail(Err::BadParameter, "wall_lattices needs n >= 1");
  int dim = 1 << n;
  auto subs = affine_subspaces(n);
  QMat gen0(0, dim), gen1(0, dim);
  for (const auto& [d, coset] : subs) {
    QMat chi(1, dim);
    for (unsigned u : coset) chi.at(0, (int)u) = 1;
    long e0 = (n - d) / 2;
    long e1 = (n - d + 1) / 2;
    gen0 = gen0.vcat(chi * Rat(pow_int(Int(2), e0)));
    gen1 = gen1.vcat(chi * Rat(pow_int(Int(2), e1)));
  }
  return {n, Lattice(gen0), Lattice(gen1)};
}

GaussLattice2 wall_M(int n) {
  if (n < 1) fail(Err::BadParameter, "wall_M needs n >= 1");
  int dim = 1 << n;
  auto subs = affine_subspaces(n);
  QMat w = QMat::zero(2 * dim, 2 * dim);
  for (int i = 0; i < dim; ++i) {
    w.at(i, dim + i) = 1;
    w.at(dim + i, i) = -2;
  }
  // Z[sqrt(-2)]-span of the sqrt(-2)^(n-dim U) chi_U: each generator
  // together with its sqrt(-2)-image spans the lattice over Z.
  QMat gens(0, 2 * dim);
  for (const auto& [d, coset] : subs) {
    int e = n - d;
    QMat row(1, 2 * dim);
    Int scale = pow_int(Int(-2), e / 2);
    for (unsigned u : coset) {
      if (e % 2 == 0)
        row.at(0, (int)u) = Rat(scale);
      else
        row.at(0, dim + (int)u) = Rat(scale);
    }
    gens = gens.vcat(row);
    gens = gens.vcat(row * w);
  }
  return {n, Lattice(gens), w};
}

Lattice gauss_tensor(const GaussLattice2& a, const GaussLattice2& b) {
  int da = 1 << a.n, db = 1 << b.n;
  auto split = [](const QMat& row, int d) {
    QMat re(1, d), im(1, d);
    for (int i = 0; i < d; ++i) {
      re.at(0, i) = row.at(0, i);
      im.at(0, i) = row.at(0, d + i);
    }
    return std::make_pair(re, im);
  };
  QMat out(0, 2 * da * db);
  for (int i = 0; i < a.blowup.rank(); ++i)
    for (int j = 0; j < b.blowup.rank(); ++j) {
      auto [ar, ai] = split(a.blowup.basis().row(i), da);
      auto [br, bi] = split(b.blowup.basis().row(j), db);
      // (ar + s ai) (x) (br + s bi) with s^2 = -2
      QMat re = ar.kron(br) - ai.kron(bi) * Rat(2);
      QMat im = ar.kron(bi) + ai.kron(br);
      QMat row(1, 2 * da * db);
      for (int t = 0; t < da * db; ++t) {
        row.at(0, t) = re.at(0, t);
        row.at(0, da * db + t) = im.at(0, t);
      }
      out = out.vcat(row);
    }
  return Lattice(out);
}

QMat wall_h(int n) {
  QMat h = QMat::from_int(2, 2, {1, 1, 1, -1});
  return h.kron(QMat::identity(1 << (n - 1)));
}

Int minkowski_bound(int n) {
  if (n < 1) fail(Err::BadParameter, "minkowski_bound needs n >= 1");
  Int out = 1;
  for (long p = 2; p <= n + 1; ++p) {
    if (!is_prime_long(p)) continue;
    long denom = p - 1;
    unsigned long e = 0;
    while (n / denom > 0) {
      e += (unsigned long)(n / denom);
      if (denom > n / p) break;  // next term zero
      denom *= p;
    }
    out *= pow_int(Int(p), e);
  }
  return out;
}

std::vector<FittingCandidate> fitting_candidates(int two_n) {
  if (two_n < 2 || two_n % 2) fail(Err::BadParameter, "fitting_candidates needs even two_n >= 2");
  std::vector<FittingCandidate> out;
  auto admit = [&](const std::string& name, long p, const Int& deg, bool real_end) {
    if (deg > two_n || two_n % deg != 0) return;
    Int mult = two_n / deg;
    if (real_end && mult == 1) return;  // no invertible skew form available
    out.push_back({name, p, deg});
  };
  for (long p = 2; p <= two_n + 1; ++p) {
    if (!is_prime_long(p)) continue;
    // C_{p^m}
    Int q = p, deg = p - 1;
    int m = 1;
    while (deg <= two_n) {
      bool real_end = (q == 2);  // only C_2 has a real commuting algebra
      admit("C" + q.get_str(), p, deg, real_end);
      q *= p;
      deg = deg * p;
      ++m;
    }
    if (p == 2) {
      // 2_+^{1+2k} (deg 2^k) and 2_-^{1+2k} (deg 2^{k+1})
      for (int k = 1;; ++k) {
        Int dplus = pow_int(Int(2), k);
        if (dplus > two_n) break;
        std::string nm = (k == 1) ? "D8" : "2+^(1+" + std::to_string(2 * k) + ")";
        admit(nm, 2, dplus, true);
        Int dminus = dplus * 2;
        std::string nm2 = (k == 1) ? "Q8" : "2-^(1+" + std::to_string(2 * k) + ")";
        admit(nm2, 2, dminus, false);
      }
      // 2_+^{1+2k} Y D/Q/QD_{2^m}, m > 3, k >= 0 (k = 0: plain D/Q/QD)
      for (int mm = 4; (1 << (mm - 2)) <= two_n; ++mm) {
        for (int k = 0;; ++k) {
          Int dD = pow_int(Int(2), k + mm - 2);
          Int dQ = pow_int(Int(2), k + mm - 1);
          if (dD > two_n) break;
          std::string pre = k == 0 ? "" : (k == 1 ? "D8t" : "2+^(1+" + std::to_string(2 * k) + ")t");
          long sz = 1L << mm;
          admit(pre + "D" + std::to_string(sz), 2, dD, true);
          admit(pre + "QD" + std::to_string(sz), 2, dD, false);
          admit(pre + "Q" + std::to_string(sz), 2, dQ, false);
        }
      }
      // 2_+^{1+2k} Y C_{2^m}, m > 1, k >= 1
      for (int mm = 2; (1 << (mm - 1)) <= two_n; ++mm)
        for (int k = 1;; ++k) {
          Int d = pow_int(Int(2), mm + k - 1);
          if (d > two_n) break;
          std::string pre = (k == 1) ? "D8t" : "2+^(1+" + std::to_string(2 * k) + ")t";
          admit(pre + "C" + std::to_string(1L << mm), 2, d, false);
        }
    } else {
      // p_+^{1+2k}, deg p^k (p-1)
      for (int k = 1;; ++k) {
        Int d = pow_int(Int(p), k) * (p - 1);
        if (d > two_n) break;
        admit(std::to_string(p) + "+^(1+" + std::to_string(2 * k) + ")", p, d, false);
      }
      // p_+^{1+2k} Y C_{p^m}, m > 1
      for (int mm = 2;; ++mm) {
        Int base = pow_int(Int(p), mm - 1) * (p - 1);
        if (base > two_n) break;
        for (int k = 1;; ++k) {
          Int d = pow_int(Int(p), mm + k - 1) * (p - 1);
          if (d > two_n) break;
          admit(std::to_string(p) + "+^(1+" + std::to_string(2 * k) + ")tC" +
                    pow_int(Int(p), mm).get_str(),
                p, d, false);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FittingCandidate& a, const FittingCandidate& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.name < b.name;
  });
  return out;
}

QMat quat_left(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  QMat m(4, 4);
  std::vector<Rat> rows = {a, b,  c,  d,   //
                           -b, a, d,  -c,  //
                           -c, -d, a, b,   //
                           -d, c, -b, a};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rows[size_t(i) * 4 + j];
  return m;
}

QMat quat_right(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  QMat m(4, 4);
  std::vector<Rat> rows = {a, b,  c,  d,   //
                           -b, a, -d, c,   //
                           -c, d,  a, -b,  //
                           -d, -c, b, a};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rows[size_t(i) * 4 + j];
  return m;
}

Lattice hurwitz_lattice() {
  QMat g(4, 4);
  g.at(0, 0) = 1;
  g.at(1, 1) = 1;
  g.at(2, 2) = 1;
  for (int j = 0; j < 4; ++j) g.at(3, j) = Rat(1, 2);
  return Lattice(g);
}

MatrixGroup q8() {
  return MatrixGroup(4, {quat_left(0, 1, 0, 0), quat_left(0, 0, 1, 0)});
}

MatrixGroup sl23() {
  Rat h(1, 2);
  return MatrixGroup(4, {quat_left(0, 1, 0, 0), quat_left(-h, h, h, h)});
}

MatrixGroup gl23() {
  Rat h(1, 2);
  QMat x = quat_left(1, 1, 0, 0) * quat_right(0, 1, 1, 0) * h;
  auto g = sl23();
  std::vector<QMat> gens = g.generators();
  gens.push_back(x);
  return MatrixGroup(4, gens);
}

MatrixGroup sl23_circ_c3() {
  Rat h(1, 2);
  auto g = sl23();
  std::vector<QMat> gens = g.generators();
  gens.push_back(quat_right(-h, h, h, h));
  return MatrixGroup(4, gens);
}

MatrixGroup aut_a2() {
  return MatrixGroup(2, {QMat::from_int(2, 2, {0, 1, -1, 1}), QMat::from_int(2, 2, {0, 1, 1, 0})});
}

MatrixGroup c4_tensor_aut_a2() {
  return tensor(cyclic_group(4), aut_a2());
}

}  // namespace simflat
