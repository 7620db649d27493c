#include "simflat/canon.hpp"

#include <map>

#include "simflat/algebra.hpp"
#include "simflat/error.hpp"
#include "simflat/families.hpp"

namespace simflat {

namespace {

// squarefree positive products of the given primes, 1 included
std::vector<Int> squarefree_products(const std::vector<Int>& primes) {
  std::vector<Int> out{1};
  for (const auto& p : primes) {
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] * p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// geometric canonical representative: L integral primitive, F rescaled along
std::pair<Lattice, QMat> geometric_canon(const Lattice& L, const QMat& F) {
  Int d = L.basis().denominator_lcm();
  Int c = (L.basis() * Rat(d)).content();
  Rat lambda = Rat(d) / Rat(c);
  return {L.scaled(lambda), F * (1 / (lambda * lambda))};
}

}  // namespace

std::vector<MinimalPair> minimal_normalized_pairs(const MatrixGroup& A, const QMat& F0) {
  int m = A.dim();
  // start from an invariant lattice: Z^m * <A>_Z
  QMat stack(0, m);
  for (const auto& g : A.elements()) stack = stack.vcat(g);
  Lattice L0(stack);
  CenteringGraph graph = lattice_classes(A, L0, F0);

  std::vector<Int> primes = prime_divisors(A.order());
  {
    // include primes of the seed determinants so rescalings can reach below
    for (int r : graph.class_reps) {
      QMat G = gram(graph.nodes[r], F0);
      Int dl = G.denominator_lcm();
      for (auto& p : prime_divisors((G * Rat(dl)).content()))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
  }
  std::vector<Int> scalings = squarefree_products(primes);

  std::map<std::string, MinimalPair> seen;
  Int best = -1;
  for (int rep : graph.class_reps) {
    const Lattice& L = graph.nodes[rep];
    // integral primitive base form on this class
    QMat G = gram(L, F0);
    Int dl = G.denominator_lcm();
    Int ct = (G * Rat(dl)).content();
    QMat fhat = F0 * make_rat(dl, ct);
    for (const auto& c : scalings) {
      IntegralPair p{L, fhat * Rat(c)};
      IntegralPair np = normalize_pair(p);
      auto [lc, fc] = geometric_canon(np.lattice, np.form);
      Int det = pair_det({lc, fc});
      std::string key = lc.key() + "|" + fc.key();
      if (!seen.count(key)) seen.emplace(key, MinimalPair{lc, fc, det});
      if (best < 0 || det < best) best = det;
    }
  }
  std::vector<MinimalPair> out;
  for (auto& [k, mp] : seen)
    if (mp.det == best) out.push_back(mp);
  return out;
}

const std::vector<QPoly>& allowed_min_polys_fixed(int max_deg) {
  static std::map<int, std::vector<QPoly>> cache;
  auto it = cache.find(max_deg);
  if (it != cache.end()) return it->second;
  std::vector<QPoly> list;
  auto euler_phi = [](int k) {
    long phi = 1;
    for (auto& [p, e] : factor_integer(Int(k))) {
      long pl = (long)p.get_si();
      long pe = 1;
      for (int i = 1; i < e; ++i) pe *= pl;
      phi *= pe * (pl - 1);
    }
    return phi;
  };
  // mu(zeta_k - zeta_k^{-1}) for even k >= 6; deg mu >= phi(k)/2, and
  // phi(k) >= sqrt(k/2) bounds the scan
  for (int k = 6; k <= 8 * max_deg * max_deg + 32; k += 2) {
    if (euler_phi(k) > 2 * max_deg) continue;
    QMat c = companion(cyclotomic(k));
    QMat e = c - *c.inverse();
    QPoly mu = min_poly(e);
    if (mu.deg() <= max_deg) list.push_back(mu);
  }
  // mu(zeta_26 + zeta_26^3 + zeta_26^9)
  {
    QMat c = companion(cyclotomic(26));
    QMat e = c.pow(1) + c.pow(3) + c.pow(9);
    QPoly mu = min_poly(e);
    if (mu.deg() <= max_deg) list.push_back(mu);
  }
  // mu(sqrt(k)(zeta_l - zeta_l^{-1})) for (k,l) in {(2,10),(3,10),(3,16)}
  auto sqrt_case = [&](int amb, int sq_exp, int l_exp) {
    QMat c = companion(cyclotomic(amb));
    QMat ci = *c.inverse();
    QMat sq = c.pow(sq_exp) + ci.pow(sq_exp);   // zeta_8/zeta_12 + inverse
    QMat zl = c.pow(l_exp) - ci.pow(l_exp);
    QPoly mu = min_poly(sq * zl);
    if (mu.deg() <= max_deg) list.push_back(mu);
  };
  sqrt_case(40, 5, 4);   // sqrt2 = z40^5 + z40^-5, zeta_10 = z40^4
  sqrt_case(60, 5, 6);   // sqrt3 = z60^5 + z60^-5, zeta_10 = z60^6
  sqrt_case(48, 4, 3);   // sqrt3 = z48^4 + z48^-4, zeta_16 = z48^3
  // mu(sqrt(-1) + sqrt(-3) + sqrt(-5))
  {
    QMat c = companion(cyclotomic(60));
    QMat i = c.pow(15);
    QMat s3 = c.pow(20) - c.pow(40);
    QMat sqrt5 = (c.pow(12) + c.pow(48)) * Rat(2) + QMat::identity(c.rows());
    QMat s5 = i * sqrt5;
    QPoly mu = min_poly(i + s3 + s5);
    if (mu.deg() <= max_deg) list.push_back(mu);
  }
  auto pos = cache.emplace(max_deg, std::move(list)).first;
  return pos->second;
}

bool minpoly_allowed(const QPoly& mu) {
  if (mu.deg() == 2 && mu[1] == 0 && mu[2] == 1) {
    // X^2 + d, squarefree natural d
    if (is_integer(mu[0]) && mu[0] > 0) {
      auto [a, b] = squarefree_split(mu[0].get_num());
      if (a == 1) return true;
    }
  }
  for (const auto& f : allowed_min_polys_fixed(std::max(2, mu.deg())))
    if (f == mu) return true;
  return false;
}

std::vector<QPoly> field_roots(const QPoly& target, const QPoly& mu_w) {
  int d = mu_w.deg();
  int t = target.deg();
  int n = d * t;  // dimension of A = Q[w] (x) Q[X]/(target)
  // multiplication operators on the basis w^a X^b
  auto idx = [&](int a, int b) { return a * t + b; };
  QMat Mw(n, n), Mx(n, n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < t; ++b) {
      // w * w^a X^b
      if (a + 1 < d) {
        Mw.at(idx(a, b), idx(a + 1, b)) = 1;
      } else {
        for (int j = 0; j < d; ++j) Mw.at(idx(a, b), idx(j, b)) = -mu_w[j];
      }
      // X * w^a X^b
      if (b + 1 < t) {
        Mx.at(idx(a, b), idx(a, b + 1)) = 1;
      } else {
        for (int j = 0; j < t; ++j) Mx.at(idx(a, b), idx(a, j)) = -target[j];
      }
    }
  // note: operators act on coordinate ROWS: vec(u * w) = vec(u) * Mw

  std::vector<QPoly> roots;
  for (long lambda = 1; lambda <= 24; ++lambda) {
    QMat Mt = Mw + Mx * Rat(lambda);
    QPoly mu_t = min_poly(Mt);
    if (mu_t.deg() != n) continue;  // theta must generate the etale algebra
    bool conclusive = true;
    auto factors = factor_q(mu_t);
    QMat one(1, n);
    one.at(0, 0) = 1;
    for (auto& [h, mult] : factors) {
      if (mult != 1 || h.deg() != d) continue;
      // idempotent for the factor: g = u * (u^{-1} mod h) mod mu_t, u = mu_t/h
      QPoly u = mu_t.divrem(h).first;
      auto [g1, vi, wi] = poly_xgcd(u, h);
      if (g1.deg() != 0) continue;
      QPoly g = (u * vi).divrem(mu_t).second;
      QMat evec = one * g.eval(Mt);
      // basis of the factor component: theta^j * e
      QMat basis(d, n);
      QMat cur = evec;
      for (int j = 0; j < d; ++j) {
        for (int c = 0; c < n; ++c) basis.at(j, c) = cur.at(0, c);
        cur = cur * Mt;
      }
      auto wcomp = basis.solve_left(evec * Mw);
      auto xcomp = basis.solve_left(evec * Mx);
      if (!wcomp || !xcomp) continue;
      // inside Q[s]/h: express the X-image as a polynomial in the w-image
      std::vector<Rat> wc(d), xc(d);
      for (int j = 0; j < d; ++j) {
        wc[j] = wcomp->at(0, j);
        xc[j] = xcomp->at(0, j);
      }
      QPoly wpoly{std::vector<Rat>(wc)};
      QPoly xpoly{std::vector<Rat>(xc)};
      QMat pows(d, d);
      QPoly p = QPoly::from_int({1});
      for (int k = 0; k < d; ++k) {
        for (int j = 0; j <= p.deg(); ++j) pows.at(k, j) = p[j];
        p = (p * wpoly).divrem(h).second;
      }
      QMat xrow(1, d);
      for (int j = 0; j <= xpoly.deg(); ++j) xrow.at(0, j) = xpoly[j];
      auto phi = pows.solve_left(xrow);
      if (!phi) continue;
      std::vector<Rat> pc(d);
      for (int j = 0; j < d; ++j) pc[j] = phi->at(0, j);
      QPoly cand{std::move(pc)};
      // exact verification: target(cand(w)) = 0 mod mu_w
      QPoly check;
      {
        QPoly acc = QPoly::from_int({0});
        for (int j = target.deg(); j >= 0; --j) {
          acc = (acc * cand).divrem(mu_w).second;
          acc = acc + QPoly{std::vector<Rat>{target[j]}};
        }
        check = acc;
      }
      if (!check.is_zero()) continue;
      bool dup = false;
      for (auto& r : roots)
        if (r == cand) dup = true;
      if (!dup) roots.push_back(cand);
    }
    if (conclusive) break;  // full-degree squarefree theta decides everything
  }
  return roots;
}

namespace {

// anti-selfadjoint part of the commutant w.r.t. the F-adjoint
std::vector<QMat> anti_space(const std::vector<QMat>& endb, const QMat& F, int m) {
  auto fi = *F.inverse();
  QMat stack(0, m * m);
  for (const auto& e : endb) {
    QMat a = e - F * e.transpose() * fi;
    if (!a.is_zero()) stack = stack.vcat(a.vectorize());
  }
  QMat h = hnf_rows(stack);
  std::vector<QMat> out;
  for (int i = 0; i < h.rows(); ++i)
    out.push_back(QMat::unvectorize(h.row(i), m, m).primitive_scaled());
  return out;
}

}  // namespace

std::vector<QMat> qualifying_skews(const MatrixGroup& rebased, const QMat& F) {
  int m = rebased.dim();
  EndAlgebra E = end_algebra(rebased);
  int edim = (int)E.basis.size();
  std::vector<QMat> out;
  if (!E.commutative || edim < 2 || edim > 8 || edim % 2) return out;
  auto fi = F.inverse();
  if (!fi) return out;
  std::vector<QMat> anti = anti_space(E.basis, F, m);
  if (anti.empty()) return out;

  auto consider = [&](const QMat& e) {
    QMat S = e * F;
    if (!S.is_integral() || !S.is_skew_symmetric()) return;
    for (auto& have : out)
      if (have == S) return;
    QPoly mu = min_poly(e);
    if (mu.deg() != edim || !minpoly_allowed(mu)) return;
    out.push_back(S);
  };

  if (edim == 2) {
    // e = c*a with a^2 = -n: pick c so that c^2 n is a squarefree integer
    const QMat& a = anti[0];
    QMat sq = a * a;
    Rat nr = -sq.trace() / m;
    Rat c = 1;
    for (auto& [q, v] : factor_integer(nr.get_num()))
      for (int i = 0; i < v / 2; ++i) c /= Rat(q);
    for (auto& [q, v] : factor_integer(nr.get_den()))
      for (int i = 0; i < (v + 1) / 2; ++i) c *= Rat(q);
    consider(a * c);
    consider(a * (-c));
    return out;
  }

  // find a primitive anti element w (works for the shipped CM fields)
  std::optional<std::pair<QMat, QPoly>> prim;
  for (auto& a : anti) {
    QPoly mu = min_poly(a);
    if (mu.deg() == edim && is_irreducible_q(mu)) { prim = {a, mu}; break; }
  }
  if (!prim && anti.size() >= 2) {
    for (int x = 1; x <= 3 && !prim; ++x)
      for (int y = -3; y <= 3 && !prim; ++y) {
        QMat a = anti[0] * Rat(x) + anti[1] * Rat(y);
        QPoly mu = min_poly(a);
        if (mu.deg() == edim && is_irreducible_q(mu)) prim = {a, mu};
      }
  }
  if (!prim) return out;
  const auto& [wmat, mu_w] = *prim;

  for (const auto& target : allowed_min_polys_fixed(edim)) {
    if (target.deg() != edim) continue;
    for (const auto& phi : field_roots(target, mu_w)) {
      QMat e = phi.eval(wmat);
      consider(e);
      if ((int)out.size() >= edim) return out;
    }
  }
  return out;
}

}  // namespace simflat
