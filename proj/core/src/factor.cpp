#include <algorithm>
#include <map>

#include "simflat/error.hpp"
#include "simflat/poly.hpp"

// Rational polynomial factorization: squarefree reduction, Berlekamp mod a
// good small prime, linear multifactor Hensel lifting, subset recombination
// against the Mignotte bound.

namespace simflat {

namespace {

using ZPoly = std::vector<Int>;   // low-to-high, trimmed
using MPoly = std::vector<long>;  // coefficients mod p

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return (int)f.size() - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division over Z; nullopt if it does not divide.
std::optional<ZPoly> zdivexact(const ZPoly& f, const ZPoly& g) {
  if (g.empty()) return std::nullopt;
  ZPoly r = f, q;
  if (zdeg(f) < zdeg(g)) return std::nullopt;
  q.assign(zdeg(f) - zdeg(g) + 1, 0);
  for (int i = zdeg(f); i >= zdeg(g); --i) {
    if (r[i] == 0) continue;
    if (r[i] % g.back() != 0) return std::nullopt;
    Int c = r[i] / g.back();
    q[i - zdeg(g)] = c;
    for (int j = 0; j <= zdeg(g); ++j) r[i - zdeg(g) + j] -= c * g[j];
  }
  ztrim(r);
  if (!r.empty()) return std::nullopt;
  return q;
}

// ---- arithmetic mod p ----

void mtrim(MPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

MPoly mmul(const MPoly& a, const MPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

MPoly msub(MPoly a, const MPoly& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  mtrim(a);
  return a;
}

// divrem, divisor monic-normalized internally
std::pair<MPoly, MPoly> mdivrem(MPoly f, MPoly g, long p) {
  mtrim(f);
  mtrim(g);
  long gi = inv_mod(g.back(), p);
  MPoly q;
  if ((int)f.size() >= (int)g.size()) q.assign(f.size() - g.size() + 1, 0);
  for (int i = (int)f.size() - 1; i >= (int)g.size() - 1; --i) {
    if (f[i] == 0) continue;
    long c = f[i] * gi % p;
    q[i - g.size() + 1] = c;
    for (size_t j = 0; j < g.size(); ++j) {
      size_t k = i - g.size() + 1 + j;
      f[k] = ((f[k] - c * g[j]) % p + p) % p;
    }
  }
  mtrim(f);
  return {q, f};
}

MPoly mmod(const MPoly& f, const MPoly& g, long p) { return mdivrem(f, g, p).second; }

MPoly mgcd(MPoly a, MPoly b, long p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    MPoly r = mmod(a, b, p);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    long f = inv_mod(a.back(), p);
    for (auto& x : a) x = x * f % p;
  }
  return a;
}

MPoly mmonic(MPoly f, long p) {
  mtrim(f);
  if (f.empty()) return f;
  long s = inv_mod(f.back(), p);
  for (auto& x : f) x = x * s % p;
  return f;
}

MPoly mderiv(const MPoly& f, long p) {
  MPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(long(i % p) * f[i] % p);
  mtrim(d);
  return d;
}

// extended gcd: returns (g, u, v) with u*a + v*b = g (g monic)
std::tuple<MPoly, MPoly, MPoly> mxgcd(MPoly a, MPoly b, long p) {
  MPoly u0{1}, v0{}, u1{}, v1{1};
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    auto [q, r] = mdivrem(a, b, p);
    a = b;
    b = r;
    MPoly nu = msub(u0, mmul(q, u1, p), p);
    MPoly nv = msub(v0, mmul(q, v1, p), p);
    u0 = u1;
    v0 = v1;
    u1 = nu;
    v1 = nv;
  }
  if (!a.empty()) {
    long s = inv_mod(a.back(), p);
    for (auto& x : a) x = x * s % p;
    for (auto& x : u0) x = x * s % p;
    for (auto& x : v0) x = x * s % p;
  }
  return {a, u0, v0};
}

// Berlekamp factorization of a monic squarefree f mod p.
std::vector<MPoly> berlekamp(const MPoly& f, long p) {
  int d = (int)f.size() - 1;
  // x^p mod f
  MPoly xp{0, 1};
  {
    MPoly r{1};
    MPoly base = xp;
    long e = p;
    while (e) {
      if (e & 1) r = mmod(mmul(r, base, p), f, p);
      base = mmod(mmul(base, base, p), f, p);
      e >>= 1;
    }
    xp = r;
  }
  // rows of Q: x^{ip} mod f
  std::vector<MPoly> rows(d);
  rows[0] = MPoly{1};
  for (int i = 1; i < d; ++i) rows[i] = mmod(mmul(rows[i - 1], xp, p), f, p);
  // kernel of (Q - I)
  std::vector<std::vector<long>> M(d, std::vector<long>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) M[i][j] = rows[i][j];
    M[i][i] = ((M[i][i] - 1) % p + p) % p;
  }
  // left kernel: v M = 0; do elimination on M^T columns... transpose and take right kernel
  std::vector<std::vector<long>> T(d, std::vector<long>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) T[j][i] = M[i][j];
  // now solve T x = 0 (column vectors x) == left kernel of M
  std::vector<int> where(d, -1);
  int row = 0;
  for (int c = 0; c < d && row < d; ++c) {
    int piv = -1;
    for (int i = row; i < d; ++i)
      if (T[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(T[piv], T[row]);
    long s = inv_mod(T[row][c], p);
    for (int j = 0; j < d; ++j) T[row][j] = T[row][j] * s % p;
    for (int i = 0; i < d; ++i) {
      if (i == row || T[i][c] == 0) continue;
      long g = T[i][c];
      for (int j = 0; j < d; ++j) T[i][j] = ((T[i][j] - g * T[row][j]) % p + p) % p;
    }
    where[c] = row;
    ++row;
  }
  std::vector<MPoly> kernel;
  for (int c = 0; c < d; ++c) {
    if (where[c] >= 0) continue;
    MPoly v(d, 0);
    v[c] = 1;
    for (int j = 0; j < d; ++j)
      if (where[j] >= 0) v[j] = (p - T[where[j]][c]) % p;
    mtrim(v);
    kernel.push_back(v);
  }
  size_t nfactors = kernel.size();
  std::vector<MPoly> factors{mmonic(f, p)};
  if (nfactors <= 1) return factors;
  for (const auto& v : kernel) {
    if (factors.size() == nfactors) break;
    if (v.size() <= 1) continue;  // constant vector separates nothing
    for (size_t fi = 0; fi < factors.size() && factors.size() < nfactors; ++fi) {
      for (long c = 0; c < p && factors.size() < nfactors; ++c) {
        if ((int)factors[fi].size() - 1 <= 1) break;
        MPoly shifted = v;
        if (shifted.empty()) shifted.push_back(0);
        shifted[0] = ((shifted[0] - c) % p + p) % p;
        mtrim(shifted);
        MPoly g = mgcd(factors[fi], shifted, p);
        int dg = (int)g.size() - 1;
        if (dg > 0 && dg < (int)factors[fi].size() - 1) {
          MPoly other = mdivrem(factors[fi], g, p).first;
          factors[fi] = mmonic(other, p);
          factors.push_back(g);
        }
      }
    }
  }
  return factors;
}

// ---- Hensel ----

// Lift f == prod(g) (mod p), f monic over Z, g monic mod p and pairwise
// coprime, to a factorization mod p^K.
std::vector<ZPoly> hensel_lift(const ZPoly& f, std::vector<MPoly> g, long p, int K, Int& pk_out) {
  size_t r = g.size();
  // Partial-fraction inverses: h_i = (prod_{j!=i} g_j)^{-1} mod (g_i, p).
  std::vector<MPoly> h(r);
  for (size_t i = 0; i < r; ++i) {
    MPoly prod{1};
    for (size_t j = 0; j < r; ++j)
      if (j != i) prod = mmod(mmul(prod, g[j], p), g[i], p);
    auto [gg, u, v] = mxgcd(prod, g[i], p);
    h[i] = u;  // prod * u == 1 (mod g_i)
  }
  std::vector<ZPoly> G(r);
  for (size_t i = 0; i < r; ++i) {
    G[i].resize(g[i].size());
    for (size_t j = 0; j < g[i].size(); ++j) G[i][j] = g[i][j];
  }
  Int pk = p;
  for (int step = 1; step < K; ++step) {
    // e = (f - prod G) / p^k  mod p
    ZPoly prod{1};
    for (auto& gi : G) prod = zmul(prod, gi);
    ZPoly diff = f;
    diff.resize(std::max(diff.size(), prod.size()), 0);
    for (size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    ztrim(diff);
    MPoly e(diff.size());
    bool zero = true;
    for (size_t i = 0; i < diff.size(); ++i) {
      Int q = diff[i] / pk;  // exact by the invariant
      Int m = q % p;
      long v = (long)m.get_si();
      if (v < 0) v += p;
      e[i] = v;
      if (v) zero = false;
    }
    mtrim(e);
    if (!zero) {
      for (size_t i = 0; i < r; ++i) {
        MPoly d = mmod(mmul(e, h[i], p), g[i], p);
        // G_i += p^k * d
        if (G[i].size() < d.size() + 1) G[i].resize(d.size() + 1, 0);
        for (size_t j = 0; j < d.size(); ++j) G[i][j] += pk * d[j];
      }
    }
    pk *= p;
  }
  pk_out = pk;
  return G;
}

Int sym_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// Factor a monic squarefree integer polynomial into monic irreducibles.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  int n = zdeg(f);
  if (n <= 1) return {f};
  // Choose a prime with f squarefree mod p.
  long p = 0;
  for (long cand = 2; cand < 20000; cand = (cand == 2 ? 3 : cand + 2)) {
    bool isp = true;
    for (long d = 2; d * d <= cand; ++d)
      if (cand % d == 0) { isp = false; break; }
    if (!isp) continue;
    if (f.back() % cand == 0) continue;
    MPoly fp(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      Int m = f[i] % cand;
      long v = (long)m.get_si();
      fp[i] = v < 0 ? v + cand : v;
    }
    mtrim(fp);
    if ((int)fp.size() - 1 != n) continue;
    MPoly d = mderiv(fp, cand);
    if (d.empty()) continue;
    if ((int)mgcd(fp, d, cand).size() - 1 == 0) { p = cand; break; }
  }
  if (p == 0) fail(Err::BadParameter, "no good prime found for factorization");

  MPoly fp(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Int m = f[i] % p;
    long v = (long)m.get_si();
    fp[i] = v < 0 ? v + p : v;
  }
  auto modular = berlekamp(mmonic(fp, p), p);
  if (modular.size() == 1) return {f};

  // Mignotte-style bound: |coeff of any monic factor| <= 2^n * ||f||_2.
  Int norm2 = 0;
  for (auto& c : f) norm2 += c * c;
  Int bound = (pow_int(Int(2), n) * (sqrt(norm2) + 1) + 1) * 2;
  int K = 1;
  Int pk = p;
  while (pk <= bound) { pk *= p; ++K; }

  Int mod;
  auto lifted = hensel_lift(f, modular, p, K, mod);

  std::vector<ZPoly> result;
  std::vector<int> pool(lifted.size());
  for (size_t i = 0; i < pool.size(); ++i) pool[i] = (int)i;
  ZPoly rem = f;
  size_t take = 1;
  while (2 * take <= pool.size()) {
    // all subsets of the pool of size `take`
    std::vector<int> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = (int)i;
    bool split = false;
    while (true) {
      ZPoly cand{1};
      for (size_t i = 0; i < take; ++i) cand = zmul(cand, lifted[pool[idx[i]]]);
      for (auto& c : cand) c = sym_mod(c, mod);
      ztrim(cand);
      auto quot = zdivexact(rem, cand);
      if (quot) {
        result.push_back(cand);
        rem = *quot;
        std::vector<int> np;
        for (size_t i = 0, k = 0; i < pool.size(); ++i) {
          if (k < take && (int)i == idx[k]) { ++k; continue; }
          np.push_back(pool[i]);
        }
        pool = np;
        split = true;
        break;
      }
      // next subset
      int i = (int)take - 1;
      while (i >= 0 && idx[i] == (int)pool.size() - (int)take + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!split) ++take;
  }
  if (zdeg(rem) > 0) result.push_back(rem);
  return result;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_q(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.deg() < 1) return out;

  // Squarefree part over Q.
  QPoly fq = f.monic();
  QPoly sf = fq.divrem(poly_gcd(fq, fq.derivative())).first.monic();

  // Monicize the squarefree part.
  Int sd = 1;
  for (auto& c : sf.coeffs()) sd = lcm(sd, c.get_den());
  ZPoly S(sf.deg() + 1);
  for (int i = 0; i <= sf.deg(); ++i) S[i] = Rat(sf[i] * Rat(sd)).get_num();
  Int scont = 0;
  for (auto& c : S) scont = gcd(scont, c);
  for (auto& c : S) c /= scont;
  if (S.back() < 0)
    for (auto& c : S) c = -c;
  Int a = S.back();
  int n = zdeg(S);
  ZPoly M(n + 1);  // M(Y) = a^(n-1) * S(Y/a), monic integer polynomial
  for (int i = 0; i < n; ++i) M[i] = S[i] * pow_int(a, (unsigned long)(n - 1 - i));
  M[n] = 1;

  auto mono_factors = factor_monic_squarefree(M);

  std::vector<QPoly> irr;
  for (auto& g : mono_factors) {
    // back-substitute Y = a X and take the monic representative over Q
    std::vector<Rat> c(g.size());
    Int ap = 1;
    for (size_t i = 0; i < g.size(); ++i) {
      c[i] = Rat(g[i] * ap);
      ap *= a;
    }
    irr.push_back(QPoly(std::move(c)).monic());
  }
  std::sort(irr.begin(), irr.end(), [](const QPoly& x, const QPoly& y) {
    if (x.deg() != y.deg()) return x.deg() < y.deg();
    return x.str() < y.str();
  });

  // Multiplicities from the original.
  QPoly remq = fq;
  for (auto& g : irr) {
    int m = 0;
    while (true) {
      auto [q, r] = remq.divrem(g);
      if (!r.is_zero()) break;
      remq = q;
      ++m;
    }
    out.emplace_back(g, m);
  }
  return out;
}

bool is_irreducible_q(const QPoly& f) {
  if (f.deg() < 1) return false;
  auto fs = factor_q(f);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace simflat
