#include <algorithm>

#include "simflat/error.hpp"
#include "simflat/lattice.hpp"

namespace simflat {

namespace {

struct LdlData {
  std::vector<Rat> d;                // pivots
  std::vector<std::vector<Rat>> u;   // u[i][j], j > i
};

// Exact LDL^T quadratic completion: Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
LdlData ldl(const QMat& G) {
  int n = G.rows();
  QMat a = G;
  LdlData out;
  out.d.resize(n);
  out.u.assign(n, std::vector<Rat>(n));
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k) <= 0) fail(Err::NotPositiveDefinite, "form not positive definite on lattice");
    out.d[k] = a.at(k, k);
    for (int j = k + 1; j < n; ++j) out.u[k][j] = a.at(k, j) / a.at(k, k);
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) -= a.at(i, k) * a.at(k, j) / a.at(k, k);
  }
  return out;
}

}  // namespace

std::vector<ShortVec> short_vectors(const Lattice& L, const QMat& F, const Rat& bound) {
  QMat G = gram(L, F);
  if (!G.is_symmetric()) fail(Err::NotPositiveDefinite, "form must be symmetric");
  int n = G.rows();
  LdlData c = ldl(G);

  std::vector<ShortVec> out;
  if (bound <= 0) return out;

  std::vector<Int> x(n);

  // Depth-first from the last coordinate down, expanding outward from the
  // interval center so bounds never need square roots.
  struct Frame {
    Rat s;        // offset sum_{j>i} u_ij x_j
    Rat budget;   // remaining norm budget
    Int t;        // current candidate (absolute)
    int phase;    // 0: t0 upward, 1: t0-1 downward
    Int up, down;
  };
  std::vector<Frame> st(n);

  auto offset_at = [&](int lvl) {
    Rat s = 0;
    for (int j = lvl + 1; j < n; ++j)
      if (x[j] != 0) s += c.u[lvl][j] * Rat(x[j]);
    return s;
  };

  int lvl = n - 1;
  {
    Frame& f = st[lvl];
    f.s = 0;
    f.budget = bound;
    Rat center = -f.s;
    f.up = floor_rat(center);
    f.down = f.up - 1;
    f.phase = 0;
  }
  while (true) {
    Frame& f = st[lvl];
    bool found = false;
    Int t;
    while (!found) {
      if (f.phase == 0) {
        t = f.up;
        Rat val = (Rat(t) + f.s);
        if (val * val * c.d[lvl] <= f.budget) {
          f.up += 1;
          found = true;
        } else if (val < 0) {
          // still left of the interval center; the interval may start above
          f.up += 1;
        } else {
          f.phase = 1;
        }
      } else if (f.phase == 1) {
        t = f.down;
        Rat val = (Rat(t) + f.s);
        if (val * val * c.d[lvl] <= f.budget) {
          f.down -= 1;
          found = true;
        } else {
          f.phase = 2;
        }
      } else {
        break;
      }
    }
    if (!found) {
      // exhausted this level, backtrack
      ++lvl;
      if (lvl >= n) break;
      continue;
    }
    x[lvl] = t;
    Rat val = Rat(t) + f.s;
    Rat used = val * val * c.d[lvl];
    if (lvl == 0) {
      Rat norm = bound - (f.budget - used);
      bool zero = true;
      for (auto& xi : x)
        if (xi != 0) { zero = false; break; }
      if (!zero && norm > 0) {
        QMat coords(1, n);
        for (int j = 0; j < n; ++j) coords.at(0, j) = Rat(x[j]);
        QMat v = coords * L.basis();
        // keep one representative per +- pair
        bool keep = false;
        for (int j = 0; j < v.cols(); ++j) {
          if (v.at(0, j) != 0) { keep = v.at(0, j) > 0; break; }
        }
        if (keep) out.push_back({v, coords, norm});
      }
    } else {
      int nxt = lvl - 1;
      Frame& g = st[nxt];
      g.s = offset_at(nxt);
      g.budget = f.budget - used;
      Rat center = -g.s;
      g.up = floor_rat(center);
      g.down = g.up - 1;
      g.phase = 0;
      lvl = nxt;
      continue;
    }
  }

  std::sort(out.begin(), out.end(), [](const ShortVec& a, const ShortVec& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    for (int j = 0; j < a.v.cols(); ++j)
      if (a.v.at(0, j) != b.v.at(0, j)) return a.v.at(0, j) < b.v.at(0, j);
    return false;
  });
  return out;
}

}  // namespace simflat
