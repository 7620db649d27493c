#include "simflat/hnf.hpp"

#include <algorithm>

#include "simflat/error.hpp"

namespace simflat {

namespace {

using ZRow = std::vector<Int>;

void row_submul(ZRow& a, const ZRow& b, const Int& q) {
  if (q == 0) return;
  for (size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
}

// Row Hermite form of an integer row list, in place; returns the rank.
int hnf_int(std::vector<ZRow>& a, int cols) {
  int r = 0;
  for (int c = 0; c < cols && r < (int)a.size(); ++c) {
    // Euclidean elimination in column c among rows >= r.
    while (true) {
      int best = -1;
      for (int i = r; i < (int)a.size(); ++i) {
        if (a[i][c] == 0) continue;
        if (best < 0 || cmpabs(a[i][c], a[best][c]) < 0) best = i;
      }
      if (best < 0) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (int i = r + 1; i < (int)a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Int q = floor_div(a[i][c], a[r][c]);
        row_submul(a[i], a[r], q);
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    bool has_pivot = (r < (int)a.size()) && a[r][c] != 0;
    // The pivot search above may leave a[r][c] == 0 when the column was empty.
    if (!has_pivot) {
      bool any = false;
      for (int i = r; i < (int)a.size(); ++i)
        if (a[i][c] != 0) { any = true; break; }
      if (!any) continue;
    }
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(a[i][c], a[r][c]);
      row_submul(a[i], a[r], q);
    }
    ++r;
  }
  return r;
}

}  // namespace

QMat hnf_rows(const QMat& M) {
  if (M.rows() == 0) return QMat(0, M.cols());
  Int d = M.denominator_lcm();
  std::vector<ZRow> a(M.rows(), ZRow(M.cols()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      Rat x = M.at(i, j) * Rat(d);
      a[i][j] = x.get_num();
    }
  int rank = hnf_int(a, M.cols());
  QMat H(rank, M.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < M.cols(); ++j) H.at(i, j) = make_rat(a[i][j], d);
  return H;
}

QMat hnf_basis(const QMat& M) {
  QMat H = hnf_rows(M);
  if (H.rows() != M.cols())
    fail(Err::RankDeficient, "row span has rank " + std::to_string(H.rows()) +
                                 " < " + std::to_string(M.cols()));
  return H;
}

std::vector<Int> snf_invariants(const QMat& A) {
  if (!A.is_integral()) fail(Err::NotIntegral, "snf of non-integral matrix");
  int n = A.rows(), m = A.cols();
  std::vector<ZRow> a(n, ZRow(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = A.at(i, j).get_num();

  int k = 0;
  int lim = std::min(n, m);
  while (k < lim) {
    // Locate a minimal nonzero entry in the trailing block.
    int pi = -1, pj = -1;
    for (int i = k; i < n; ++i)
      for (int j = k; j < m; ++j) {
        if (a[i][j] == 0) continue;
        if (pi < 0 || cmpabs(a[i][j], a[pi][pj]) < 0) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    std::swap(a[k], a[pi]);
    for (int i = k; i < n; ++i) std::swap(a[i][k], a[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] == 0) continue;
        Int q = floor_div(a[i][k], a[k][k]);
        row_submul(a[i], a[k], q);
        if (a[i][k] != 0) { std::swap(a[k], a[i]); dirty = true; }
      }
      for (int j = k + 1; j < m; ++j) {
        if (a[k][j] == 0) continue;
        Int q = floor_div(a[k][j], a[k][k]);
        for (int i = k; i < n; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) {
          for (int i = k; i < n; ++i) std::swap(a[i][k], a[i][j]);
          dirty = true;
        }
      }
    }
    // Divisibility fixup: fold any non-multiple into row k and redo.
    bool ok = true;
    for (int i = k + 1; i < n && ok; ++i)
      for (int j = k + 1; j < m && ok; ++j)
        if (a[i][j] % a[k][k] != 0) {
          for (int t = 0; t < m; ++t) a[k][t] += a[i][t];
          ok = false;
        }
    if (ok) ++k;
  }
  std::vector<Int> d;
  for (int i = 0; i < lim; ++i) {
    Int v = a[i][i];
    if (v < 0) v = -v;
    if (v == 0) break;
    d.push_back(v);
  }
  return d;
}

}  // namespace simflat
