#include "simflat/fp.hpp"

#include <map>
#include <set>

#include "simflat/error.hpp"

namespace simflat {

long fp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

FpMat fp_reduce(const QMat& M, long p) {
  FpMat r(p, M.rows(), M.cols());
  Int P(p);
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      const Rat& q = M.at(i, j);
      Int dn = q.get_den() % P;
      if (dn == 0) fail(Err::BadParameter, "entry not p-integral in fp_reduce");
      Int nm = q.get_num() % P;
      long n = (long)nm.get_si();
      if (n < 0) n += p;
      long d = (long)dn.get_si();
      if (d < 0) d += p;
      r.at(i, j) = n * fp_inv(d, p) % p;
    }
  return r;
}

FpMat fp_mul(const FpMat& a, const FpMat& b) {
  FpMat r(a.p, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      long v = a.at(i, k);
      if (!v) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = (r.at(i, j) + v * b.at(k, j)) % a.p;
    }
  return r;
}

FpMat fp_row_space(const FpMat& m) {
  FpMat a = m;
  long p = a.p;
  int row = 0;
  for (int c = 0; c < a.cols && row < a.rows; ++c) {
    int piv = -1;
    for (int i = row; i < a.rows; ++i)
      if (a.at(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
    long s = fp_inv(a.at(row, c), p);
    for (int j = 0; j < a.cols; ++j) a.at(row, j) = a.at(row, j) * s % p;
    for (int i = 0; i < a.rows; ++i) {
      if (i == row) continue;
      long f = a.at(i, c);
      if (!f) continue;
      for (int j = 0; j < a.cols; ++j)
        a.at(i, j) = ((a.at(i, j) - f * a.at(row, j)) % p + p) % p;
    }
    ++row;
  }
  FpMat out(p, row, a.cols);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  return out;
}

FpMat fp_left_kernel(const FpMat& m) {
  long p = m.p;
  // rref of m^T, then read free columns
  FpMat t(p, m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  FpMat r = fp_row_space(t);
  std::vector<int> pivot_of_row(r.rows, -1);
  std::vector<bool> is_pivot(m.rows, false);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j)
      if (r.at(i, j)) { pivot_of_row[i] = j; is_pivot[j] = true; break; }
  FpMat ker(p, m.rows - r.rows, m.rows);
  int k = 0;
  for (int free = 0; free < m.rows; ++free) {
    if (is_pivot[free]) continue;
    ker.at(k, free) = 1;
    for (int i = 0; i < r.rows; ++i)
      ker.at(k, pivot_of_row[i]) = (p - r.at(i, free)) % p;
    ++k;
  }
  return fp_row_space(ker);
}

FpMat fp_spin(const FpMat& seed, const std::vector<FpMat>& action) {
  FpMat cur = fp_row_space(seed);
  while (true) {
    FpMat stack(cur.p, cur.rows * (1 + (int)action.size()), cur.cols);
    int r = 0;
    for (int i = 0; i < cur.rows; ++i, ++r)
      for (int j = 0; j < cur.cols; ++j) stack.at(r, j) = cur.at(i, j);
    for (const auto& g : action) {
      FpMat img = fp_mul(cur, g);
      for (int i = 0; i < img.rows; ++i, ++r)
        for (int j = 0; j < img.cols; ++j) stack.at(r, j) = img.at(i, j);
    }
    FpMat next = fp_row_space(stack);
    if (next.rows == cur.rows) return next;
    cur = next;
  }
}

std::vector<FpMat> fp_invariant_subspaces(const std::vector<FpMat>& action, int n, long p) {
  std::set<std::vector<long>> seen;
  std::vector<FpMat> found;
  auto add = [&](const FpMat& w) {
    if (w.rows == 0 || w.rows == n) return;
    if (seen.insert(w.e).second) found.push_back(w);
  };
  // cyclic submodules from projective representatives
  std::vector<long> v(n, 0);
  // iterate vectors whose first nonzero coordinate is 1
  for (int lead = n - 1; lead >= 0; --lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      FpMat seed(p, 1, n);
      for (int j = 0; j < n; ++j) seed.at(0, j) = v[j];
      add(fp_spin(seed, action));
      // increment coordinates after `lead`
      int i = n - 1;
      while (i > lead && v[i] == p - 1) { v[i] = 0; --i; }
      if (i == lead) break;
      ++v[i];
    }
  }
  // close under sums
  bool grew = true;
  while (grew) {
    grew = false;
    size_t cnt = found.size();
    for (size_t i = 0; i < cnt; ++i)
      for (size_t j = i + 1; j < cnt; ++j) {
        FpMat stack(p, found[i].rows + found[j].rows, n);
        int r = 0;
        for (int a = 0; a < found[i].rows; ++a, ++r)
          for (int c = 0; c < n; ++c) stack.at(r, c) = found[i].at(a, c);
        for (int a = 0; a < found[j].rows; ++a, ++r)
          for (int c = 0; c < n; ++c) stack.at(r, c) = found[j].at(a, c);
        FpMat s = fp_row_space(stack);
        size_t before = seen.size();
        add(s);
        if (seen.size() != before) grew = true;
      }
  }
  return found;
}

}  // namespace simflat
