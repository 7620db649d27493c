#include "simflat/matrix.hpp"

#include <sstream>

#include "simflat/error.hpp"

namespace simflat {

std::vector<std::pair<Int, int>> factor_integer(Int n) {
  std::vector<std::pair<Int, int>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  Int p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
    p = (p == 2) ? Int(3) : Int(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> ps;
  for (auto& [p, e] : factor_integer(n)) ps.push_back(p);
  return ps;
}

std::pair<Int, Int> squarefree_split(const Int& n) {
  Int a = 1, b = 1;
  for (auto& [p, e] : factor_integer(n)) {
    for (int i = 0; i < e / 2; ++i) a *= p;
    if (e % 2) b *= p;
  }
  return {a, b};
}

std::string to_string(const Rat& q) {
  return q.get_str();
}

QMat::QMat(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != size_t(rows) * cols) fail(Err::DimMismatch, "entry count mismatch");
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::zero(int rows, int cols) { return QMat(rows, cols); }

QMat QMat::from_int(int rows, int cols, const std::vector<long>& v) {
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(v[size_t(i) * cols + j]);
  return m;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::DimMismatch, "matrix add");
  QMat r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::DimMismatch, "matrix sub");
  QMat r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) fail(Err::DimMismatch, "matrix mul");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

QMat QMat::operator*(const Rat& c) const {
  QMat r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
  return r;
}

QMat operator*(const Rat& c, const QMat& m) { return m * c; }

QMat QMat::operator-() const { return *this * Rat(-1); }

QMat QMat::transpose() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat QMat::trace() const {
  Rat t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

bool QMat::is_zero() const {
  for (auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool QMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

bool QMat::is_integral() const {
  for (auto& x : e_)
    if (!is_integer(x)) return false;
  return true;
}

bool QMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool QMat::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

QMat QMat::row(int i) const {
  QMat r(1, cols_);
  for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

void QMat::set_row(int i, const QMat& r) {
  for (int j = 0; j < cols_; ++j) at(i, j) = r.at(0, j);
}

QMat QMat::kron(const QMat& o) const {
  QMat r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) == 0) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

QMat QMat::vcat(const QMat& o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  if (cols_ != o.cols_) fail(Err::DimMismatch, "vcat");
  QMat r(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Rat QMat::det() const {
  if (rows_ != cols_) fail(Err::DimMismatch, "det of non-square");
  QMat a = *this;
  int n = rows_;
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rat inv = 1 / a.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a.at(r, c) == 0) continue;
      Rat f = a.at(r, c) * inv;
      for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return d;
}

int QMat::rank() const {
  QMat a = rref();
  int r = 0;
  for (int i = 0; i < a.rows_; ++i) {
    bool nz = false;
    for (int j = 0; j < a.cols_; ++j)
      if (a.at(i, j) != 0) { nz = true; break; }
    if (nz) ++r;
  }
  return r;
}

std::optional<QMat> QMat::inverse() const {
  if (rows_ != cols_) fail(Err::DimMismatch, "inverse of non-square");
  int n = rows_;
  QMat a = *this;
  QMat inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Rat f = 1 / a.at(c, c);
    for (int j = 0; j < n; ++j) { a.at(c, j) *= f; inv.at(c, j) *= f; }
    for (int r = 0; r < n; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      Rat g = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= g * a.at(c, j);
        inv.at(r, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

QMat QMat::pow(const Int& e) const {
  if (rows_ != cols_) fail(Err::DimMismatch, "pow of non-square");
  QMat base = *this;
  QMat r = identity(rows_);
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

QMat QMat::rref() const {
  QMat a = *this;
  int lead = 0;
  for (int r = 0; r < a.rows_ && lead < a.cols_; ++r) {
    int piv = -1;
    while (lead < a.cols_) {
      for (int i = r; i < a.rows_; ++i)
        if (a.at(i, lead) != 0) { piv = i; break; }
      if (piv >= 0) break;
      ++lead;
    }
    if (lead >= a.cols_) break;
    if (piv != r)
      for (int j = 0; j < a.cols_; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Rat f = 1 / a.at(r, lead);
    for (int j = 0; j < a.cols_; ++j) a.at(r, j) *= f;
    for (int i = 0; i < a.rows_; ++i) {
      if (i == r || a.at(i, lead) == 0) continue;
      Rat g = a.at(i, lead);
      for (int j = 0; j < a.cols_; ++j) a.at(i, j) -= g * a.at(r, j);
    }
    ++lead;
  }
  return a;
}

QMat QMat::left_kernel() const {
  // Kernel rows of x*M = 0 from the RREF of M^T.
  QMat t = transpose().rref();
  int n = rows_;  // kernel lives in Q^rows
  std::vector<int> pivot_col(t.rows_, -1);
  std::vector<bool> is_pivot(n, false);
  int r = 0;
  for (; r < t.rows_; ++r) {
    int c = -1;
    for (int j = 0; j < n; ++j)
      if (t.at(r, j) != 0) { c = j; break; }
    if (c < 0) break;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  int rank = r;
  QMat ker(n - rank, n);
  int k = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    ker.at(k, free) = 1;
    for (int i = 0; i < rank; ++i) ker.at(k, pivot_col[i]) = -t.at(i, free);
    ++k;
  }
  return ker;
}

std::optional<QMat> QMat::solve_left(const QMat& b) const {
  // Solve x * M = b. Transpose to M^T x^T = b^T and eliminate.
  QMat aug = transpose();
  QMat bt = b.transpose();
  int n = aug.rows_, m = aug.cols_;
  QMat x(1, m);
  std::vector<int> where(m, -1);
  int row = 0;
  for (int c = 0; c < m && row < n; ++c) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (aug.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m; ++j) std::swap(aug.at(piv, j), aug.at(row, j));
      std::swap(bt.at(piv, 0), bt.at(row, 0));
    }
    Rat f = 1 / aug.at(row, c);
    for (int j = 0; j < m; ++j) aug.at(row, j) *= f;
    bt.at(row, 0) *= f;
    for (int i = 0; i < n; ++i) {
      if (i == row || aug.at(i, c) == 0) continue;
      Rat g = aug.at(i, c);
      for (int j = 0; j < m; ++j) aug.at(i, j) -= g * aug.at(row, j);
      bt.at(i, 0) -= g * bt.at(row, 0);
    }
    where[c] = row;
    ++row;
  }
  for (int c = 0; c < m; ++c)
    if (where[c] >= 0) x.at(0, c) = bt.at(where[c], 0);
  // Consistency: leftover equations must read 0 = 0.
  for (int i = row; i < n; ++i)
    if (bt.at(i, 0) != 0) return std::nullopt;
  return x;
}

QMat QMat::vectorize() const {
  QMat v(1, rows_ * cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) v.at(0, i * cols_ + j) = at(i, j);
  return v;
}

QMat QMat::unvectorize(const QMat& v, int rows, int cols) {
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = v.at(0, i * cols + j);
  return m;
}

Int QMat::denominator_lcm() const {
  Int l = 1;
  for (auto& x : e_) l = lcm(l, x.get_den());
  return l;
}

Int QMat::content() const {
  Int g = 0;
  for (auto& x : e_) g = gcd(g, x.get_num());
  return g;
}

QMat QMat::primitive_scaled() const {
  if (is_zero()) return *this;
  Int d = denominator_lcm();
  QMat m = *this * Rat(d);
  Int c = m.content();
  return m * Rat(Int(1), c);
}

std::string QMat::key() const {
  std::ostringstream os;
  os << rows_ << 'x' << cols_ << ':';
  for (auto& x : e_) os << x.get_str() << ',';
  return os.str();
}

bool is_positive_definite(const QMat& M) {
  if (!M.is_symmetric()) return false;
  int n = M.rows();
  QMat a = M;
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k) <= 0) return false;
    Rat inv = 1 / a.at(k, k);
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a.at(i, j) -= a.at(i, k) * a.at(k, j) * inv;
  }
  return true;
}

}  // namespace simflat
