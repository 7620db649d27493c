#include "simflat/poly.hpp"

#include <sstream>

#include "simflat/error.hpp"

namespace simflat {

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_int(const std::vector<long>& c) {
  std::vector<Rat> v(c.size());
  for (size_t i = 0; i < c.size(); ++i) v[i] = Rat(c[i]);
  return QPoly(std::move(v));
}

QPoly QPoly::x_power(int k) {
  std::vector<Rat> v(k + 1);
  v[k] = 1;
  return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
  if (d.is_zero()) fail(Err::BadParameter, "polynomial division by zero");
  std::vector<Rat> r = c_;
  int dd = d.deg();
  if (deg() < dd) return {QPoly(), *this};
  std::vector<Rat> q(deg() - dd + 1);
  Rat inv = 1 / d.lc();
  for (int i = deg(); i >= dd; --i) {
    Rat f = r[i] * inv;
    if (f == 0) continue;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

bool QPoly::divides(const QPoly& f) const { return f.divrem(*this).second.is_zero(); }

QPoly QPoly::derivative() const {
  if (deg() < 1) return QPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat((long)i);
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / lc());
}

Rat QPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (int i = deg(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

QMat QPoly::eval(const QMat& A) const {
  QMat r = QMat::zero(A.rows(), A.cols());
  for (int i = deg(); i >= 0; --i) {
    r = r * A;
    for (int k = 0; k < A.rows(); ++k) r.at(k, k) += c_[i];
  }
  return r;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    Rat a = abs(c_[i]);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x.divrem(y).second;
    x = y;
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

QPoly poly_lcm(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QPoly g = poly_gcd(a, b);
  return (a * b).divrem(g).first.monic();
}

std::tuple<QPoly, QPoly, QPoly> poly_xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly u0 = QPoly::from_int({1}), u1;
  QPoly v0, v1 = QPoly::from_int({1});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    QPoly nu = u0 - q * u1;
    QPoly nv = v0 - q * v1;
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = nu;
    v0 = v1;
    v1 = nv;
  }
  if (!r0.is_zero()) {
    Rat s = 1 / r0.lc();
    r0 = r0 * s;
    u0 = u0 * s;
    v0 = v0 * s;
  }
  return {r0, u0, v0};
}

QPoly cyclotomic(int n) {
  if (n < 1) fail(Err::BadParameter, "cyclotomic index must be >= 1");
  std::vector<Rat> xn(n + 1);
  xn[0] = -1;
  xn[n] = 1;
  QPoly f{std::move(xn)};
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    f = f.divrem(cyclotomic(d)).first;
  }
  return f;
}

namespace {

// Minimal g with v * g(A) = 0, via a Krylov chain with incremental
// elimination; the combination coefficients give g directly.
QPoly local_min_poly(const QMat& A, QMat v) {
  int n = A.cols();
  struct Row {
    std::vector<Rat> vec, comb;
    int pivot;
  };
  std::vector<Row> ech;
  QMat cur = v;
  for (int k = 0;; ++k) {
    std::vector<Rat> w(n), c(k + 1);
    for (int j = 0; j < n; ++j) w[j] = cur.at(0, j);
    c[k] = 1;
    for (auto& r : ech) {
      if (w[r.pivot] == 0) continue;
      Rat f = w[r.pivot] / r.vec[r.pivot];
      for (int j = 0; j < n; ++j) w[j] -= f * r.vec[j];
      for (size_t j = 0; j < r.comb.size(); ++j) c[j] -= f * r.comb[j];
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (w[j] != 0) { piv = j; break; }
    if (piv < 0) return QPoly(std::move(c)).monic();
    ech.push_back({std::move(w), std::move(c), piv});
    cur = cur * A;
  }
}

}  // namespace

QPoly min_poly(const QMat& A) {
  if (!A.is_square()) fail(Err::DimMismatch, "min_poly of non-square");
  int n = A.rows();
  QPoly mu = QPoly::from_int({1});
  for (int s = 0; s < n && mu.deg() < n; ++s) {
    QMat v(1, n);
    v.at(0, s) = 1;
    mu = poly_lcm(mu, local_min_poly(A, v));
  }
  return mu.monic();
}

}  // namespace simflat
