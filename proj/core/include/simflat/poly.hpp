#pragma once

#include <string>
#include <vector>

#include "simflat/matrix.hpp"

namespace simflat {

/// Polynomial over Q, coefficients low-to-high, no trailing zeros.
class QPoly {
public:
  QPoly() {}
  explicit QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  static QPoly from_int(const std::vector<long>& c);
  static QPoly x_power(int k);  // X^k

  int deg() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& operator[](int i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& s) const;

  /// Euclidean division; divisor must be nonzero.
  std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
  bool divides(const QPoly& f) const;  // this | f

  QPoly derivative() const;
  QPoly monic() const;
  Rat eval(const Rat& x) const;
  /// Evaluate at a square matrix.
  QMat eval(const QMat& A) const;

  std::string str() const;  // human-readable, variable X

private:
  void trim();
  std::vector<Rat> c_;
};

QPoly poly_gcd(const QPoly& a, const QPoly& b);  // monic gcd
QPoly poly_lcm(const QPoly& a, const QPoly& b);

/// (g, u, v) with u a + v b = g, g the monic gcd.
std::tuple<QPoly, QPoly, QPoly> poly_xgcd(const QPoly& a, const QPoly& b);

/// n-th cyclotomic polynomial, n >= 1.
QPoly cyclotomic(int n);

/// Minimal polynomial of a square rational matrix (monic).
QPoly min_poly(const QMat& A);

/// Irreducible monic factors over Q with multiplicities, lexicographically
/// keyed for determinism.  Constants have no factors.
std::vector<std::pair<QPoly, int>> factor_q(const QPoly& f);

bool is_irreducible_q(const QPoly& f);

}  // namespace simflat
