#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simflat/rational.hpp"

namespace simflat {

/// Dense matrix over the rationals.  All arithmetic is exact; there is no
/// floating point anywhere in the library.
class QMat {
public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  QMat(int rows, int cols, std::vector<Rat> entries);

  static QMat identity(int n);
  static QMat zero(int rows, int cols);
  /// Row-major initializer from integers, for tests and fixtures.
  static QMat from_int(int rows, int cols, const std::vector<long>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const QMat& o) const { return !(*this == o); }

  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat operator*(const QMat& o) const;
  QMat operator*(const Rat& c) const;
  QMat operator-() const;

  QMat transpose() const;
  Rat trace() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_integral() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

  QMat row(int i) const;
  void set_row(int i, const QMat& r);

  /// Kronecker product.
  QMat kron(const QMat& o) const;
  /// Stack other below this.
  QMat vcat(const QMat& o) const;

  Rat det() const;
  int rank() const;
  /// Inverse; std::nullopt when singular.
  std::optional<QMat> inverse() const;
  QMat pow(const Int& e) const;  // e >= 0

  /// Basis of {x row vector : x * M = 0}, echelonized.
  QMat left_kernel() const;
  /// Solve x * M = b for a single row b; nullopt if inconsistent.
  std::optional<QMat> solve_left(const QMat& b) const;

  /// Reduced row echelon form (over Q).
  QMat rref() const;

  /// Entries flattened row-major as a 1 x (rows*cols) matrix.
  QMat vectorize() const;
  static QMat unvectorize(const QMat& v, int rows, int cols);

  /// lcm of entry denominators (1 for the zero matrix).
  Int denominator_lcm() const;
  /// gcd of entry numerators of an integral matrix (0 for zero matrix).
  Int content() const;

  /// Multiply by the smallest positive rational making the matrix integral
  /// with content 1.  Zero matrix is returned unchanged.
  QMat primitive_scaled() const;

  std::string key() const;  // canonical serialization, usable as a hash key

private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

QMat operator*(const Rat& c, const QMat& m);

/// True when M is symmetric with all leading principal minors positive
/// (checked by exact LDL^T pivots).
bool is_positive_definite(const QMat& M);

}  // namespace simflat
