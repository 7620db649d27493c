#pragma once

#include <vector>

#include "simflat/matrix.hpp"

namespace simflat {

/// Dense matrix over F_p for a small prime p; entries in [0, p).
struct FpMat {
  long p = 0;
  int rows = 0, cols = 0;
  std::vector<long> e;

  FpMat() {}
  FpMat(long p_, int r, int c) : p(p_), rows(r), cols(c), e(size_t(r) * c, 0) {}
  long& at(int i, int j) { return e[size_t(i) * cols + j]; }
  long at(int i, int j) const { return e[size_t(i) * cols + j]; }
  bool operator==(const FpMat& o) const = default;
};

long fp_inv(long a, long p);

/// Reduce a rational matrix mod p; denominators must be prime to p.
FpMat fp_reduce(const QMat& M, long p);

FpMat fp_mul(const FpMat& a, const FpMat& b);

/// Reduced row echelon form with zero rows dropped: the canonical basis of
/// the row space.  Usable as a subspace identity key.
FpMat fp_row_space(const FpMat& m);

/// Basis of {x : x * M = 0}, canonicalized.
FpMat fp_left_kernel(const FpMat& m);

/// Closure of the row space of `seed` under right multiplication by the
/// action matrices (spinning).
FpMat fp_spin(const FpMat& seed, const std::vector<FpMat>& action);

/// All proper nonzero subspaces of F_p^n invariant under every action
/// matrix: cyclic spins of projective vectors closed under pairwise sums.
std::vector<FpMat> fp_invariant_subspaces(const std::vector<FpMat>& action, int n, long p);

}  // namespace simflat
