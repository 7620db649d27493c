#pragma once

#include <vector>

#include "simflat/matrix.hpp"

namespace simflat {

/// Canonical staircase basis of the Z-module generated by the rows of M.
/// Rational entries are allowed: the module d*M (d = lcm of denominators) is
/// reduced to row Hermite form and scaled back, which is canonical for the
/// module itself.  Pivots positive, entries above a pivot reduced into
/// [0, pivot).  Zero rows are dropped, so the result has rank many rows.
QMat hnf_rows(const QMat& M);

/// Same as hnf_rows but requires full column rank; RankDeficient otherwise.
QMat hnf_basis(const QMat& M);

/// Invariant factors d_1 | d_2 | ... | d_n (all positive) of an integral
/// square matrix of full rank, i.e. the Smith normal form diagonal.
std::vector<Int> snf_invariants(const QMat& A);

}  // namespace simflat
