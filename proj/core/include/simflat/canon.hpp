#pragma once

#include "simflat/invlat.hpp"
#include "simflat/matgrp.hpp"
#include "simflat/poly.hpp"

namespace simflat {

/// Normalized invariant pairs of minimal determinant across the invariant
/// lattice classes and squarefree form rescalings, geometrically deduplicated.
struct MinimalPair {
  Lattice lattice;
  QMat form;
  Int det;
};
std::vector<MinimalPair> minimal_normalized_pairs(const MatrixGroup& A, const QMat& F0);

/// The database's allowed minimal polynomials for S F^-1 up to max_deg:
/// cyclotomic-difference polynomials and the listed exotic elements; the
/// X^2 + d family is matched separately.
const std::vector<QPoly>& allowed_min_polys_fixed(int max_deg);
bool minpoly_allowed(const QPoly& mu);

/// Integer skew forms S on the rebased group with S F^-1 a primitive
/// element of End whose minimal polynomial is allowed; at most [End : Q].
std::vector<QMat> qualifying_skews(const MatrixGroup& rebased, const QMat& F);

/// Roots of an irreducible `target` inside the field Q[w] with minimal
/// polynomial mu_w: each result phi has phi(w) a root, deg phi < deg mu_w.
/// Exact, via the etale tensor algebra Q[w] (x) Q[X]/(target).
std::vector<QPoly> field_roots(const QPoly& target, const QPoly& mu_w);

}  // namespace simflat
