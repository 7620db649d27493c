#pragma once

#include "simflat/matgrp.hpp"

namespace simflat {

/// Echelonized basis of {e in M_m(Q) : e x = x e for all listed x}.
std::vector<QMat> commutant_basis(const std::vector<QMat>& mats, int m);

/// Elements of the span commuting with every basis element.
std::vector<QMat> algebra_center(const std::vector<QMat>& basis, int m);

/// Primitive element of a commutative spanning basis: element whose minimal
/// polynomial has degree equal to the span dimension.  Deterministic seeded
/// search; nullopt when none is found (non-separable corner cases).
std::optional<std::pair<QMat, QPoly>> primitive_element(const std::vector<QMat>& basis, int m);

/// Classify the unital span of `basis` inside M_m(Q).
EndAlgebra classify_algebra(const std::vector<QMat>& basis, int m);

/// Deterministic zero-divisor scan: basis elements, pairwise products and a
/// seeded grid of small combinations, looking for reducible minimal
/// polynomials.  Finding one certifies a zero divisor (or nilpotent).
bool has_zero_divisor_scan(const std::vector<QMat>& basis, int m);

}  // namespace simflat
