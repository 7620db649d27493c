#pragma once

#include "simflat/lattice.hpp"
#include "simflat/matgrp.hpp"
#include "simflat/poly.hpp"

namespace simflat {

/// Companion matrix acting on row vectors (v -> v M is multiplication by X
/// on the power basis).
QMat companion(const QPoly& f);

/// Multiplication-by-zeta matrix: companion of the m-th cyclotomic poly.
MatrixGroup cyclic_group(int m);  // BadParameter for m < 3

/// Galois action zeta -> zeta^k on the power basis of Phi_m.
QMat galois_matrix(int m, long k);

/// +-C_p : C_o in GL_{p-1}(Q) for p >= 5 prime, p - 1 = 2^a * o, o odd.
MatrixGroup cp_co(long p);

/// Quasidihedral group QD_{2^n} in GL_{2^{n-2}}(Q), n >= 4.
MatrixGroup qd_group(int n);

/// n-fold tensor power of the 2x2 dihedral pair: extraspecial 2_+^{1+2n}.
MatrixGroup extraspecial_T(int n);

struct ExtraspecialP {
  MatrixGroup group;   // order p^{1+2n} in dimension p^n (p-1)
  QMat zeta_action;    // scalar multiplication by zeta_p, blown up
};
ExtraspecialP extraspecial_p(long p, int n);

struct WallPair {
  int n;
  Lattice L, Lp;  // L_n and L'_n in dimension 2^n
};
WallPair wall_lattices(int n);

struct GaussLattice2 {
  int n;
  Lattice blowup;    // rank 2^{n+1} lattice, coordinates (x | y) for x + sqrt(-2) y
  QMat sqrt_minus2;  // action matrix, squares to -2
};
GaussLattice2 wall_M(int n);

/// Tensor product over Z[sqrt(-2)] in blowup coordinates.
Lattice gauss_tensor(const GaussLattice2& a, const GaussLattice2& b);

/// h_n = [[1,1],[1,-1]] tensor I with h_n^2 = 2I.
QMat wall_h(int n);

/// lcm of the orders of all finite subgroups of GL_n(Q).
Int minkowski_bound(int n);

struct FittingCandidate {
  std::string name;
  long p;
  Int degree;  // dimension of the rational irreducible representation
};
/// Hall-theorem candidates for O_p(G), G symplectic primitive in dim two_n.
std::vector<FittingCandidate> fitting_candidates(int two_n);

// --- explicit groups used by the shipped database ---

QMat quat_left(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
QMat quat_right(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
Lattice hurwitz_lattice();

MatrixGroup sl23();              // order 24, the Hurwitz unit group
MatrixGroup gl23();              // order 48, commuting algebra Q(sqrt(-2))
MatrixGroup sl23_circ_c3();      // order 72
MatrixGroup c4_tensor_aut_a2();  // order 24
MatrixGroup aut_a2();            // order 12, Aut of the hexagonal lattice
MatrixGroup q8();                // order 8 in GL_4

}  // namespace simflat
