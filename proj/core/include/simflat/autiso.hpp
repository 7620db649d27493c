#pragma once

#include <optional>

#include "simflat/lattice.hpp"
#include "simflat/matgrp.hpp"

namespace simflat {

struct AutResult {
  std::vector<QMat> generators;  // ambient matrices g with L g = L
  Int order = 1;
  std::vector<Int> base_orbits;  // orbit sizes along the stabilizer chain

  MatrixGroup group(int dim) const {
    return generators.empty() ? MatrixGroup::trivial(dim) : MatrixGroup(dim, generators);
  }
};

/// Full automorphism group {g : Lg = L, g f g^T = f for every form}.
/// Backtracks over short vectors with fingerprint pruning; order comes from
/// the stabilizer chain.
AutResult aut_group(const Lattice& L, const FormTuple& T);

/// Aut_K(L, F) for K = Q[SF^-1]: automorphisms commuting with e = SF^-1,
/// realized as aut_group with the extra forms e^j F.  ReducibleEndomorphism
/// unless the minimal polynomial of e is irreducible of degree >= 2.
AutResult aut_group_K(const Lattice& L, const QMat& F, const QMat& S);

/// A matrix T with L1 T = L2 and T f2 T^T = f1 form-by-form, or nullopt.
std::optional<QMat> isometry(const Lattice& L1, const FormTuple& T1,
                             const Lattice& L2, const FormTuple& T2);

/// Subgroup of G stabilizing every listed lattice (orbit-stabilizer with
/// Schreier generators; order = |G| / orbit size).
AutResult stabilize_lattices(const AutResult& G, const std::vector<Lattice>& Ls);

/// Drop redundant generators while preserving the group order (seeded
/// descent; skipped for orders beyond enumeration reach).
std::vector<QMat> reduce_generators(std::vector<QMat> gens, const Int& order);

}  // namespace simflat
