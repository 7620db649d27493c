#pragma once

#include <optional>
#include <tuple>

#include "simflat/lattice.hpp"
#include "simflat/matgrp.hpp"

namespace simflat {

/// G-invariant lattices M with pL <= M < L (proper), from the invariant
/// subspaces of L/pL; NotInvariant unless Lg = L for all generators.
std::vector<Lattice> centerings(const MatrixGroup& G, const Lattice& L, long p);

/// Same with an explicit action (e.g. an order basis); the matrices only
/// need to map L into itself.
std::vector<Lattice> centerings_action(const std::vector<QMat>& action, const Lattice& L, long p);

struct CenteringGraph {
  std::vector<Lattice> nodes;
  std::vector<std::tuple<int, long, int>> edges;  // (from, p, to)
  std::vector<int> class_reps;                    // node indices, one per class
  std::vector<int> class_of;                      // node -> class position
};

/// Closure of the centering graph at the primes dividing |G|, modulo
/// scaling; class representatives up to module isomorphism over End(G).
CenteringGraph lattice_classes(const MatrixGroup& G, const Lattice& L0, const QMat& F);

/// Engine shared with the order machinery: explicit action, explicit End
/// basis for the isomorphism tests, explicit prime support.
CenteringGraph lattice_classes_action(const std::vector<QMat>& action,
                                      const std::vector<QMat>& end_basis, const Lattice& L0,
                                      const QMat& F, const std::vector<Int>& primes);

/// x in span(end_basis) with A x = B, or nullopt.  Searches the hom lattice
/// {x : A x <= B} below an AM-GM determinant bound.
std::optional<QMat> module_isomorphism(const Lattice& A, const Lattice& B,
                                       const std::vector<QMat>& end_basis);

/// Rescale so the pair (cL, F) is integral with squarefree Gram content.
Lattice scaling_canonical(const Lattice& L, const QMat& F);

}  // namespace simflat
