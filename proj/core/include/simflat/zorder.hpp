#pragma once

#include "simflat/autiso.hpp"
#include "simflat/lattice.hpp"
#include "simflat/matgrp.hpp"

namespace simflat {

/// Z-order in a rational matrix algebra, held by a canonical Z-basis of
/// matrices (echelonized over the vectorized entries; contains 1).
struct ZOrder {
  int m = 0;                // ambient matrix size
  std::vector<QMat> basis;  // Z-basis

  int rank() const { return (int)basis.size(); }
  std::string key() const;
  bool operator==(const ZOrder& o) const { return m == o.m && key() == o.key(); }
};

struct OrderIdeal {
  ZOrder order;
  std::vector<QMat> basis;  // Z-basis of the ideal, full rank in the algebra
};

/// Z-span of all elements of a finite group (Hermite-reduced).
ZOrder enveloping_order(const MatrixGroup& N, long cap = kDefaultOrderCap);

ZOrder make_order(int m, const std::vector<QMat>& spanning);

/// Trace-form determinant on the basis; reduced traces for orders in a
/// definite quaternion algebra over Q.
Int discriminant(const ZOrder& O);

/// Intersection over p | disc of the preimages of rad(O/pO); the whole
/// order when the discriminant is a unit.
OrderIdeal arithmetical_radical(const ZOrder& O);

/// {x in the enveloping Q-algebra : I x <= I}.
ZOrder right_idealizer(const OrderIdeal& I);

/// Iterate radical + idealizer to the hereditary fixed point; ChainDiverged
/// past 64 steps (cannot happen for valid orders).
std::pair<ZOrder, int> radical_idealizer_chain(const ZOrder& O);

/// Generalized Bravais group B°(N): joint stabilizer of the Lambda_infinity
/// lattice class representatives inside the enveloping algebra, preserving a
/// positive definite invariant form.  NotHomogeneous unless the natural
/// module is irreducible.
MatrixGroup bravais_group(const MatrixGroup& N, const QMat& F);

}  // namespace simflat
