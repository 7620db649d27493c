#pragma once

#include <optional>
#include <vector>

#include "simflat/lattice.hpp"
#include "simflat/matrix.hpp"
#include "simflat/poly.hpp"

namespace simflat {

/// Enumeration cap from the averaging design; desk-scale groups stay far
/// below it.
inline constexpr long kDefaultOrderCap = 10'000'000L;

/// Finite subgroup of GL_m(Q) given by generators; the full element list is
/// computed on demand and cached (write-once).
class MatrixGroup {
public:
  MatrixGroup(int dim, std::vector<QMat> gens);
  static MatrixGroup trivial(int dim) { return MatrixGroup(dim, {}); }

  int dim() const { return dim_; }
  const std::vector<QMat>& generators() const { return gens_; }

  /// Full element list, identity first; OrderCapExceeded beyond cap.
  const std::vector<QMat>& elements(long cap = kDefaultOrderCap) const;
  Int order(long cap = kDefaultOrderCap) const;
  bool has_cached_elements() const { return !elements_.empty(); }

private:
  int dim_;
  std::vector<QMat> gens_;
  mutable std::vector<QMat> elements_;
};

struct FormSpace {
  std::vector<QMat> basis_sym;
  std::vector<QMat> basis_skew;
  int dim() const { return (int)(basis_sym.size() + basis_skew.size()); }
};

enum class AlgebraTag {
  Field,
  ImaginaryQuadratic,   // field of degree 2, totally complex
  QuaternionDefinite,
  MatrixOverDivision,
  Other,
};

struct EndAlgebra {
  std::vector<QMat> basis;
  AlgebraTag tag = AlgebraTag::Other;
  bool commutative = false;
  /// For commutative algebras: a primitive element and its minimal
  /// polynomial (degree == dim of the algebra).
  std::optional<QMat> primitive;
  std::optional<QPoly> min_poly;
};

Int enumerate_group(const MatrixGroup& G, long cap = kDefaultOrderCap);

FormSpace fixed_forms(const MatrixGroup& G);

/// (1/|G|) sum over g of g F0 g^T; with the enumeration cap exceeded, falls
/// back to a positive definite point of the symmetric fixed space.
QMat average_form(const MatrixGroup& G, const QMat& F0, long cap = kDefaultOrderCap);

EndAlgebra end_algebra(const MatrixGroup& G);

bool is_symplectic(const MatrixGroup& G);

bool is_rationally_irreducible(const MatrixGroup& G);

MatrixGroup wreath(const MatrixGroup& H, int k);

MatrixGroup tensor(const MatrixGroup& G, const MatrixGroup& H);

// --- helpers on enumerated groups (element lists) ---

Int element_order(const QMat& g, long cap = 1'000'000);

/// Subgroup generated by `gens` inside an ambient group, via closure.
std::vector<QMat> closure(const std::vector<QMat>& gens, long cap = kDefaultOrderCap);

std::vector<QMat> center_of(const std::vector<QMat>& elements, const std::vector<QMat>& gens);

/// Normal closure of `seed` under conjugation by the group generators,
/// aborting with nullopt if the closure grows past `cap`.
std::optional<std::vector<QMat>> normal_closure(const std::vector<QMat>& seed,
                                                const std::vector<QMat>& group_gens, long cap);

/// Largest normal p-subgroup O_p of an enumerated group.
std::vector<QMat> p_core(const MatrixGroup& G, long p);

/// Derived subgroup of an enumerated group.
std::vector<QMat> derived_subgroup(const MatrixGroup& G);

}  // namespace simflat
