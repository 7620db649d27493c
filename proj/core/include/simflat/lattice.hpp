#pragma once

#include <string>
#include <vector>

#include "simflat/hnf.hpp"
#include "simflat/matrix.hpp"

namespace simflat {

/// Z-lattice of row vectors in Q^(1 x dim), held by its canonical staircase
/// basis, so equality of lattices is equality of bases.  Most operations
/// expect full rank; perpendicular components may have rank < dim.
class Lattice {
public:
  Lattice() : basis_(0, 0) {}  // empty placeholder
  explicit Lattice(const QMat& generators) : basis_(hnf_rows(generators)) {}
  static Lattice standard(int m) { return Lattice(QMat::identity(m)); }

  int dim() const { return basis_.cols(); }
  int rank() const { return basis_.rows(); }
  bool full_rank() const { return rank() == dim(); }
  const QMat& basis() const { return basis_; }

  bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

  bool contains(const QMat& row) const;
  bool contains(const Lattice& sub) const;
  Lattice scaled(const Rat& c) const { return Lattice(basis_ * c); }
  /// Image L * g.
  Lattice image(const QMat& g) const { return Lattice(basis_ * g); }

  std::string key() const { return basis_.key(); }

private:
  QMat basis_;
};

/// Positive definite form together with auxiliary invariant forms.
struct FormTuple {
  QMat posdef;
  std::vector<QMat> extras;

  std::vector<QMat> all() const {
    std::vector<QMat> v{posdef};
    v.insert(v.end(), extras.begin(), extras.end());
    return v;
  }
};

struct IntegralPair {
  Lattice lattice;
  QMat form;
};

/// Gram matrix B F B^T of the basis.
QMat gram(const Lattice& L, const QMat& F);

/// Dual lattice L^(#,F); F must be symmetric invertible (SingularForm).
Lattice dual_lattice(const Lattice& L, const QMat& F);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

/// Invariant factors of sup/sub for full-rank sub <= sup.
std::vector<Int> quotient_invariants(const Lattice& sub, const Lattice& sup);

/// Index [sup : sub] when sub <= sup.
Int lattice_index(const Lattice& sub, const Lattice& sup);

bool pair_is_integral(const IntegralPair& p);
/// det(L, F) = [L^(#,F) : L] of an integral pair.
Int pair_det(const IntegralPair& p);

/// Watson-style reduction: iterates partial dualizations (L^# ∩ p^-1 L, pF)
/// until the quotient L^#/L has squarefree exponent and p-rank <= dim/2 at
/// every prime.  Idempotent; NotIntegral on bad input.
IntegralPair normalize_pair(const IntegralPair& p);

struct ShortVec {
  QMat v;       // the vector, 1 x dim
  QMat coords;  // integer coordinates w.r.t. the basis, 1 x rank
  Rat norm;
};

/// All v in L with 0 < vFv^T <= bound, one vector per +- pair (first nonzero
/// entry positive), sorted by norm then entries.  Exact enumeration over a
/// rational LDL^T quadratic completion.
std::vector<ShortVec> short_vectors(const Lattice& L, const QMat& F, const Rat& bound);

/// Finest decomposition of L into components pairwise perpendicular under
/// every listed form (first one positive definite).
std::vector<Lattice> perp_decompose(const Lattice& L, const std::vector<QMat>& forms);

}  // namespace simflat
