#include "simflat/algebra.hpp"

#include <random>

#include "simflat/error.hpp"

namespace simflat {

namespace {

std::vector<QMat> echelon_span(const std::vector<QMat>& mats, int m) {
  QMat stack(0, m * m);
  for (auto& f : mats) stack = stack.vcat(f.vectorize());
  QMat r = hnf_rows(stack);
  std::vector<QMat> out;
  for (int i = 0; i < r.rows(); ++i)
    out.push_back(QMat::unvectorize(r.row(i), m, m).primitive_scaled());
  return out;
}

}  // namespace

std::vector<QMat> commutant_basis(const std::vector<QMat>& mats, int m) {
  if (mats.empty()) {
    std::vector<QMat> all;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        QMat e(m, m);
        e.at(i, j) = 1;
        all.push_back(e);
      }
    return all;
  }
  QMat sys(0, m * m);
  for (const auto& g : mats) {
    QMat block(m * m, m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) {
          // (eg - ge)_{ij} = sum_l e_il g_lj - g_il e_lj
          block.at(i * m + j, i * m + l) += g.at(l, j);
          block.at(i * m + j, l * m + j) -= g.at(i, l);
        }
    sys = sys.vcat(block);
  }
  QMat ker = sys.transpose().left_kernel();
  std::vector<QMat> out;
  for (int i = 0; i < ker.rows(); ++i)
    out.push_back(QMat::unvectorize(ker.row(i), m, m));
  return echelon_span(out, m);
}

std::vector<QMat> algebra_center(const std::vector<QMat>& basis, int m) {
  // center = commutant of the basis intersected with the span
  std::vector<QMat> comm = commutant_basis(basis, m);
  // intersect spans via stacked echelon bookkeeping
  QMat a(0, m * m), b(0, m * m);
  for (auto& x : basis) a = a.vcat(x.vectorize());
  for (auto& x : comm) b = b.vcat(x.vectorize());
  // intersection of row spaces over Q: kernel trick
  QMat stacked = a.vcat(b);
  QMat ker = stacked.left_kernel();  // rows (u | v) with u*a + v*b = 0
  std::vector<QMat> out;
  for (int i = 0; i < ker.rows(); ++i) {
    QMat u(1, a.rows());
    for (int j = 0; j < a.rows(); ++j) u.at(0, j) = ker.at(i, j);
    QMat vec = u * a;
    if (!vec.is_zero()) out.push_back(QMat::unvectorize(vec, m, m));
  }
  return echelon_span(out, m);
}

std::optional<std::pair<QMat, QPoly>> primitive_element(const std::vector<QMat>& basis, int m) {
  int dim = (int)basis.size();
  auto try_elt = [&](const QMat& e) -> std::optional<std::pair<QMat, QPoly>> {
    QPoly mu = min_poly(e);
    if (mu.deg() == dim) return std::make_pair(e, mu);
    return std::nullopt;
  };
  for (const auto& b : basis)
    if (auto r = try_elt(b)) return r;
  std::mt19937 rng(424243);
  for (int t = 0; t < 200; ++t) {
    QMat e = QMat::zero(m, m);
    for (const auto& b : basis) e = e + b * Rat((long)(rng() % 11) - 5);
    if (auto r = try_elt(e)) return r;
  }
  return std::nullopt;
}

bool has_zero_divisor_scan(const std::vector<QMat>& basis, int m) {
  auto reducible_witness = [&](const QMat& e) {
    if (e.is_zero()) return false;
    QPoly mu = min_poly(e);
    if (mu.deg() < 1) return false;
    auto f = factor_q(mu);
    if (f.size() > 1 || f[0].second > 1) {
      // X alone means e itself is zero; that was excluded, so any proper
      // factorization yields a zero divisor f1(e) * f2(e) = 0.
      return true;
    }
    return false;
  };
  for (const auto& b : basis) {
    QMat t = b;
    // strip the scalar part so fields do not trip the X factor
    if (reducible_witness(t - QMat::identity(m) * (t.trace() / m)) &&
        !(t - QMat::identity(m) * (t.trace() / m)).is_zero())
      return true;
  }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      QMat pr = basis[i] * basis[j];
      if (pr.is_zero() && !basis[i].is_zero() && !basis[j].is_zero()) return true;
      QMat t = pr - QMat::identity(m) * (pr.trace() / m);
      if (!t.is_zero() && reducible_witness(t)) return true;
    }
  std::mt19937 rng(99991);
  for (int t = 0; t < 40; ++t) {
    QMat e = QMat::zero(m, m);
    for (const auto& b : basis) e = e + b * Rat((long)(rng() % 7) - 3);
    QMat u = e - QMat::identity(m) * (e.trace() / m);
    if (!u.is_zero() && reducible_witness(u)) return true;
  }
  return false;
}

EndAlgebra classify_algebra(const std::vector<QMat>& basis_in, int m) {
  EndAlgebra A;
  A.basis = echelon_span(basis_in, m);
  int dim = (int)A.basis.size();
  A.commutative = true;
  for (size_t i = 0; i < A.basis.size() && A.commutative; ++i)
    for (size_t j = i + 1; j < A.basis.size(); ++j)
      if (A.basis[i] * A.basis[j] != A.basis[j] * A.basis[i]) {
        A.commutative = false;
        break;
      }
  if (A.commutative) {
    if (auto pe = primitive_element(A.basis, m)) {
      A.primitive = pe->first;
      A.min_poly = pe->second;
      if (is_irreducible_q(pe->second)) {
        A.tag = AlgebraTag::Field;
        if (pe->second.deg() == 2) {
          // disc < 0 means totally complex quadratic
          Rat b = pe->second[1], c0 = pe->second[0];
          if (b * b - 4 * c0 < 0) A.tag = AlgebraTag::ImaginaryQuadratic;
        }
      } else {
        A.tag = AlgebraTag::Other;
      }
    } else {
      A.tag = AlgebraTag::Other;
    }
    return A;
  }
  // Noncommutative: decide division-ness by scan, then definiteness.
  bool zd = has_zero_divisor_scan(A.basis, m);
  std::vector<QMat> center = algebra_center(A.basis, m);
  if (zd) {
    A.tag = AlgebraTag::MatrixOverDivision;
    return A;
  }
  int zdim = (int)center.size();
  if (zdim >= 1 && dim == 4 * zdim) {
    // quaternion candidate; definite iff traceless squares are totally
    // negative (checked on a scan of elements when the center is Q)
    if (zdim == 1) {
      bool definite = true;
      std::mt19937 rng(5150);
      for (int t = 0; t < 24 && definite; ++t) {
        QMat e = QMat::zero(m, m);
        for (const auto& b : A.basis)
          e = e + b * Rat((long)(rng() % 9) - 4);
        QMat u = e - QMat::identity(m) * (e.trace() / m);
        if (u.is_zero()) continue;
        QMat sq = u * u;
        Rat c = sq.trace() / m;
        if (sq != QMat::identity(m) * c || c >= 0) definite = false;
      }
      if (definite) {
        A.tag = AlgebraTag::QuaternionDefinite;
        return A;
      }
    }
  }
  A.tag = AlgebraTag::Other;
  return A;
}

EndAlgebra end_algebra(const MatrixGroup& G) {
  return classify_algebra(commutant_basis(G.generators(), G.dim()), G.dim());
}

bool is_rationally_irreducible(const MatrixGroup& G) {
  EndAlgebra A = end_algebra(G);
  if (A.commutative)
    return A.tag == AlgebraTag::Field || A.tag == AlgebraTag::ImaginaryQuadratic;
  if (A.tag == AlgebraTag::QuaternionDefinite) return true;
  if (A.tag == AlgebraTag::MatrixOverDivision) return false;
  // No zero divisor surfaced; treat the commutant as a division algebra.
  return true;
}

}  // namespace simflat
