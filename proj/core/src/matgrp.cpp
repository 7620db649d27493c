#include "simflat/matgrp.hpp"

#include <random>
#include <unordered_set>

#include "simflat/error.hpp"

namespace simflat {

MatrixGroup::MatrixGroup(int dim, std::vector<QMat> gens) : dim_(dim), gens_(std::move(gens)) {
  for (auto& g : gens_) {
    if (g.rows() != dim || g.cols() != dim) fail(Err::DimMismatch, "generator size mismatch");
    if (!g.inverse()) fail(Err::BadParameter, "generator not invertible");
  }
}

const std::vector<QMat>& MatrixGroup::elements(long cap) const {
  if (!elements_.empty()) return elements_;
  std::vector<QMat> elems;
  std::unordered_set<std::string> seen;
  QMat id = QMat::identity(dim_);
  elems.push_back(id);
  seen.insert(id.key());
  size_t frontier = 0;
  while (frontier < elems.size()) {
    QMat cur = elems[frontier++];
    for (const auto& g : gens_) {
      QMat nxt = cur * g;
      if (seen.insert(nxt.key()).second) {
        if ((long)elems.size() + 1 > cap)
          fail(Err::OrderCapExceeded, "group enumeration exceeded cap");
        elems.push_back(nxt);
      }
    }
  }
  elements_ = std::move(elems);
  return elements_;
}

Int MatrixGroup::order(long cap) const { return Int((long)elements(cap).size()); }

Int enumerate_group(const MatrixGroup& G, long cap) { return G.order(cap); }

namespace {

// Split a fixed-space kernel basis into independent symmetric and skew parts,
// echelonized over the vectorized entries and scaled integral-primitive.
std::vector<QMat> echelon_forms(std::vector<QMat> forms, int m) {
  QMat stack(0, m * m);
  for (auto& f : forms) stack = stack.vcat(f.vectorize());
  QMat r = hnf_rows(stack);
  std::vector<QMat> out;
  for (int i = 0; i < r.rows(); ++i)
    out.push_back(QMat::unvectorize(r.row(i), m, m).primitive_scaled());
  return out;
}

}  // namespace

FormSpace fixed_forms(const MatrixGroup& G) {
  int m = G.dim();
  // Solve g F g^T = F over all generators: rows index (generator, i, j),
  // columns index entries F_kl.
  QMat sys(0, m * m);
  for (const auto& g : G.generators()) {
    QMat block(m * m, m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) {
            Rat c = g.at(i, k) * g.at(j, l);
            if (i == k && j == l) c -= 1;
            block.at(i * m + j, k * m + l) = c;
          }
    sys = sys.vcat(block);
  }
  QMat ker = sys.transpose().left_kernel();  // solutions of sys * vec(F) = 0
  std::vector<QMat> sym, skew;
  for (int i = 0; i < ker.rows(); ++i) {
    QMat f = QMat::unvectorize(ker.row(i), m, m);
    QMat s = (f + f.transpose()) * Rat(1, 2);
    QMat a = (f - f.transpose()) * Rat(1, 2);
    if (!s.is_zero()) sym.push_back(s);
    if (!a.is_zero()) skew.push_back(a);
  }
  return {echelon_forms(std::move(sym), m), echelon_forms(std::move(skew), m)};
}

QMat average_form(const MatrixGroup& G, const QMat& F0, long cap) {
  if (!is_positive_definite(F0)) fail(Err::NotPositiveDefinite, "average_form seed");
  try {
    const auto& elems = G.elements(cap);
    QMat sum = QMat::zero(G.dim(), G.dim());
    for (const auto& g : elems) sum = sum + g * F0 * g.transpose();
    return sum * Rat(1, (long)elems.size());
  } catch (const Error& e) {
    if (e.code() != Err::OrderCapExceeded) throw;
  }
  // Fallback: a positive definite point in the symmetric fixed space, found
  // by perturbing around the projection of F0.
  FormSpace fs = fixed_forms(G);
  if (fs.basis_sym.empty()) throw Error(Err::OrderCapExceeded, "no symmetric invariant form found");
  QMat cand = QMat::zero(G.dim(), G.dim());
  for (const auto& b : fs.basis_sym) {
    Rat w = (b * F0).trace();
    cand = cand + b * w;
  }
  if (is_positive_definite(cand)) return cand;
  std::mt19937 rng(20240901);
  for (int tries = 0; tries < 2000; ++tries) {
    QMat c = QMat::zero(G.dim(), G.dim());
    for (const auto& b : fs.basis_sym)
      c = c + b * Rat((long)(rng() % 19) - 9);
    if (is_positive_definite(c)) return c;
  }
  fail(Err::OrderCapExceeded, "no positive definite invariant form located");
}

bool is_symplectic(const MatrixGroup& G) {
  if (G.dim() % 2 != 0) return false;  // odd skew forms are singular
  FormSpace fs = fixed_forms(G);
  if (fs.basis_skew.empty()) return false;
  for (const auto& b : fs.basis_skew)
    if (b.det() != 0) return true;
  size_t k = fs.basis_skew.size();
  std::mt19937 rng(777);
  for (int t = 0; t < 64; ++t) {
    QMat c = QMat::zero(G.dim(), G.dim());
    for (auto& b : fs.basis_skew) c = c + b * Rat((long)(rng() % 2001) - 1000);
    if (c.det() != 0) return true;
  }
  // Deterministic grid fallback; the determinant is a polynomial of degree
  // <= m in each coefficient, so a full grid of size m+1 decides it.
  if (k <= 6) {
    std::vector<int> idx(k, 0);
    int range = G.dim() + 1;
    while (true) {
      QMat c = QMat::zero(G.dim(), G.dim());
      for (size_t i = 0; i < k; ++i) c = c + fs.basis_skew[i] * Rat(idx[i]);
      if (c.det() != 0) return true;
      size_t i = 0;
      while (i < k && idx[i] == range - 1) idx[i++] = 0;
      if (i == k) break;
      ++idx[i];
    }
    return false;
  }
  return false;
}

MatrixGroup wreath(const MatrixGroup& H, int k) {
  if (k < 2) fail(Err::BadParameter, "wreath needs k >= 2");
  int d = H.dim();
  std::vector<QMat> gens;
  for (const auto& g : H.generators()) {
    QMat big = QMat::identity(d * k);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) big.at(i, j) = g.at(i, j);
    gens.push_back(big);
  }
  // block transposition (0 1)
  {
    QMat t = QMat::zero(d * k, d * k);
    for (int i = 0; i < d; ++i) {
      t.at(i, d + i) = 1;
      t.at(d + i, i) = 1;
    }
    for (int b = 2; b < k; ++b)
      for (int i = 0; i < d; ++i) t.at(b * d + i, b * d + i) = 1;
    gens.push_back(t);
  }
  if (k > 2) {
    QMat c = QMat::zero(d * k, d * k);
    for (int b = 0; b < k; ++b) {
      int tb = (b + 1) % k;
      for (int i = 0; i < d; ++i) c.at(b * d + i, tb * d + i) = 1;
    }
    gens.push_back(c);
  }
  return MatrixGroup(d * k, gens);
}

MatrixGroup tensor(const MatrixGroup& G, const MatrixGroup& H) {
  std::vector<QMat> gens;
  QMat ig = QMat::identity(G.dim());
  QMat ih = QMat::identity(H.dim());
  for (const auto& g : G.generators()) gens.push_back(g.kron(ih));
  for (const auto& h : H.generators()) gens.push_back(ig.kron(h));
  return MatrixGroup(G.dim() * H.dim(), gens);
}

Int element_order(const QMat& g, long cap) {
  QMat p = g;
  Int n = 1;
  while (!p.is_identity()) {
    p = p * g;
    ++n;
    if (n > cap) fail(Err::OrderCapExceeded, "element order exceeded cap");
  }
  return n;
}

std::vector<QMat> closure(const std::vector<QMat>& gens, long cap) {
  if (gens.empty()) return {};
  int d = gens[0].rows();
  std::vector<QMat> elems{QMat::identity(d)};
  std::unordered_set<std::string> seen{elems[0].key()};
  size_t q = 0;
  while (q < elems.size()) {
    QMat cur = elems[q++];
    for (const auto& g : gens) {
      QMat nxt = cur * g;
      if (seen.insert(nxt.key()).second) {
        if ((long)elems.size() + 1 > cap) fail(Err::OrderCapExceeded, "closure exceeded cap");
        elems.push_back(nxt);
      }
    }
  }
  return elems;
}

std::vector<QMat> center_of(const std::vector<QMat>& elements, const std::vector<QMat>& gens) {
  std::vector<QMat> z;
  for (const auto& x : elements) {
    bool central = true;
    for (const auto& g : gens)
      if (x * g != g * x) { central = false; break; }
    if (central) z.push_back(x);
  }
  return z;
}

std::optional<std::vector<QMat>> normal_closure(const std::vector<QMat>& seed,
                                                const std::vector<QMat>& group_gens, long cap) {
  std::vector<QMat> work = seed;
  while (true) {
    std::vector<QMat> sub;
    try {
      sub = closure(work, cap);
    } catch (const Error&) {
      return std::nullopt;
    }
    bool stable = true;
    std::unordered_set<std::string> have;
    for (auto& x : sub) have.insert(x.key());
    for (const auto& g : group_gens) {
      auto gi = *g.inverse();
      for (const auto& x : sub) {
        QMat c = gi * x * g;
        if (!have.count(c.key())) {
          work.push_back(c);
          stable = false;
        }
      }
      if (!stable) break;
    }
    if (stable) return sub;
  }
}

std::vector<QMat> p_core(const MatrixGroup& G, long p) {
  const auto& elems = G.elements();
  Int go = Int((long)elems.size());
  long pcap = 1;
  while (go % p == 0) { go /= p; pcap *= p; }
  std::vector<QMat> core_gens;
  for (const auto& x : elems) {
    Int o = element_order(x);
    bool ppower = o == 1;
    if (!ppower) {
      Int t = o;
      while (t % p == 0) t /= p;
      ppower = (t == 1);
    }
    if (!ppower || x.is_identity()) continue;
    auto nc = normal_closure({x}, G.generators(), pcap);
    if (!nc) continue;
    bool all_p = true;
    for (const auto& y : *nc) {
      Int o2 = element_order(y);
      while (o2 % p == 0) o2 /= p;
      if (o2 != 1) { all_p = false; break; }
    }
    if (all_p) core_gens.push_back(x);
  }
  if (core_gens.empty()) return {QMat::identity(G.dim())};
  return closure(core_gens);
}

std::vector<QMat> derived_subgroup(const MatrixGroup& G) {
  std::vector<QMat> comms;
  const auto& gens = G.generators();
  for (const auto& a : gens)
    for (const auto& b : gens) {
      QMat c = *(a * b).inverse() * (b * a);
      if (!c.is_identity()) comms.push_back(c);
    }
  if (comms.empty()) return {QMat::identity(G.dim())};
  auto nc = normal_closure(comms, gens, kDefaultOrderCap);
  return *nc;
}

}  // namespace simflat
