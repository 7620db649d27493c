#include "simflat/enumerate.hpp"

#include <map>

#include "simflat/algebra.hpp"
#include "simflat/canon.hpp"
#include "simflat/error.hpp"
#include "simflat/families.hpp"

namespace simflat {

FieldData field_data(FieldData::Label l) {
  // class number 1 and a unit of norm -1 (or Q itself): Pi(K) is empty
  return {l, {}, 1};
}

std::set<long> pi_tilde(const Int& l, const FieldData& K) {
  if (l < 1) fail(Err::BadParameter, "pi_tilde needs l >= 1");
  std::set<long> out;
  for (auto& p : prime_divisors(l)) out.insert((long)p.get_si());
  for (long p : K.pi) out.insert(p);
  // subfields of the shipped quadratic fields are Q with Pi empty
  return out;
}

namespace {

struct EndSplit {
  EndAlgebra alg;
  QMat conj_fixed_primitive;  // primitive element of the real subfield
  QPoly real_min_poly;
  std::vector<QMat> anti_basis;  // anti-selfadjoint part of End
  FieldData real_field;
};

EndSplit split_end(const MatrixGroup& U, const QMat& F0) {
  EndSplit s;
  s.alg = end_algebra(U);
  if (!s.alg.commutative ||
      (s.alg.tag != AlgebraTag::Field && s.alg.tag != AlgebraTag::ImaginaryQuadratic))
    fail(Err::UnsupportedField, "End(U) is not a field");
  auto f0inv = *F0.inverse();
  std::vector<QMat> sym, anti;
  for (const auto& e : s.alg.basis) {
    QMat ebar = F0 * e.transpose() * f0inv;
    sym.push_back(e + ebar);
    anti.push_back(e - ebar);
  }
  // echelonize the fixed part to find the real subfield
  int m = U.dim();
  QMat stack(0, m * m);
  for (auto& x : sym) stack = stack.vcat(x.vectorize());
  QMat h = hnf_rows(stack);
  std::vector<QMat> fixed;
  for (int i = 0; i < h.rows(); ++i) fixed.push_back(QMat::unvectorize(h.row(i), m, m));
  auto prim = primitive_element(fixed, m);
  if (!prim) fail(Err::UnsupportedField, "no primitive element in the real subfield");
  s.conj_fixed_primitive = prim->first;
  s.real_min_poly = prim->second;
  QMat astack(0, m * m);
  for (auto& x : anti) astack = astack.vcat(x.vectorize());
  QMat ah = hnf_rows(astack);
  for (int i = 0; i < ah.rows(); ++i)
    s.anti_basis.push_back(QMat::unvectorize(ah.row(i), m, m).primitive_scaled());

  int d = s.real_min_poly.deg();
  if (d == 1) {
    s.real_field = field_data(FieldData::Label::Q);
  } else if (d == 2) {
    Rat b = s.real_min_poly[1], c = s.real_min_poly[0];
    Rat disc = b * b - 4 * c;
    Rat scaled = disc * Rat(disc.get_den() * disc.get_den());
    Int dnum = scaled.get_num();
    auto [sq, rest] = squarefree_split(dnum);
    if (rest == 2)
      s.real_field = field_data(FieldData::Label::QSqrt2);
    else if (rest == 5)
      s.real_field = field_data(FieldData::Label::QSqrt5);
    else
      fail(Err::UnsupportedField, "real subfield outside the shipped tables");
  } else {
    fail(Err::UnsupportedField, "real subfield outside the shipped tables");
  }
  return s;
}

}  // namespace

std::vector<IntegralPair> candidate_pairs(const MatrixGroup& U, const Int& bound_order) {
  int m = U.dim();
  QMat F0 = average_form(U, QMat::identity(m));
  EndSplit es = split_end(U, F0);

  QMat stack(0, m);
  for (const auto& g : U.elements()) stack = stack.vcat(g);
  Lattice L0(stack);
  CenteringGraph graph = lattice_classes(U, L0, F0);

  std::set<long> support = pi_tilde(bound_order, es.real_field);
  std::vector<Int> scalings{1};
  for (long p : support) {
    size_t n = scalings.size();
    for (size_t i = 0; i < n; ++i) scalings.push_back(scalings[i] * p);
  }
  std::sort(scalings.begin(), scalings.end());

  std::map<std::string, IntegralPair> dedup;
  for (int rep : graph.class_reps) {
    const Lattice& L = graph.nodes[rep];
    QMat G = gram(L, F0);
    Int dl = G.denominator_lcm();
    Int ct = (G * Rat(dl)).content();
    QMat fhat = F0 * make_rat(dl, ct);
    for (const auto& c : scalings) {
      IntegralPair np = normalize_pair({L, fhat * Rat(c)});
      // geometric canonical representative
      Int d = np.lattice.basis().denominator_lcm();
      Int cc = (np.lattice.basis() * Rat(d)).content();
      Rat lambda = Rat(d) / Rat(cc);
      IntegralPair canon{np.lattice.scaled(lambda), np.form * (1 / (lambda * lambda))};
      dedup.emplace(canon.lattice.key() + "|" + canon.form.key(), canon);
    }
  }
  std::vector<IntegralPair> out;
  for (auto& [k, p] : dedup) out.push_back(p);
  return out;
}

namespace {

// minimal totally complex subfields via anti-selfadjoint elements; the
// subfield Q[e] is keyed by the echelonized span of the powers of e
std::vector<QMat> minimal_complex_elements(const std::vector<QMat>& anti, int m) {
  struct Found {
    QMat e;
    QPoly mu;
    std::string span_key;
  };
  auto span_key = [&](const QMat& e, int deg) {
    QMat stack(0, m * m);
    QMat p = QMat::identity(m);
    for (int j = 0; j < deg; ++j) {
      stack = stack.vcat(p.vectorize());
      p = p * e;
    }
    return hnf_rows(stack).key();
  };
  std::vector<Found> found;
  auto consider = [&](const QMat& e) {
    if (e.is_zero()) return;
    QPoly mu = min_poly(e);
    std::string key = span_key(e, mu.deg());
    for (auto& f : found)
      if (f.span_key == key) return;
    found.push_back({e, mu, key});
  };
  for (auto& a : anti) consider(a);
  if (anti.size() >= 2 && anti.size() <= 4) {
    std::vector<int> idx(anti.size(), -2);
    while (true) {
      QMat e = QMat::zero(m, m);
      for (size_t i = 0; i < anti.size(); ++i) e = e + anti[i] * Rat(idx[i]);
      consider(e);
      size_t i = 0;
      while (i < anti.size() && idx[i] == 2) idx[i++] = -2;
      if (i == anti.size()) break;
      ++idx[i];
    }
  }
  int best = -1;
  for (auto& f : found)
    if (best < 0 || f.mu.deg() < best) best = f.mu.deg();
  std::vector<QMat> out;
  for (auto& f : found)
    if (f.mu.deg() == best) out.push_back(f.e);
  return out;
}

struct ClassData {
  SimfClass cls;
  std::vector<MinimalPair> canon;
  std::vector<std::pair<QMat, std::vector<QMat>>> canon_forms;  // per pair: (F', skews)
};

ClassData make_class_data(SimfClass cls) {
  ClassData cd;
  cd.cls = std::move(cls);
  int m = cd.cls.pair.lattice.dim();
  MatrixGroup A = cd.cls.aut.group(m);
  QMat F0 = average_form(A, QMat::identity(m));
  cd.canon = minimal_normalized_pairs(A, F0);
  for (const auto& mp : cd.canon) {
    const QMat& B = mp.lattice.basis();
    auto binv = *B.inverse();
    std::vector<QMat> gens;
    for (const auto& g : A.generators()) gens.push_back(B * g * binv);
    MatrixGroup rebased = gens.empty() ? MatrixGroup::trivial(m) : MatrixGroup(m, gens);
    QMat fprime = B * mp.form * B.transpose();
    cd.canon_forms.emplace_back(fprime, qualifying_skews(rebased, fprime));
  }
  return cd;
}

bool same_class(const ClassData& a, const ClassData& b) {
  if (a.cls.aut.order != b.cls.aut.order) return false;
  int m = a.cls.pair.lattice.dim();
  Lattice std_lat = Lattice::standard(m);
  for (size_t i = 0; i < a.canon_forms.size(); ++i)
    for (size_t j = 0; j < b.canon_forms.size(); ++j) {
      const auto& [fa, sas] = a.canon_forms[i];
      const auto& [fb, sbs] = b.canon_forms[j];
      for (const auto& sa : sas)
        for (const auto& sb : sbs) {
          FormTuple ta{fa, {sa}};
          FormTuple tb{fb, {sb}};
          if (isometry(std_lat, ta, std_lat, tb)) return true;
        }
    }
  return false;
}

}  // namespace

std::vector<SimfClass> simf_supergroups(const MatrixGroup& U) {
  int m = U.dim();
  Int bound = minkowski_bound(m);
  auto pairs = candidate_pairs(U, bound);
  QMat F0 = average_form(U, QMat::identity(m));
  EndSplit es = split_end(U, F0);
  std::vector<QMat> kelts = minimal_complex_elements(es.anti_basis, m);
  if (kelts.empty()) fail(Err::UnsupportedField, "U admits no totally complex endomorphism");

  std::vector<SimfClass> raw;
  for (const auto& pr : pairs) {
    for (const auto& e : kelts) {
      QMat S = (e * pr.form).primitive_scaled();
      AutResult aut;
      try {
        aut = aut_group_K(pr.lattice, pr.form, S);
      } catch (const Error& err) {
        if (err.code() == Err::ReducibleEndomorphism) continue;
        throw;
      }
      raw.push_back({aut, pr, S});
    }
  }

  // maximality fixed point: every Aut_K over the result's own canonical
  // pairs must reproduce the result
  std::vector<ClassData> kept;
  for (auto& cls : raw) {
    SimfClass cur = cls;
    for (int round = 0; round < 8; ++round) {
      ClassData cd = make_class_data(cur);
      bool maximal = true;
      for (size_t i = 0; i < cd.canon.size() && maximal; ++i) {
        const auto& mp = cd.canon[i];
        const auto& [fprime, skews] = cd.canon_forms[i];
        (void)fprime;
        for (const auto& s : skews) {
          // skews live on the rebased lattice; pull back to ambient
          const QMat& B = mp.lattice.basis();
          auto binv = *B.inverse();
          QMat samb = (binv * s * binv.transpose()).primitive_scaled();
          AutResult bigger;
          try {
            bigger = aut_group_K(mp.lattice, mp.form, samb);
          } catch (const Error& err) {
            if (err.code() == Err::ReducibleEndomorphism) continue;
            throw;
          }
          if (bigger.order > cur.aut.order) {
            cur = {bigger, {mp.lattice, mp.form}, samb};
            maximal = false;
            break;
          }
        }
      }
      if (maximal) {
        bool dup = false;
        for (auto& have : kept)
          if (same_class(have, cd)) { dup = true; break; }
        if (!dup) kept.push_back(std::move(cd));
        break;
      }
    }
  }
  std::vector<SimfClass> out;
  for (auto& cd : kept) out.push_back(cd.cls);
  return out;
}

}  // namespace simflat
