#include "simflat/autiso.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "simflat/error.hpp"
#include "simflat/poly.hpp"

namespace simflat {

namespace {

using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

std::string vec_key(const Vec& v) {
  std::ostringstream os;
  for (auto& x : v) os << x.get_str() << ',';
  return os.str();
}

// One side of the search: a vector set closed under negation with all
// pairings against the side's forms.
struct Side {
  int m = 0;
  std::vector<QMat> grams;                     // forms on basis coordinates
  std::vector<Vec> vecs;                       // signed coordinate vectors
  std::unordered_map<std::string, int> index;  // vec_key -> position
  // pairing tables, tab[f][a*N+b] = vecs[a] * grams[f] * vecs[b]^T
  std::vector<std::vector<Rat>> tab;
  std::vector<std::string> fingerprint;

  void build(const Lattice& L, const std::vector<QMat>& forms, const Rat& bound) {
    m = L.rank();
    for (const auto& f : forms) grams.push_back(L.basis() * f * L.basis().transpose());
    auto sv = short_vectors(L, forms[0], bound);
    for (auto& s : sv) {
      Vec v(m), w(m);
      for (int j = 0; j < m; ++j) {
        v[j] = s.coords.at(0, j);
        w[j] = -v[j];
      }
      vecs.push_back(v);
      vecs.push_back(w);
    }
    for (size_t a = 0; a < vecs.size(); ++a) index[vec_key(vecs[a])] = (int)a;
    size_t n = vecs.size();
    tab.assign(grams.size(), std::vector<Rat>(n * n));
    for (size_t f = 0; f < grams.size(); ++f) {
      // columns grams[f] * v^T
      std::vector<Vec> col(n, Vec(m));
      for (size_t b = 0; b < n; ++b)
        for (int i = 0; i < m; ++i) {
          Rat s = 0;
          for (int j = 0; j < m; ++j)
            if (grams[f].at(i, j) != 0 && vecs[b][j] != 0) s += grams[f].at(i, j) * vecs[b][j];
          col[b][i] = s;
        }
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) tab[f][a * n + b] = dot(vecs[a], col[b]);
    }
    // fingerprints: sorted multiset of pairing tuples against all vectors
    fingerprint.resize(n);
    for (size_t a = 0; a < n; ++a) {
      std::vector<std::string> rows(n);
      for (size_t b = 0; b < n; ++b) {
        std::ostringstream os;
        for (size_t f = 0; f < grams.size(); ++f) os << tab[f][a * n + b].get_str() << '|';
        rows[b] = os.str();
      }
      std::sort(rows.begin(), rows.end());
      std::ostringstream os;
      for (auto& r : rows) os << r << ';';
      fingerprint[a] = os.str();
    }
  }

  Rat pair(size_t f, int a, int b) const { return tab[f][a * vecs.size() + b]; }
};

// Fingerprint data for the source basis vectors (which the search maps).
struct SourceData {
  int m = 0;
  std::vector<QMat> grams;
  std::vector<std::string> basis_fp;  // fingerprint of e_i against source set
};

SourceData source_data(const Lattice& L, const std::vector<QMat>& forms, const Rat& bound) {
  Side s;
  s.build(L, forms, bound);
  SourceData out;
  out.m = s.m;
  out.grams = s.grams;
  out.basis_fp.resize(s.m);
  size_t n = s.vecs.size();
  for (int i = 0; i < s.m; ++i) {
    Vec e(s.m);
    e[i] = 1;
    std::vector<std::string> rows(n);
    for (size_t b = 0; b < n; ++b) {
      std::ostringstream os;
      for (size_t f = 0; f < s.grams.size(); ++f) {
        Vec col(s.m);
        for (int r = 0; r < s.m; ++r) {
          Rat acc = 0;
          for (int c = 0; c < s.m; ++c)
            if (s.grams[f].at(r, c) != 0 && s.vecs[b][c] != 0)
              acc += s.grams[f].at(r, c) * s.vecs[b][c];
          col[r] = acc;
        }
        os << col[i].get_str() << '|';
      }
      rows[b] = os.str();
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    for (auto& r : rows) os << r << ';';
    out.basis_fp[i] = os.str();
  }
  return out;
}

struct Engine {
  int m;
  size_t nf;
  const SourceData* src;
  const Side* tgt;
  std::vector<int> base;                 // processing order of basis indices
  std::vector<std::vector<int>> cand;    // candidates per basis index
  std::vector<int> img;                  // current assignment per level
  std::vector<int> self_index;           // for aut: index of e_i in target set

  bool compatible(int lvl, int v) const {
    int bi = base[lvl];
    for (size_t f = 0; f < nf; ++f) {
      for (int l = 0; l < lvl; ++l) {
        int bl = base[l];
        if (tgt->pair(f, v, img[l]) != src->grams[f].at(bi, bl)) return false;
        if (tgt->pair(f, img[l], v) != src->grams[f].at(bl, bi)) return false;
      }
    }
    return true;
  }

  // depth-first completion from `lvl`; returns true on full assignment
  bool dfs(int lvl) {
    if (lvl == m) return true;
    for (int v : cand[base[lvl]]) {
      if (!compatible(lvl, v)) continue;
      img[lvl] = v;
      if (dfs(lvl + 1)) return true;
    }
    img[lvl] = -1;
    return false;
  }

  QMat extract() const {
    QMat X(m, m);
    for (int lvl = 0; lvl < m; ++lvl)
      for (int j = 0; j < m; ++j) X.at(base[lvl], j) = tgt->vecs[img[lvl]][j];
    return X;
  }
};

Engine make_engine(const SourceData& src, const Side& tgt) {
  Engine e;
  e.m = src.m;
  e.nf = src.grams.size();
  e.src = &src;
  e.tgt = &tgt;
  e.cand.assign(e.m, {});
  for (int i = 0; i < e.m; ++i) {
    for (size_t a = 0; a < tgt.vecs.size(); ++a) {
      bool ok = true;
      for (size_t f = 0; f < e.nf && ok; ++f)
        ok = tgt.pair(f, (int)a, (int)a) == src.grams[f].at(i, i);
      if (ok && tgt.fingerprint[a] == src.basis_fp[i]) e.cand[i].push_back((int)a);
    }
  }
  e.base.resize(e.m);
  for (int i = 0; i < e.m; ++i) e.base[i] = i;
  std::sort(e.base.begin(), e.base.end(), [&](int a, int b) {
    if (e.cand[a].size() != e.cand[b].size()) return e.cand[a].size() < e.cand[b].size();
    return a < b;
  });
  e.img.assign(e.m, -1);
  return e;
}

}  // namespace

std::vector<QMat> reduce_generators(std::vector<QMat> gens, const Int& order) {
  // dedupe
  std::map<std::string, QMat> uniq;
  for (auto& g : gens)
    if (!g.is_identity()) uniq.emplace(g.key(), g);
  gens.clear();
  for (auto& [k, g] : uniq) gens.push_back(g);
  if (order > 200000 || gens.size() <= 1) return gens;
  std::mt19937 rng(1234577);
  bool dropped = true;
  while (dropped && gens.size() > 1) {
    dropped = false;
    std::vector<size_t> idx(gens.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (size_t i : idx) {
      std::vector<QMat> rest;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) rest.push_back(gens[j]);
      if (rest.empty()) break;
      try {
        if (Int((long)closure(rest, 400000).size()) == order) {
          gens = rest;
          dropped = true;
          break;
        }
      } catch (const Error&) {
      }
    }
  }
  return gens;
}

AutResult aut_group(const Lattice& L, const FormTuple& T) {
  if (!L.full_rank()) fail(Err::RankDeficient, "aut_group needs a full-rank lattice");
  QMat G0 = gram(L, T.posdef);
  if (!is_positive_definite(G0)) fail(Err::NotPositiveDefinite, "aut_group posdef form");
  std::vector<QMat> forms = T.all();

  Rat bound = G0.at(0, 0);
  for (int i = 1; i < G0.rows(); ++i) bound = std::max(bound, G0.at(i, i));

  Side side;
  side.build(L, forms, bound);
  SourceData src = source_data(L, forms, bound);
  Engine eng = make_engine(src, side);
  int m = eng.m;

  // indices of the standard basis vectors inside the signed set
  eng.self_index.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    Vec e(m);
    e[i] = 1;
    auto it = side.index.find(vec_key(e));
    if (it == side.index.end()) fail(Err::BadInput, "basis vector missing from candidate set");
    eng.self_index[i] = it->second;
  }

  Int total = 1;
  std::vector<Int> orbit_sizes;
  std::vector<std::vector<QMat>> gens_at(m);  // coordinate matrices per level

  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < k; ++j) eng.img[j] = eng.self_index[eng.base[j]];
    // orbit of base[k] under the stabilizer of base[0..k-1]
    std::unordered_map<int, bool> orbit;
    std::vector<int> frontier{eng.self_index[eng.base[k]]};
    orbit[frontier[0]] = true;
    auto close_orbit = [&]() {
      size_t q = 0;
      std::vector<int> work(frontier);
      while (q < work.size()) {
        int a = work[q++];
        for (int j = k; j < m; ++j)
          for (const auto& X : gens_at[j]) {
            Vec v = side.vecs[a];
            Vec w(m);
            for (int col = 0; col < m; ++col) {
              Rat s = 0;
              for (int row = 0; row < m; ++row)
                if (v[row] != 0 && X.at(row, col) != 0) s += v[row] * X.at(row, col);
              w[col] = s;
            }
            auto it = side.index.find(vec_key(w));
            if (it == side.index.end()) fail(Err::BadInput, "orbit left the vector set");
            if (!orbit.count(it->second)) {
              orbit[it->second] = true;
              work.push_back(it->second);
            }
          }
      }
    };
    close_orbit();
    for (int v : eng.cand[eng.base[k]]) {
      if (orbit.count(v)) continue;
      for (int j = 0; j < k; ++j) eng.img[j] = eng.self_index[eng.base[j]];
      if (!eng.compatible(k, v)) continue;
      eng.img[k] = v;
      if (eng.dfs(k + 1)) {
        QMat X = eng.extract();
        gens_at[k].push_back(X);
        frontier.clear();
        for (auto& [a, _] : orbit) frontier.push_back(a);
        close_orbit();
      }
    }
    total *= Int((long)orbit.size());
    orbit_sizes.push_back(Int((long)orbit.size()));
  }

  // convert coordinate matrices to ambient ones
  auto binv = *L.basis().inverse();
  std::vector<QMat> gens;
  for (auto& lv : gens_at)
    for (auto& X : lv) gens.push_back(binv * X * L.basis());
  gens = reduce_generators(std::move(gens), total);
  return {gens, total, orbit_sizes};
}

AutResult aut_group_K(const Lattice& L, const QMat& F, const QMat& S) {
  auto fi = F.inverse();
  if (!fi) fail(Err::SingularForm, "aut_group_K: F singular");
  QMat e = S * *fi;
  QPoly mu = min_poly(e);
  if (mu.deg() < 2 || !is_irreducible_q(mu))
    fail(Err::ReducibleEndomorphism, "S F^-1 does not generate a field extension");
  FormTuple T;
  T.posdef = F;
  QMat p = e;
  for (int j = 1; j < mu.deg(); ++j) {
    T.extras.push_back(p * F);
    p = p * e;
  }
  return aut_group(L, T);
}

std::optional<QMat> isometry(const Lattice& L1, const FormTuple& T1, const Lattice& L2,
                             const FormTuple& T2) {
  if (L1.dim() != L2.dim() || T1.extras.size() != T2.extras.size())
    fail(Err::DimMismatch, "isometry shapes differ");
  if (!L1.full_rank() || !L2.full_rank()) fail(Err::RankDeficient, "isometry needs full rank");
  std::vector<QMat> f1 = T1.all(), f2 = T2.all();
  QMat G1 = gram(L1, f1[0]);
  QMat G2 = gram(L2, f2[0]);
  if (!is_positive_definite(G1) || !is_positive_definite(G2))
    fail(Err::NotPositiveDefinite, "isometry posdef forms");

  // cheap obstructions
  for (size_t f = 0; f < f1.size(); ++f) {
    QMat a = gram(L1, f1[f]), b = gram(L2, f2[f]);
    if (a.det() != b.det()) return std::nullopt;
  }

  Rat bound = G1.at(0, 0);
  for (int i = 1; i < G1.rows(); ++i) bound = std::max(bound, G1.at(i, i));

  Side side;
  side.build(L2, f2, bound);
  SourceData src = source_data(L1, f1, bound);
  {
    // norm histograms must agree
    auto sv1 = short_vectors(L1, f1[0], bound);
    auto sv2 = short_vectors(L2, f2[0], bound);
    if (sv1.size() != sv2.size()) return std::nullopt;
    for (size_t i = 0; i < sv1.size(); ++i)
      if (sv1[i].norm != sv2[i].norm) return std::nullopt;
  }
  Engine eng = make_engine(src, side);
  for (int i = 0; i < eng.m; ++i)
    if (eng.cand[i].empty()) return std::nullopt;
  if (!eng.dfs(0)) return std::nullopt;
  QMat X = eng.extract();
  QMat T = *L1.basis().inverse() * X * L2.basis();
  return T;
}

AutResult stabilize_lattices(const AutResult& G, const std::vector<Lattice>& Ls) {
  if (Ls.empty() || G.generators.empty()) return G;

  auto point_key = [&](const std::vector<Lattice>& ls) {
    std::string k;
    for (const auto& l : ls) k += l.key() + "#";
    return k;
  };

  struct Node {
    std::vector<Lattice> pt;
    QMat witness;
  };
  std::unordered_map<std::string, int> seen;
  std::vector<Node> orbit;
  int dim = Ls[0].dim();
  orbit.push_back({Ls, QMat::identity(dim)});
  seen[point_key(Ls)] = 0;
  std::vector<QMat> schreier;
  size_t q = 0;
  while (q < orbit.size()) {
    Node cur = orbit[q++];
    for (const auto& g : G.generators) {
      std::vector<Lattice> nxt;
      nxt.reserve(cur.pt.size());
      for (const auto& l : cur.pt) nxt.push_back(l.image(g));
      std::string k = point_key(nxt);
      auto it = seen.find(k);
      if (it == seen.end()) {
        seen[k] = (int)orbit.size();
        orbit.push_back({nxt, cur.witness * g});
        if (orbit.size() > 5'000'000) fail(Err::OrderCapExceeded, "orbit too large");
      } else {
        QMat s = cur.witness * g * *orbit[it->second].witness.inverse();
        if (!s.is_identity()) schreier.push_back(s);
      }
    }
  }
  Int ord = G.order / Int((long)orbit.size());
  return {reduce_generators(std::move(schreier), ord), ord, {}};
}

}  // namespace simflat
