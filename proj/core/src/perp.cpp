#include <algorithm>
#include <numeric>

#include "simflat/error.hpp"
#include "simflat/lattice.hpp"

namespace simflat {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int a) { return up[a] == a ? a : up[a] = find(up[a]); }
  void join(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

std::vector<Lattice> perp_decompose(const Lattice& L, const std::vector<QMat>& forms) {
  if (forms.empty()) fail(Err::BadParameter, "perp_decompose needs a positive definite form");
  const QMat& F = forms[0];
  QMat G = gram(L, F);
  if (!is_positive_definite(G)) fail(Err::NotPositiveDefinite, "first form must be positive definite on L");

  Rat bound = G.at(0, 0);
  for (int i = 1; i < G.rows(); ++i) bound = std::max(bound, G.at(i, i));
  auto sv = short_vectors(L, F, bound);

  // Kneser: v splits orthogonally iff some shorter x has |x F v^T| = norm(x);
  // the indecomposable vectors generate L and define the finest splitting.
  std::vector<int> indec;
  for (size_t i = 0; i < sv.size(); ++i) {
    bool splits = false;
    for (size_t j = 0; j < sv.size() && !splits; ++j) {
      if (sv[j].norm >= sv[i].norm) break;  // sorted by norm
      Rat ip = (sv[j].v * F * sv[i].v.transpose()).at(0, 0);
      if (ip == sv[j].norm || -ip == sv[j].norm) splits = true;
    }
    if (!splits) indec.push_back((int)i);
  }

  UnionFind uf((int)indec.size());
  for (size_t a = 0; a < indec.size(); ++a)
    for (size_t b = a + 1; b < indec.size(); ++b) {
      Rat ip = (sv[indec[a]].v * F * sv[indec[b]].v.transpose()).at(0, 0);
      if (ip != 0) uf.join((int)a, (int)b);
    }

  // gather components of the positive definite form
  std::vector<std::vector<int>> groups;
  {
    std::vector<int> root_of(indec.size());
    std::vector<int> roots;
    for (size_t a = 0; a < indec.size(); ++a) {
      int r = uf.find((int)a);
      auto it = std::find(roots.begin(), roots.end(), r);
      if (it == roots.end()) { roots.push_back(r); groups.push_back({}); it = roots.end() - 1; }
      groups[it - roots.begin()].push_back(indec[a]);
    }
  }
  auto build = [&](const std::vector<int>& g) {
    QMat rows(0, L.dim());
    for (int idx : g) rows = rows.vcat(sv[idx].v);
    return Lattice(rows);
  };
  std::vector<Lattice> comps;
  for (auto& g : groups) comps.push_back(build(g));

  // merge components linked by any auxiliary form
  bool merged = true;
  while (merged && comps.size() > 1) {
    merged = false;
    for (size_t a = 0; a < comps.size() && !merged; ++a)
      for (size_t b = a + 1; b < comps.size() && !merged; ++b) {
        bool linked = false;
        for (size_t f = 1; f < forms.size() && !linked; ++f) {
          QMat ab = comps[a].basis() * forms[f] * comps[b].basis().transpose();
          QMat ba = comps[b].basis() * forms[f] * comps[a].basis().transpose();
          linked = !ab.is_zero() || !ba.is_zero();
        }
        if (linked) {
          comps[a] = lattice_sum(comps[a], comps[b]);
          comps.erase(comps.begin() + b);
          merged = true;
        }
      }
  }

  std::sort(comps.begin(), comps.end(),
            [](const Lattice& x, const Lattice& y) { return x.key() < y.key(); });
  return comps;
}

}  // namespace simflat
