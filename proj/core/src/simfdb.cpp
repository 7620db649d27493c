#include "simflat/simfdb.hpp"

#include <fstream>
#include <sstream>

#include "simflat/algebra.hpp"
#include "simflat/canon.hpp"
#include "simflat/error.hpp"
#include "simflat/invlat.hpp"

namespace simflat {

std::vector<DbEntry> db_parse(std::istream& in) {
  std::vector<DbEntry> out;
  std::string line;
  long lineno = 0;
  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    toks.clear();
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  };
  std::vector<std::string> toks;
  while (next_tokens(toks)) {
    if (toks.size() != 3)
      fail(Err::MalformedEntry, "line " + std::to_string(lineno) + ": expected 'dim order name'");
    DbEntry e;
    try {
      e.dim = std::stoi(toks[0]);
      e.order = Int(toks[1]);
    } catch (const std::exception&) {
      fail(Err::MalformedEntry, "line " + std::to_string(lineno) + ": bad header numbers");
    }
    e.name = toks[2];
    if (e.dim <= 0) fail(Err::MalformedEntry, "line " + std::to_string(lineno) + ": bad dimension");
    auto read_form = [&](QMat& f) {
      f = QMat(e.dim, e.dim);
      for (int i = 0; i < e.dim; ++i) {
        if (!next_tokens(toks) || (int)toks.size() != e.dim)
          fail(Err::MalformedEntry,
               "line " + std::to_string(lineno) + ": expected " + std::to_string(e.dim) +
                   " integer entries");
        for (int j = 0; j < e.dim; ++j) {
          try {
            f.at(i, j) = Rat(Int(toks[j]));
          } catch (const std::exception&) {
            fail(Err::MalformedEntry, "line " + std::to_string(lineno) + ": bad integer");
          }
        }
      }
    };
    read_form(e.F);
    read_form(e.S);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<DbEntry> db_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::MalformedEntry, "cannot open " + path);
  return db_parse(in);
}

void db_write(std::ostream& out, const std::vector<DbEntry>& entries) {
  for (const auto& e : entries) {
    out << e.dim << ' ' << e.order.get_str() << ' ' << e.name << '\n';
    auto emit = [&](const QMat& f) {
      for (int i = 0; i < e.dim; ++i) {
        for (int j = 0; j < e.dim; ++j) {
          if (j) out << ' ';
          out << f.at(i, j).get_str();
        }
        out << '\n';
      }
    };
    emit(e.F);
    emit(e.S);
    out << '\n';
  }
}

VerifyReport db_verify(const DbEntry& e) {
  VerifyReport r;
  std::ostringstream detail;
  r.forms_ok = e.F.is_integral() && e.F.is_symmetric() && is_positive_definite(e.F) &&
               e.S.is_integral() && e.S.is_skew_symmetric();
  if (!r.forms_ok) {
    r.detail = "form shape checks failed";
    return r;
  }
  Lattice std_lat = Lattice::standard(e.dim);
  AutResult aut = aut_group(std_lat, {e.F, {e.S}});
  r.aut_order = aut.order;
  r.order_ok = aut.order == e.order;
  r.invariant_ok = true;
  for (const auto& g : aut.generators) {
    if (!g.is_integral() || g * e.F * g.transpose() != e.F || g * e.S * g.transpose() != e.S)
      r.invariant_ok = false;
  }
  // minimal polynomial condition
  MatrixGroup A = aut.group(e.dim);
  EndAlgebra E = end_algebra(A);
  QMat sf = e.S * *e.F.inverse();
  QPoly mu = min_poly(sf);
  r.minpoly_ok = (mu.deg() == (int)E.basis.size()) && minpoly_allowed(mu);
  if (!r.minpoly_ok) detail << "minpoly " << mu.str() << " not allowed or not primitive; ";
  // normalized pair
  IntegralPair p{std_lat, e.F};
  if (pair_is_integral(p)) {
    IntegralPair np = normalize_pair(p);
    r.normalized_ok = np.lattice == p.lattice && np.form == p.form;
  }
  // minimal determinant among normalized invariant pairs
  QMat f0 = average_form(A, QMat::identity(e.dim));
  auto mins = minimal_normalized_pairs(A, f0);
  if (!mins.empty()) {
    Int mindet = mins[0].det;
    r.minimal_ok = pair_det(p) == mindet;
    if (!r.minimal_ok)
      detail << "det " << pair_det(p).get_str() << " > minimal " << mindet.get_str() << "; ";
  }
  r.detail = detail.str();
  return r;
}

std::optional<Recognition> recognize(const MatrixGroup& G, const std::vector<DbEntry>& db) {
  if (!is_symplectic(G) || !is_rationally_irreducible(G))
    fail(Err::BadInput, "recognize needs a symplectic rationally irreducible group");
  int m = G.dim();
  QMat F0 = average_form(G, QMat::identity(m));
  auto pairs = minimal_normalized_pairs(G, F0);
  Lattice std_lat = Lattice::standard(m);
  for (const auto& mp : pairs) {
    const QMat& B = mp.lattice.basis();
    auto binv = *B.inverse();
    std::vector<QMat> gens;
    for (const auto& g : G.generators()) gens.push_back(B * g * binv);
    MatrixGroup rebased = gens.empty() ? MatrixGroup::trivial(m) : MatrixGroup(m, gens);
    QMat fprime = B * mp.form * B.transpose();
    auto skews = qualifying_skews(rebased, fprime);
    for (const auto& s : skews) {
      for (const auto& e : db) {
        if (e.dim != m) continue;
        auto t = isometry(std_lat, {fprime, {s}}, std_lat, {e.F, {e.S}});
        if (t) {
          // G^(B^-1 T) = Aut(Z^2n, {F, S}) of the entry
          return Recognition{e.name, binv * *t};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace simflat
