#pragma once

#include <optional>
#include <string>

#include "simflat/autiso.hpp"
#include "simflat/matgrp.hpp"

namespace simflat {

/// One s.i.m.f. conjugacy class: dimension, the invariant pair of integer
/// forms on Z^(1 x 2n), the group order, and an opaque class name.
struct DbEntry {
  int dim = 0;
  Int order = 0;
  std::string name;
  QMat F, S;
};

/// Text format: per record a line "dim order name", then dim rows of F,
/// then dim rows of S, integers only, records separated by blank lines.
std::vector<DbEntry> db_load(const std::string& path);
std::vector<DbEntry> db_parse(std::istream& in);
void db_write(std::ostream& out, const std::vector<DbEntry>& entries);

struct VerifyReport {
  bool forms_ok = false;      // F integral symmetric positive definite, S integral skew
  bool order_ok = false;      // |Aut(Z^2n, {F, S})| equals the stored order
  bool invariant_ok = false;  // recomputed generators fix F and S exactly
  bool minpoly_ok = false;    // S F^-1 primitive with an allowed minimal polynomial
  bool normalized_ok = false; // (Z^2n, F) is a normalized pair
  bool minimal_ok = false;    // det F minimal among normalized invariant pairs
  Int aut_order = 0;
  std::string detail;

  bool pass() const {
    return forms_ok && order_ok && invariant_ok && minpoly_ok && normalized_ok && minimal_ok;
  }
};

VerifyReport db_verify(const DbEntry& e);

struct Recognition {
  std::string name;
  QMat conjugator;  // T with G^T = Aut(Z^2n, {F, S}) of the matched entry
};

/// Recognition pipeline of the database remark: canonical minimal pairs,
/// qualifying skew forms, simultaneous isometry against each entry.
/// BadInput for non-symplectic or reducible groups; nullopt when no entry
/// matches.
std::optional<Recognition> recognize(const MatrixGroup& G, const std::vector<DbEntry>& db);

}  // namespace simflat
