#pragma once

#include <set>

#include "simflat/autiso.hpp"
#include "simflat/invlat.hpp"

namespace simflat {

/// Shipped totally real fields for the m-parameter machinery.  All have
/// class number 1 and units of every sign pattern, so Pi(K) is empty.
struct FieldData {
  enum class Label { Q, QSqrt2, QSqrt5 };
  Label label = Label::Q;
  std::set<long> pi;  // Pi(K)
  int class_number = 1;
};

FieldData field_data(FieldData::Label l);

/// Primes dividing l, together with Pi(k) over the shipped subfields of K.
std::set<long> pi_tilde(const Int& l, const FieldData& K);

/// Candidate normalized pairs (one per geometric equivalence class) for the
/// supergroup search over U; UnsupportedField unless End(U) is a field whose
/// real subfield is among the shipped ones.
std::vector<IntegralPair> candidate_pairs(const MatrixGroup& U, const Int& bound_order);

struct SimfClass {
  AutResult aut;
  IntegralPair pair;
  QMat skew;
};

/// All s.i.m.f. supergroup classes of U: Aut_K over every candidate pair and
/// minimal totally complex K, deduplicated by simultaneous isometry of
/// canonical pairs and filtered by the maximality fixed-point criterion.
std::vector<SimfClass> simf_supergroups(const MatrixGroup& U);

}  // namespace simflat
