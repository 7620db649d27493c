#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace simflat {

using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// n/d in canonical form (mpq_class two-argument construction does not
/// canonicalize on its own).
inline Rat make_rat(const Int& n, const Int& d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_int(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

/// Floor of a rational number as an integer.
inline Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

/// Trial division into (prime, exponent) pairs; inputs here are desk-scale.
std::vector<std::pair<Int, int>> factor_integer(Int n);

/// Distinct prime divisors of |n|, ascending.
std::vector<Int> prime_divisors(const Int& n);

/// n = a^2 * b with b squarefree; returns (a, b).  n must be positive.
std::pair<Int, Int> squarefree_split(const Int& n);

std::string to_string(const Rat& q);

}  // namespace simflat
