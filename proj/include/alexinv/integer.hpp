#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace alexinv {

/// Arbitrary-precision integer used for every coefficient and matrix entry.
using Integer = mpz_class;

inline Integer abs_value(const Integer& x) { return abs(x); }

inline Integer integer_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Least nonnegative residue of `a` modulo `m` (m > 0).
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

bool is_prime(unsigned p);

}  // namespace alexinv
