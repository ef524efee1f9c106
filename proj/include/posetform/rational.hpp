#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace posetform {

// Exact rational scalar. mpq_class keeps gcd-reduced, positive denominator.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Serialized as "p/q", or "p" when q = 1. Never floating point.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

inline mpz_class floor_of(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Rat frac_of(const Rat& r) { return r - Rat(floor_of(r)); }

inline double approx(const Rat& r) { return r.get_d(); }

}  // namespace posetform
