#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "jacring/fp.hpp"

namespace jacring {

// Exact scalars over Q are GMP rationals (always canonicalized); big integers
// are GMP integers.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int_like(const Rat&, long long x) { return Rat(static_cast<long>(x)); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

// Canonical "num/den" (or plain integer) parser; rejects zero denominators.
inline Rat parse_rational(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

struct RatContext {
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(long long x) const { return Rat(static_cast<long>(x)); }
};

// Image of a rational in F_p; the denominator must be a unit mod p.
inline Fp reduce_mod(const Rat& a, std::uint64_t p) {
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class pz(std::to_string(p));
  mpz_class nm = num % pz; if (nm < 0) nm += pz;
  mpz_class dm = den % pz; if (dm < 0) dm += pz;
  Fp d{dm.get_ui(), p};
  if (d.is_zero()) throw std::domain_error("denominator vanishes modulo p");
  return Fp{nm.get_ui(), p} * inverse(d);
}

}  // namespace jacring
