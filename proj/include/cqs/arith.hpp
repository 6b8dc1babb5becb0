#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cqs {

// All core arithmetic is exact: arbitrary-precision integers for lattice
// data, canonical rationals for polyhedron apexes.  No floating point and no
// tolerances anywhere below the rendering layer.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when user-supplied parameters violate a precondition, e.g. a
// non-coprime (n, q) pair or a malformed divisor string.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown for homological indices outside the supported range (i >= 1).
class InvalidIndex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rat make_rat(Int num, Int den) {
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline bool rat_is_integral(const Rat& x) { return x.get_den() == 1; }

// Smallest integer s with s > bound (strict) resp. s >= bound.
inline Int least_int_above(const Rat& bound, bool strict) {
  return strict ? rat_floor(bound) + 1 : rat_ceil(bound);
}

// Largest integer s with s < bound (strict) resp. s <= bound.
inline Int greatest_int_below(const Rat& bound, bool strict) {
  return strict ? rat_ceil(bound) - 1 : rat_floor(bound);
}

// Nonnegative remainder of a mod m, m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InvalidParameters("mod_inverse: arguments are not coprime");
  return r;
}

inline std::int64_t to_i64(const Int& x) {
  if (!x.fits_slong_p())
    throw std::overflow_error("value does not fit in 64 bits: " + x.get_str());
  return static_cast<std::int64_t>(x.get_si());
}

inline std::string rat_str(const Rat& x) {
  if (rat_is_integral(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace cqs
