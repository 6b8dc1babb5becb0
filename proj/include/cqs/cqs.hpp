#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cqs/lattice.hpp"

namespace cqs {

/*
 * The cyclic quotient singularity of type (n, q), 0 < q < n coprime, is the
 * toric surface of the cone spanned by rho0 = (1, 0) and rho1 = (-q, n).
 * Everything downstream is phrased in terms of the two facet pairings
 *   <u, rho0> = x   and   <u, rho1> = -q*x + n*y,
 * which identify M with the sublattice {(s, t) : t = -q*s mod n} of Z^2.
 */
struct Cqs {
  std::int64_t n{0};
  std::int64_t q{0};
  LatticeVector rho0;
  LatticeVector rho1;
  // Irreducible elements of the dual-cone monoid, sorted strictly
  // increasing in <., rho0> (equivalently strictly decreasing in <., rho1>).
  std::vector<LatticeVector> hilbert_basis;
};

// Validates 0 < q < n, gcd(n, q) = 1, and enumerates the Hilbert basis.
// Throws InvalidParameters otherwise.
Cqs compute_hilbert_basis(std::int64_t n, std::int64_t q);

inline Int pair0(const Cqs& c, const LatticeVector& u) { return pairing(u, c.rho0); }
inline Int pair1(const Cqs& c, const LatticeVector& u) { return pairing(u, c.rho1); }
inline Rat pair0(const Cqs& c, const RationalVector& u) { return pairing(u, c.rho0); }
inline Rat pair1(const Cqs& c, const RationalVector& u) { return pairing(u, c.rho1); }

bool dual_cone_contains(const Cqs& c, const LatticeVector& u, bool strict);
bool dual_cone_contains(const Cqs& c, const RationalVector& u, bool strict);

// The unique lattice point with pairings (s, t), if t = -q*s (mod n).
std::optional<LatticeVector> lattice_point_from_pairings(const Cqs& c, const Int& s,
                                                         const Int& t);
// The unique rational point with pairings (s, t); always exists.
RationalVector rational_point_from_pairings(const Cqs& c, const Rat& s, const Rat& t);

}  // namespace cqs
