#pragma once

#include <vector>

#include "cqs/cqs.hpp"

namespace cqs {

/*
 * Staircase regions.
 *
 * Every set we need to manipulate (below/abelow regions of a divisor, their
 * closures, Hom supports, and the Ext/Tor supports derived from them) is of
 * the shape
 *
 *     (outer shifted cone)  minus  (finitely many cut cones),
 *
 * optionally viewed through the degree negation u -> -u, where a "cone" is a
 * translate of the dual cone with an independent open/closed flag per facet:
 *
 *     { u : <u,rho0> >= or > <apex,rho0>,  <u,rho1> >= or > <apex,rho1> }.
 *
 * The family is closed under translation and under intersection (apexes
 * combine by taking the facetwise maximum of pairing values, cuts by union),
 * which is what makes the link region representable without new machinery.
 *
 * Lattice enumeration works in pairing coordinates (s, t) = (<u,rho0>,
 * <u,rho1>): the outer cone bounds s and t from below, and the cut apexes
 * bound them from above whenever the first and last generator cones are
 * among the cuts (points beyond max cut values in one coordinate would have
 * to dip below the outer bound in the other).  Candidates are walked exactly
 * — ceilings/floors are taken on pairing values, never on coordinates — and
 * filtered through exact membership, so the result is never heuristic.
 */

struct HalfOpenCone {
  RationalVector apex;
  bool open0{false};
  bool open1{false};

  bool contains(const Cqs& c, const RationalVector& p) const;
  HalfOpenCone translated(const RationalVector& v) const { return {apex + v, open0, open1}; }
};

struct StaircaseRegion {
  HalfOpenCone outer;
  std::vector<HalfOpenCone> cuts;
  // When set, the region is { u : -u in outer minus cuts }.
  bool negated{false};

  bool contains(const Cqs& c, const RationalVector& p) const;
  bool contains(const Cqs& c, const LatticeVector& p) const;

  StaircaseRegion translated(const RationalVector& v) const;
  StaircaseRegion negated_view() const;
  // Both arguments must be positively oriented.
  static StaircaseRegion intersect(const Cqs& c, const StaircaseRegion& a,
                                   const StaircaseRegion& b);

  // All m in M with offset + m in the region, sorted lexicographically.
  // Throws std::logic_error if the region has no cuts (unbounded support).
  std::vector<LatticeVector> coset_points(const Cqs& c, const RationalVector& offset) const;
  std::vector<LatticeVector> lattice_points(const Cqs& c) const;
};

// Closed integer window in pairing coordinates; the degree sweeps of the
// rank-based cross-checks run over these.
struct PairingWindow {
  Int s_lo, s_hi, t_lo, t_hi;

  bool contains(const Cqs& c, const LatticeVector& u) const;
  PairingWindow expanded(const Int& margin) const;
  void absorb(const Cqs& c, const LatticeVector& u);
  std::vector<LatticeVector> degrees(const Cqs& c) const;
};

// The window every lattice point of the region lies in (negation-adjusted).
// Empty-ish windows (lo > hi) are possible and enumerate to nothing.
PairingWindow enumeration_window(const Cqs& c, const StaircaseRegion& r);

}  // namespace cqs
