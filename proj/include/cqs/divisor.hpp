#pragma once

#include <vector>

#include "cqs/cqs.hpp"

namespace cqs {

// A torus-invariant Weil divisor a0*[rho0] + a1*[rho1].
struct WeilDivisor {
  Int a0{0};
  Int a1{0};

  friend WeilDivisor operator+(const WeilDivisor& a, const WeilDivisor& b) {
    return {a.a0 + b.a0, a.a1 + b.a1};
  }
  friend WeilDivisor operator-(const WeilDivisor& a, const WeilDivisor& b) {
    return {a.a0 - b.a0, a.a1 - b.a1};
  }
  friend bool operator==(const WeilDivisor& a, const WeilDivisor& b) {
    return a.a0 == b.a0 && a.a1 == b.a1;
  }
  friend bool operator!=(const WeilDivisor& a, const WeilDivisor& b) { return !(a == b); }
};

// Class representatives: E^i = -i*[rho0] for 0 <= i < n; E^0 is trivial.
WeilDivisor class_rep(std::int64_t i);
// The canonical divisor K = -[rho0] - [rho1].
WeilDivisor canonical_divisor();

// P(D) = {u : <u, rho_i> >= -a_i} = vertex + dual cone; the vertex is the
// unique point with pairings (-a0, -a1) and is rational in general.
struct SectionPolyhedron {
  WeilDivisor divisor;
  RationalVector vertex;
};

SectionPolyhedron section_polyhedron(const Cqs& c, const WeilDivisor& d);
RationalVector polyhedron_vertex(const Cqs& c, const WeilDivisor& d);
bool polyhedron_contains(const Cqs& c, const WeilDivisor& d, const LatticeVector& u);

// Minimal monoid generators of the module of sections: lattice points u of
// P(D) with u - h outside P(D) for every nonzero Hilbert basis member h.
// Returned sorted strictly increasing in <., rho0>; the first generator
// attains <., rho0> = -a0 and the last attains <., rho1> = -a1.
std::vector<LatticeVector> mingens(const Cqs& c, const WeilDivisor& d);

// div(x^u) = <u,rho0>[rho0] + <u,rho1>[rho1].
WeilDivisor principal_divisor(const Cqs& c, const LatticeVector& u);

// D written as E^i twisted by -u: the divisor E^i[-u] has sections supported
// on u + P(E^i), i.e. D = E^i - principal_divisor(u).
struct ShiftedDivisorClass {
  std::int64_t class_index{0};
  LatticeVector shift;

  friend bool operator==(const ShiftedDivisorClass& a, const ShiftedDivisorClass& b) {
    return a.class_index == b.class_index && a.shift == b.shift;
  }
};

// The unique (i, u) with D = E^i[-u]; i = -(a0 + q^{-1} a1) mod n.
ShiftedDivisorClass classify(const Cqs& c, const WeilDivisor& d);
WeilDivisor divisor_of(const Cqs& c, const ShiftedDivisorClass& s);
// D[-w] = D - principal_divisor(w); sections shift by +w.
WeilDivisor twist(const Cqs& c, const WeilDivisor& d, const LatticeVector& w);

}  // namespace cqs
