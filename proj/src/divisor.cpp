#include "cqs/divisor.hpp"

namespace cqs {

WeilDivisor class_rep(std::int64_t i) { return {Int(-i), Int(0)}; }

WeilDivisor canonical_divisor() { return {Int(-1), Int(-1)}; }

RationalVector polyhedron_vertex(const Cqs& c, const WeilDivisor& d) {
  return rational_point_from_pairings(c, Rat(-d.a0), Rat(-d.a1));
}

SectionPolyhedron section_polyhedron(const Cqs& c, const WeilDivisor& d) {
  return {d, polyhedron_vertex(c, d)};
}

bool polyhedron_contains(const Cqs& c, const WeilDivisor& d, const LatticeVector& u) {
  return pair0(c, u) >= -d.a0 && pair1(c, u) >= -d.a1;
}

std::vector<LatticeVector> mingens(const Cqs& c, const WeilDivisor& d) {
  // Every generator has facet values in [-a0, -a0+n) x [-a1, -a1+n):
  // subtracting (0,1) or (n,q) stays in P(D) otherwise.  For each value of
  // <., rho0> exactly one lattice point hits that window, so there are at
  // most n candidates.
  std::vector<LatticeVector> gens;
  for (Int s = -d.a0; s < -d.a0 + c.n; ++s) {
    const Int t = -d.a1 + mod_floor(Int(-c.q) * s + d.a1, Int(c.n));
    const auto u = lattice_point_from_pairings(c, s, t);
    if (!u) continue;  // unreachable: t was chosen in u's residue class
    bool irreducible = true;
    for (const auto& h : c.hilbert_basis) {
      if (polyhedron_contains(c, d, *u - h)) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) gens.push_back(*u);
  }
  return gens;  // ascending in <., rho0> by construction
}

WeilDivisor principal_divisor(const Cqs& c, const LatticeVector& u) {
  return {pair0(c, u), pair1(c, u)};
}

ShiftedDivisorClass classify(const Cqs& c, const WeilDivisor& d) {
  const Int qinv = mod_inverse(Int(c.q), Int(c.n));
  const Int i = mod_floor(-(d.a0 + qinv * d.a1), Int(c.n));
  // u has pairings (-i - a0, -a1); integrality of y is guaranteed by the
  // choice of i.
  const auto u = lattice_point_from_pairings(c, -i - d.a0, -d.a1);
  if (!u) throw std::logic_error("classify: class index does not close the lattice condition");
  return {to_i64(i), *u};
}

WeilDivisor divisor_of(const Cqs& c, const ShiftedDivisorClass& s) {
  return class_rep(s.class_index) - principal_divisor(c, s.shift);
}

WeilDivisor twist(const Cqs& c, const WeilDivisor& d, const LatticeVector& w) {
  return d - principal_divisor(c, w);
}

}  // namespace cqs
