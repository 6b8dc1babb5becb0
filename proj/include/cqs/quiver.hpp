#pragma once

#include <cstddef>
#include <vector>

#include "cqs/divisor.hpp"

namespace cqs {

// One arrow of the syzygy quiver: the j-th syzygy summand of E^target is
// E^source twisted by -label.
struct LabelledArrow {
  std::int64_t source{0};
  std::int64_t target{0};
  LatticeVector label;
};

// Vertices are the divisor classes E^0 .. E^{n-1}; E^0 never receives
// arrows (it is free).  Arrows into a fixed target are kept in generator
// pair order, which the resolution machinery relies on.
struct SyzygyQuiver {
  std::int64_t n{0};
  std::int64_t q{0};
  std::vector<LabelledArrow> arrows;
  std::vector<std::vector<std::size_t>> arrows_into;  // per target class
};

// Summands of the first syzygy of the section module of D: one per pair of
// consecutive generators (u^{j-1}, u^j), namely the divisor with facet
// values (<u^j, rho0>, <u^{j-1}, rho1>) of the intersection
// (u^{j-1} + dual cone) meet (u^j + dual cone), in class/shift form.
std::vector<ShiftedDivisorClass> syzygy_summands(const Cqs& c, const WeilDivisor& d);

SyzygyQuiver build_quiver(const Cqs& c);

// Syzygy summands of D read off the quiver: classify D = E^i[-u], then each
// arrow a into i contributes E^{source(a)}[-(label(a) + u)].  Multiset
// semantics: parallel arrows yield repeated entries.
std::vector<ShiftedDivisorClass> incoming(const Cqs& c, const SyzygyQuiver& qv,
                                          const WeilDivisor& d);
std::vector<ShiftedDivisorClass> incoming(const SyzygyQuiver& qv, const ShiftedDivisorClass& s);

}  // namespace cqs
