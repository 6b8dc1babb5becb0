#include "cqs/quiver.hpp"

namespace cqs {

std::vector<ShiftedDivisorClass> syzygy_summands(const Cqs& c, const WeilDivisor& d) {
  const auto gens = mingens(c, d);
  std::vector<ShiftedDivisorClass> out;
  out.reserve(gens.empty() ? 0 : gens.size() - 1);
  for (std::size_t j = 1; j < gens.size(); ++j) {
    // Facet values of the intersection cone: the larger <., rho0> comes from
    // gens[j], the larger <., rho1> from gens[j-1] (generators are sorted
    // ascending in rho0, descending in rho1).
    const WeilDivisor w{-pair0(c, gens[j]), -pair1(c, gens[j - 1])};
    out.push_back(classify(c, w));
  }
  return out;
}

SyzygyQuiver build_quiver(const Cqs& c) {
  SyzygyQuiver qv;
  qv.n = c.n;
  qv.q = c.q;
  qv.arrows_into.resize(static_cast<std::size_t>(c.n));
  for (std::int64_t i = 0; i < c.n; ++i) {
    for (const auto& s : syzygy_summands(c, class_rep(i))) {
      qv.arrows_into[static_cast<std::size_t>(i)].push_back(qv.arrows.size());
      qv.arrows.push_back({s.class_index, i, s.shift});
    }
  }
  return qv;
}

std::vector<ShiftedDivisorClass> incoming(const SyzygyQuiver& qv, const ShiftedDivisorClass& s) {
  std::vector<ShiftedDivisorClass> out;
  for (const auto idx : qv.arrows_into[static_cast<std::size_t>(s.class_index)]) {
    const auto& a = qv.arrows[idx];
    out.push_back({a.source, a.label + s.shift});
  }
  return out;
}

std::vector<ShiftedDivisorClass> incoming(const Cqs& c, const SyzygyQuiver& qv,
                                          const WeilDivisor& d) {
  return incoming(qv, classify(c, d));
}

}  // namespace cqs
