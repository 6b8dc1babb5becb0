#include "cqs/exttor.hpp"

#include <algorithm>
#include <sstream>

namespace cqs {

void GradedSupport::add(LatticeVector degree, std::string label) {
  entries_.push_back({std::move(degree), std::move(label)});
  sorted_ = false;
}

void GradedSupport::merge(const GradedSupport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  sorted_ = false;
}

const std::vector<GradedEntry>& GradedSupport::entries() const {
  if (!sorted_) {
    std::sort(entries_.begin(), entries_.end());
    sorted_ = true;
  }
  return entries_;
}

std::map<LatticeVector, long> GradedSupport::degree_counts() const {
  std::map<LatticeVector, long> counts;
  for (const auto& e : entries_) ++counts[e.degree];
  return counts;
}

GradedSupport GradedSupport::shifted(const LatticeVector& w) const {
  GradedSupport s;
  for (const auto& e : entries_) s.add(e.degree + w, e.label);
  return s;
}

bool same_degree_counts(const GradedSupport& a, const GradedSupport& b) {
  return a.degree_counts() == b.degree_counts();
}

GradedSupport matlis_dual(const GradedSupport& s) {
  GradedSupport d;
  for (const auto& e : s.entries()) d.add(-e.degree, e.label);
  return d;
}

StaircaseRegion below_region(const Cqs& c, const WeilDivisor& d) {
  StaircaseRegion r;
  r.outer = {polyhedron_vertex(c, d), true, true};
  for (const auto& g : mingens(c, d)) r.cuts.push_back({RationalVector(g), true, true});
  return r;
}

StaircaseRegion abelow_region(const Cqs& c, const WeilDivisor& d) {
  StaircaseRegion r;
  r.outer = {polyhedron_vertex(c, d), false, false};
  for (const auto& g : mingens(c, d)) r.cuts.push_back({RationalVector(g), false, false});
  return r;
}

StaircaseRegion below_closure_region(const Cqs& c, const WeilDivisor& d) {
  const auto gens = mingens(c, d);
  StaircaseRegion r;
  r.outer = {polyhedron_vertex(c, d), false, false};
  if (gens.size() <= 1) {
    // Integral vertex: below(D) is empty and so is its closure.
    r.cuts.push_back({r.outer.apex, false, false});
    return r;
  }
  for (const auto& g : gens) r.cuts.push_back({RationalVector(g), true, true});
  // Clip the boundary rays that survive the open cuts: nothing beyond the
  // last generator in <., rho0>, nothing beyond the first in <., rho1>.
  r.cuts.push_back({RationalVector(gens.front()), false, true});
  r.cuts.push_back({RationalVector(gens.back()), true, false});
  return r;
}

StaircaseRegion link_region(const Cqs& c, const WeilDivisor& d) {
  const RationalVector vk = polyhedron_vertex(c, canonical_divisor());
  return StaircaseRegion::intersect(c, below_region(c, d),
                                    below_closure_region(c, d).translated(vk));
}

StaircaseRegion hom_support(const Cqs& c, const WeilDivisor& d, const WeilDivisor& dp) {
  StaircaseRegion r;
  r.outer = {polyhedron_vertex(c, dp) - polyhedron_vertex(c, d), false, false};
  return r;
}

StaircaseRegion ext_region(const Cqs& c, const WeilDivisor& d, const WeilDivisor& dp) {
  return below_region(c, d).translated(-polyhedron_vertex(c, dp)).negated_view();
}

StaircaseRegion tor_region(const Cqs& c, const WeilDivisor& w, const WeilDivisor& dp) {
  return abelow_region(c, w).translated(polyhedron_vertex(c, dp));
}

GradedSupport ext1(const Cqs& c, const WeilDivisor& d, const WeilDivisor& dp) {
  GradedSupport s;
  for (const auto& u : ext_region(c, d, dp).lattice_points(c)) s.add(u, "ext1");
  return s;
}

namespace {

std::string class_shift_label(std::int64_t cls, const LatticeVector& shift) {
  std::ostringstream os;
  os << "E" << cls << "[-" << shift << "]";
  return os.str();
}

}  // namespace

GradedSupport tor1(const Cqs& c, const SyzygyQuiver& qv, const WeilDivisor& d,
                   const WeilDivisor& dp) {
  GradedSupport s;
  const auto first = incoming(c, qv, d);
  for (std::size_t a = 0; a < first.size(); ++a) {
    const auto second = incoming(qv, first[a]);
    for (std::size_t b = 0; b < second.size(); ++b) {
      std::ostringstream label;
      label << "W" << (a + 1) << "." << (b + 1);
      const WeilDivisor w = divisor_of(c, second[b]);
      for (const auto& u : tor_region(c, w, dp).lattice_points(c)) s.add(u, label.str());
    }
  }
  return s;
}

ExtTorCalculator::ExtTorCalculator(const Cqs& c, const SyzygyQuiver& qv)
    : cqs_(c), quiver_(qv) {
  class_vertex_.reserve(static_cast<std::size_t>(c.n));
  for (std::int64_t i = 0; i < c.n; ++i)
    class_vertex_.push_back(polyhedron_vertex(c, class_rep(i)));
  leaves_.resize(static_cast<std::size_t>(c.n));
}

const ExtTorCalculator::LeafMultiset& ExtTorCalculator::leaves(std::int64_t cls,
                                                               std::int64_t depth) {
  auto& per_class = leaves_[static_cast<std::size_t>(cls)];
  while (static_cast<std::int64_t>(per_class.size()) <= depth) {
    const std::int64_t d = static_cast<std::int64_t>(per_class.size());
    LeafMultiset m;
    if (d == 0) {
      m[{cls, LatticeVector{}}] = 1;
    } else {
      for (const auto idx : quiver_.arrows_into[static_cast<std::size_t>(cls)]) {
        const auto& a = quiver_.arrows[idx];
        for (const auto& [leaf, count] : leaves(a.source, d - 1)) {
          m[{leaf.first, leaf.second + a.label}] += count;
        }
      }
    }
    // leaves() recursion above may have appended to per_class already for
    // other classes only, never this one; d stays the next slot.
    per_class.push_back(std::move(m));
  }
  return per_class[static_cast<std::size_t>(depth)];
}

const std::vector<LatticeVector>& ExtTorCalculator::ext1_base(std::int64_t cls,
                                                              std::int64_t dp_cls) {
  auto it = ext1_base_.find({cls, dp_cls});
  if (it != ext1_base_.end()) return it->second;
  // Degrees of Ext^1(E^cls, E^dp_cls): u with vertex(E^dp_cls) - u in
  // below(E^cls), i.e. u = -m over the coset points m of the vertex.
  auto pts = below_region(cqs_, class_rep(cls))
                 .coset_points(cqs_, class_vertex_[static_cast<std::size_t>(dp_cls)]);
  for (auto& p : pts) p = -p;
  std::sort(pts.begin(), pts.end());
  return ext1_base_.emplace(std::make_pair(cls, dp_cls), std::move(pts)).first->second;
}

const std::vector<LatticeVector>& ExtTorCalculator::tor_base(std::int64_t cls,
                                                             std::int64_t dp_cls) {
  auto it = tor_base_.find({cls, dp_cls});
  if (it != tor_base_.end()) return it->second;
  // Degrees m with m - vertex(E^dp_cls) in abelow(E^cls): the lattice points
  // of one unshifted tor summand region.
  auto pts = abelow_region(cqs_, class_rep(cls))
                 .coset_points(cqs_, -class_vertex_[static_cast<std::size_t>(dp_cls)]);
  std::sort(pts.begin(), pts.end());
  return tor_base_.emplace(std::make_pair(cls, dp_cls), std::move(pts)).first->second;
}

GradedSupport ExtTorCalculator::ext(const WeilDivisor& d, const WeilDivisor& dp,
                                    std::int64_t i) {
  if (i < 1) throw InvalidIndex("ext: homological index must be >= 1");
  const auto dc = classify(cqs_, d);
  const auto dpc = classify(cqs_, dp);
  GradedSupport s;
  for (const auto& [leaf, count] : leaves(dc.class_index, i - 1)) {
    const LatticeVector total_shift = leaf.second + dc.shift;
    // ext1(E^c[-W], E^j[-u']) = ext1(E^c, E^j) shifted by u' - W.
    const LatticeVector delta = dpc.shift - total_shift;
    const std::string label =
        (i == 1) ? "ext1" : class_shift_label(leaf.first, total_shift);
    for (const auto& base : ext1_base(leaf.first, dpc.class_index)) {
      for (long k = 0; k < count; ++k) s.add(base + delta, label);
    }
  }
  return s;
}

GradedSupport ExtTorCalculator::tor(const WeilDivisor& d, const WeilDivisor& dp,
                                    std::int64_t i) {
  if (i < 1) throw InvalidIndex("tor: homological index must be >= 1");
  if (i == 1) return tor1(cqs_, quiver_, d, dp);
  const auto dc = classify(cqs_, d);
  const auto dpc = classify(cqs_, dp);
  // Tor_i(D) decomposes over the depth-(i+1) recursion leaves: i-1 syzygy
  // steps down to Tor_1, whose own summands sit two further levels deep.
  GradedSupport s;
  for (const auto& [leaf, count] : leaves(dc.class_index, i + 1)) {
    const LatticeVector total_shift = leaf.second + dc.shift;
    const LatticeVector delta = total_shift + dpc.shift;
    const std::string label = class_shift_label(leaf.first, total_shift);
    for (const auto& base : tor_base(leaf.first, dpc.class_index)) {
      for (long k = 0; k < count; ++k) s.add(base + delta, label);
    }
  }
  return s;
}

GradedSupport ext_i(const Cqs& c, const SyzygyQuiver& qv, const WeilDivisor& d,
                    const WeilDivisor& dp, std::int64_t i) {
  return ExtTorCalculator(c, qv).ext(d, dp, i);
}

GradedSupport tor_i(const Cqs& c, const SyzygyQuiver& qv, const WeilDivisor& d,
                    const WeilDivisor& dp, std::int64_t i) {
  return ExtTorCalculator(c, qv).tor(d, dp, i);
}

}  // namespace cqs
