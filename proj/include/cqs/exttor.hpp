#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cqs/quiver.hpp"
#include "cqs/region.hpp"

namespace cqs {

// A finite multiset of lattice degrees, each tagged with a label naming the
// resolution summand it came from.  Degreewise dimensions are multiplicities;
// there is no further module structure here.
struct GradedEntry {
  LatticeVector degree;
  std::string label;

  friend bool operator<(const GradedEntry& a, const GradedEntry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.label < b.label;
  }
  friend bool operator==(const GradedEntry& a, const GradedEntry& b) {
    return a.degree == b.degree && a.label == b.label;
  }
};

class GradedSupport {
 public:
  void add(LatticeVector degree, std::string label);
  void merge(const GradedSupport& other);

  std::size_t dim() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Canonically sorted by (degree, label).
  const std::vector<GradedEntry>& entries() const;
  std::map<LatticeVector, long> degree_counts() const;

  GradedSupport shifted(const LatticeVector& w) const;

 private:
  mutable std::vector<GradedEntry> entries_;
  mutable bool sorted_ = true;
};

// Equality of degreewise dimensions, labels ignored.
bool same_degree_counts(const GradedSupport& a, const GradedSupport& b);

// Matlis duality at the level of graded supports: degree negation.
GradedSupport matlis_dual(const GradedSupport& s);

/*
 * The regions.  With gens = mingens(D) = u^0 < ... < u^r (in <., rho0>):
 *
 *   below(D)  = interior P(D) minus the open cones at every u^j;
 *   abelow(D) = P(D) minus the closed cones at every u^j;
 *   closure(below(D)) adds the boundary: closed P(D) minus the open
 *     generator cones, clipped back to <.,rho0> <= <u^r,rho0> and
 *     <.,rho1> <= <u^0,rho1> by two half-open cuts at u^0 and u^r
 *     (empty when the vertex is integral, i.e. r = 0);
 *   link(D)   = below(D) intersected with closure(below(D)) + vertex(K);
 *   hom(D,D') = -vertex(D) + P(D'), the support of Hom(D, D');
 *   ext(D,D') = -(below(D) - vertex(D')), the support of Ext^1(D, D');
 *   tor(W,D') = abelow(W) + vertex(D'), one Tor summand per W.
 */
StaircaseRegion below_region(const Cqs& c, const WeilDivisor& d);
StaircaseRegion abelow_region(const Cqs& c, const WeilDivisor& d);
StaircaseRegion below_closure_region(const Cqs& c, const WeilDivisor& d);
StaircaseRegion link_region(const Cqs& c, const WeilDivisor& d);
StaircaseRegion hom_support(const Cqs& c, const WeilDivisor& d, const WeilDivisor& dp);
StaircaseRegion ext_region(const Cqs& c, const WeilDivisor& d, const WeilDivisor& dp);
StaircaseRegion tor_region(const Cqs& c, const WeilDivisor& w, const WeilDivisor& dp);

// Ext^1(D, D') as a graded support: the lattice points of ext(D, D').
GradedSupport ext1(const Cqs& c, const WeilDivisor& d, const WeilDivisor& dp);
// Tor_1(D, D'): one tor-region summand per second-level syzygy W^{a.b} of D,
// labels record the (a, b) pair.
GradedSupport tor1(const Cqs& c, const SyzygyQuiver& qv, const WeilDivisor& d,
                   const WeilDivisor& dp);

/*
 * Higher indices via the syzygy recursion
 *   Ext^{i+1}(D, -) = sum over G in incoming(D) of Ext^i(G, -),   i >= 1,
 * and the same shape for Tor.  The calculator memoizes two things per
 * (n, q): the multiset of depth-d recursion leaves per class (shifts are
 * equivariant, so one table per class suffices), and the base Ext^1/Tor
 * lattice points per ordered class pair, from which any request is a pure
 * shift.  Instances are cheap to create and not thread-safe; use one per
 * worker.
 */
class ExtTorCalculator {
 public:
  ExtTorCalculator(const Cqs& c, const SyzygyQuiver& qv);

  // i >= 1; throws InvalidIndex otherwise.
  GradedSupport ext(const WeilDivisor& d, const WeilDivisor& dp, std::int64_t i);
  GradedSupport tor(const WeilDivisor& d, const WeilDivisor& dp, std::int64_t i);

 private:
  using LeafMultiset = std::map<std::pair<std::int64_t, LatticeVector>, long>;

  const LeafMultiset& leaves(std::int64_t cls, std::int64_t depth);
  const std::vector<LatticeVector>& ext1_base(std::int64_t cls, std::int64_t dp_cls);
  const std::vector<LatticeVector>& tor_base(std::int64_t cls, std::int64_t dp_cls);

  const Cqs& cqs_;
  const SyzygyQuiver& quiver_;
  std::vector<RationalVector> class_vertex_;
  std::vector<std::vector<LeafMultiset>> leaves_;          // [class][depth]
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<LatticeVector>> ext1_base_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<LatticeVector>> tor_base_;
};

GradedSupport ext_i(const Cqs& c, const SyzygyQuiver& qv, const WeilDivisor& d,
                    const WeilDivisor& dp, std::int64_t i);
GradedSupport tor_i(const Cqs& c, const SyzygyQuiver& qv, const WeilDivisor& d,
                    const WeilDivisor& dp, std::int64_t i);

}  // namespace cqs
