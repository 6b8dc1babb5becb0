#include "cqs/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace cqs {

bool HalfOpenCone::contains(const Cqs& c, const RationalVector& p) const {
  const Rat s = pair0(c, p), s0 = pair0(c, apex);
  if (open0 ? !(s > s0) : !(s >= s0)) return false;
  const Rat t = pair1(c, p), t0 = pair1(c, apex);
  return open1 ? (t > t0) : (t >= t0);
}

bool StaircaseRegion::contains(const Cqs& c, const RationalVector& p) const {
  const RationalVector q = negated ? -p : p;
  if (!outer.contains(c, q)) return false;
  for (const auto& cut : cuts)
    if (cut.contains(c, q)) return false;
  return true;
}

bool StaircaseRegion::contains(const Cqs& c, const LatticeVector& p) const {
  return contains(c, RationalVector(p));
}

StaircaseRegion StaircaseRegion::translated(const RationalVector& v) const {
  // Translating the negated view by v translates the underlying set by -v.
  const RationalVector w = negated ? -v : v;
  StaircaseRegion r;
  r.outer = outer.translated(w);
  r.cuts.reserve(cuts.size());
  for (const auto& cut : cuts) r.cuts.push_back(cut.translated(w));
  r.negated = negated;
  return r;
}

StaircaseRegion StaircaseRegion::negated_view() const {
  StaircaseRegion r = *this;
  r.negated = !r.negated;
  return r;
}

StaircaseRegion StaircaseRegion::intersect(const Cqs& c, const StaircaseRegion& a,
                                           const StaircaseRegion& b) {
  if (a.negated || b.negated)
    throw std::logic_error("StaircaseRegion::intersect: operands must be positively oriented");
  // Facetwise maximum of the outer apex pairings; on a tie either strict
  // flag forces strictness.
  const Rat sa = pair0(c, a.outer.apex), sb = pair0(c, b.outer.apex);
  const Rat ta = pair1(c, a.outer.apex), tb = pair1(c, b.outer.apex);
  const Rat s = std::max(sa, sb), t = std::max(ta, tb);
  bool open0 = false, open1 = false;
  if (sa == sb)
    open0 = a.outer.open0 || b.outer.open0;
  else
    open0 = (sa > sb) ? a.outer.open0 : b.outer.open0;
  if (ta == tb)
    open1 = a.outer.open1 || b.outer.open1;
  else
    open1 = (ta > tb) ? a.outer.open1 : b.outer.open1;

  StaircaseRegion r;
  r.outer = {rational_point_from_pairings(c, s, t), open0, open1};
  r.cuts = a.cuts;
  r.cuts.insert(r.cuts.end(), b.cuts.begin(), b.cuts.end());
  return r;
}

std::vector<LatticeVector> StaircaseRegion::coset_points(const Cqs& c,
                                                         const RationalVector& offset) const {
  if (negated) {
    // offset + m in -(core)  <=>  -offset + (-m) in core.
    StaircaseRegion core = *this;
    core.negated = false;
    auto pts = core.coset_points(c, -offset);
    for (auto& p : pts) p = -p;
    std::sort(pts.begin(), pts.end());
    return pts;
  }
  if (cuts.empty())
    throw std::logic_error("StaircaseRegion: refusing to enumerate an uncut (unbounded) region");

  const Rat s_off = pair0(c, offset), t_off = pair1(c, offset);
  // Lower bounds from the outer cone, upper bounds from the cut apexes.
  const Int s_lo = least_int_above(pair0(c, outer.apex) - s_off, outer.open0);
  const Int t_lo = least_int_above(pair1(c, outer.apex) - t_off, outer.open1);
  Rat s_max = pair0(c, cuts.front().apex), t_max = pair1(c, cuts.front().apex);
  for (const auto& cut : cuts) {
    s_max = std::max(s_max, pair0(c, cut.apex));
    t_max = std::max(t_max, pair1(c, cut.apex));
  }
  const Int s_hi = greatest_int_below(s_max - s_off, false);
  const Int t_hi = greatest_int_below(t_max - t_off, false);

  std::vector<LatticeVector> pts;
  for (Int s = s_lo; s <= s_hi; ++s) {
    // t runs over one residue class mod n within [t_lo, t_hi].
    const Int t0 = t_lo + mod_floor(Int(-c.q) * s - t_lo, Int(c.n));
    for (Int t = t0; t <= t_hi; t += c.n) {
      const auto m = lattice_point_from_pairings(c, s, t);
      if (m && contains(c, offset + *m)) pts.push_back(*m);
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<LatticeVector> StaircaseRegion::lattice_points(const Cqs& c) const {
  return coset_points(c, RationalVector{});
}

bool PairingWindow::contains(const Cqs& c, const LatticeVector& u) const {
  const Int s = pair0(c, u), t = pair1(c, u);
  return s_lo <= s && s <= s_hi && t_lo <= t && t <= t_hi;
}

PairingWindow PairingWindow::expanded(const Int& margin) const {
  return {s_lo - margin, s_hi + margin, t_lo - margin, t_hi + margin};
}

void PairingWindow::absorb(const Cqs& c, const LatticeVector& u) {
  const Int s = pair0(c, u), t = pair1(c, u);
  s_lo = std::min(s_lo, s);
  s_hi = std::max(s_hi, s);
  t_lo = std::min(t_lo, t);
  t_hi = std::max(t_hi, t);
}

std::vector<LatticeVector> PairingWindow::degrees(const Cqs& c) const {
  std::vector<LatticeVector> out;
  for (Int s = s_lo; s <= s_hi; ++s) {
    const Int t0 = t_lo + mod_floor(Int(-c.q) * s - t_lo, Int(c.n));
    for (Int t = t0; t <= t_hi; t += c.n) {
      const auto u = lattice_point_from_pairings(c, s, t);
      if (u) out.push_back(*u);
    }
  }
  return out;
}

PairingWindow enumeration_window(const Cqs& c, const StaircaseRegion& r) {
  if (r.cuts.empty())
    throw std::logic_error("enumeration_window: uncut region has unbounded support");
  const Int s_lo = least_int_above(pair0(c, r.outer.apex), r.outer.open0);
  const Int t_lo = least_int_above(pair1(c, r.outer.apex), r.outer.open1);
  Rat s_max = pair0(c, r.cuts.front().apex), t_max = pair1(c, r.cuts.front().apex);
  for (const auto& cut : r.cuts) {
    s_max = std::max(s_max, pair0(c, cut.apex));
    t_max = std::max(t_max, pair1(c, cut.apex));
  }
  PairingWindow w{s_lo, rat_floor(s_max), t_lo, rat_floor(t_max)};
  if (r.negated) w = PairingWindow{-w.s_hi, -w.s_lo, -w.t_hi, -w.t_lo};
  return w;
}

}  // namespace cqs
