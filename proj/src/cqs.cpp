#include "cqs/cqs.hpp"

#include <algorithm>
#include <numeric>

namespace cqs {

bool dual_cone_contains(const Cqs& c, const LatticeVector& u, bool strict) {
  const Int s = pair0(c, u), t = pair1(c, u);
  return strict ? (s > 0 && t > 0) : (s >= 0 && t >= 0);
}

bool dual_cone_contains(const Cqs& c, const RationalVector& u, bool strict) {
  const Rat s = pair0(c, u), t = pair1(c, u);
  return strict ? (s > 0 && t > 0) : (s >= 0 && t >= 0);
}

std::optional<LatticeVector> lattice_point_from_pairings(const Cqs& c, const Int& s,
                                                         const Int& t) {
  // x = s; y solves -q*x + n*y = t.
  const Int num = t + Int(c.q) * s;
  if (num % c.n != 0) return std::nullopt;
  return LatticeVector{s, num / c.n};
}

RationalVector rational_point_from_pairings(const Cqs& c, const Rat& s, const Rat& t) {
  return {s, (t + Rat(c.q) * s) / Rat(c.n)};
}

Cqs compute_hilbert_basis(std::int64_t n, std::int64_t q) {
  if (!(0 < q && q < n))
    throw InvalidParameters("cqs: need 0 < q < n, got n=" + std::to_string(n) +
                            " q=" + std::to_string(q));
  if (std::gcd(n, q) != 1)
    throw InvalidParameters("cqs: n and q must be coprime, got n=" + std::to_string(n) +
                            " q=" + std::to_string(q));

  Cqs c;
  c.n = n;
  c.q = q;
  c.rho0 = LatticeVector{1, 0};
  c.rho1 = LatticeVector{-q, n};

  // Candidates: nonzero lattice points with both pairings in [0, n].  Any
  // decomposition u = v + w inside the monoid keeps both summands in this
  // window, because (0,1) and (n,q) realize the pairing values (0,n) and
  // (n,0); so irreducibility can be decided within the window.
  std::vector<LatticeVector> cand;
  for (Int s = 0; s <= n; ++s) {
    for (Int t = mod_floor(Int(-q) * s, Int(n)); t <= n; t += n) {
      const auto u = lattice_point_from_pairings(c, s, t);
      if (u && !u->is_zero()) cand.push_back(*u);
    }
  }

  const auto reducible = [&](const LatticeVector& u) {
    for (const auto& v : cand) {
      if (v == u) continue;
      const LatticeVector w = u - v;
      if (!w.is_zero() && dual_cone_contains(c, w, false)) return true;
    }
    return false;
  };

  for (const auto& u : cand)
    if (!reducible(u)) c.hilbert_basis.push_back(u);

  std::sort(c.hilbert_basis.begin(), c.hilbert_basis.end(),
            [&](const LatticeVector& a, const LatticeVector& b) {
              return pair0(c, a) < pair0(c, b);
            });
  return c;
}

}  // namespace cqs
