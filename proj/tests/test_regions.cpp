#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "cqs/exttor.hpp"
#include "cqs/region.hpp"

using namespace cqs;

namespace {

LatticeVector lv(long x, long y) { return LatticeVector{Int(x), Int(y)}; }
WeilDivisor wd(long a0, long a1) { return WeilDivisor{Int(a0), Int(a1)}; }

// Raw-inequality membership oracles, written directly against the defining
// inequalities so they share no code with StaircaseRegion.
bool below_oracle(const Cqs& c, const WeilDivisor& d, const RationalVector& p) {
  if (!(pair0(c, p) > -Rat(d.a0) && pair1(c, p) > -Rat(d.a1))) return false;
  for (const auto& g : mingens(c, d))
    if (pair0(c, p) > pair0(c, g) && pair1(c, p) > pair1(c, g)) return false;
  return true;
}

bool abelow_oracle(const Cqs& c, const WeilDivisor& d, const RationalVector& p) {
  if (!(pair0(c, p) >= -Rat(d.a0) && pair1(c, p) >= -Rat(d.a1))) return false;
  for (const auto& g : mingens(c, d))
    if (pair0(c, p) >= pair0(c, g) && pair1(c, p) >= pair1(c, g)) return false;
  return true;
}

// Closure of the below region by perturbation: a point is in the closure
// exactly when one of the nine eps-perturbations lies in the region itself.
// All facet values involved are integers while the sampled points have small
// denominators, so a small enough eps crosses no unrelated facet.
bool closure_oracle(const Cqs& c, const WeilDivisor& d, const RationalVector& p) {
  const Rat eps = make_rat(1, 8 * c.n * c.n);
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy)
      if (below_oracle(c, d, RationalVector{p.x + dx * eps, p.y + dy * eps})) return true;
  return false;
}

std::vector<RationalVector> rational_grid(long x_lo, long x_hi, long y_lo, long y_hi) {
  const std::vector<Rat> fracs = {Rat(0), make_rat(1, 3), make_rat(1, 2), make_rat(2, 3)};
  std::vector<RationalVector> grid;
  for (long x = x_lo; x <= x_hi; ++x)
    for (const auto& fx : fracs)
      for (long y = y_lo; y <= y_hi; ++y)
        for (const auto& fy : fracs) grid.push_back(RationalVector{Rat(x) + fx, Rat(y) + fy});
  return grid;
}

}  // namespace

TEST_CASE("below and abelow regions match their defining inequalities") {
  const std::vector<std::pair<long, long>> samples = {{7, 3}, {8, 5}};
  for (const auto& [n, q] : samples) {
    const Cqs c = compute_hilbert_basis(n, q);
    std::mt19937_64 rng(17 * n + q);
    std::uniform_int_distribution<long> coef(-n, n);
    std::vector<WeilDivisor> divisors = {class_rep(0), class_rep(2), canonical_divisor()};
    for (int k = 0; k < 3; ++k) divisors.push_back(wd(coef(rng), coef(rng)));
    for (const auto& d : divisors) {
      const auto below = below_region(c, d);
      const auto abelow = abelow_region(c, d);
      const auto grid = rational_grid(-n - 2, n + 2, -n - 2, n + 2);
      for (const auto& p : grid) {
        CAPTURE(n);
        CAPTURE(q);
        REQUIRE(below.contains(c, p) == below_oracle(c, d, p));
        REQUIRE(abelow.contains(c, p) == abelow_oracle(c, d, p));
      }
    }
  }
}

TEST_CASE("closure of the below region matches the perturbation closure") {
  const Cqs c = compute_hilbert_basis(7, 3);
  for (const auto& d : {class_rep(0), class_rep(2), class_rep(3), wd(-4, -5), wd(3, -2)}) {
    const auto cl = below_closure_region(c, d);
    for (const auto& p : rational_grid(-9, 9, -9, 9)) {
      REQUIRE(cl.contains(c, p) == closure_oracle(c, d, p));
    }
  }
}

TEST_CASE("lattice points of the small (7,3) regions") {
  const Cqs c = compute_hilbert_basis(7, 3);
  CHECK(below_region(c, class_rep(3)).lattice_points(c) == std::vector<LatticeVector>{lv(4, 2)});
  CHECK(below_region(c, class_rep(2)).lattice_points(c).empty());
  CHECK(below_region(c, class_rep(0)).lattice_points(c).empty());
  CHECK(below_closure_region(c, class_rep(0)).lattice_points(c).empty());
  CHECK(link_region(c, class_rep(3)).lattice_points(c) == std::vector<LatticeVector>{lv(4, 2)});
  CHECK(link_region(c, class_rep(0)).lattice_points(c).empty());
}

TEST_CASE("abelow regions are lattice free") {
  const std::vector<std::pair<long, long>> samples = {{2, 1}, {5, 2}, {7, 3}, {11, 7}, {12, 5}};
  for (const auto& [n, q] : samples) {
    const Cqs c = compute_hilbert_basis(n, q);
    std::mt19937_64 rng(23 * n + q);
    std::uniform_int_distribution<long> coef(-2 * n, 2 * n);
    for (int k = 0; k < 10; ++k) {
      const WeilDivisor d = wd(coef(rng), coef(rng));
      CAPTURE(n);
      CAPTURE(q);
      CHECK(abelow_region(c, d).lattice_points(c).empty());
    }
  }
  // ... but they are far from empty as sets: the vertex is a member
  // whenever it is non-integral.
  const Cqs c = compute_hilbert_basis(7, 3);
  const auto region = abelow_region(c, class_rep(2));
  CHECK(region.contains(c, RationalVector{Rat(2), make_rat(6, 7)}));
}

TEST_CASE("translation moves membership") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const auto base = below_region(c, wd(-3, 1));
  const RationalVector v{make_rat(5, 7), make_rat(-3, 7)};
  const auto moved = base.translated(v);
  for (const auto& p : rational_grid(-6, 6, -6, 6)) {
    REQUIRE(moved.contains(c, p) == base.contains(c, p - v));
  }
}

TEST_CASE("intersection is pointwise conjunction") {
  const Cqs c = compute_hilbert_basis(7, 3);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coef(-7, 7);
  for (int k = 0; k < 4; ++k) {
    const WeilDivisor d1 = wd(coef(rng), coef(rng));
    const WeilDivisor d2 = wd(coef(rng), coef(rng));
    const auto a = below_region(c, d1);
    const auto b = below_closure_region(c, d2).translated(polyhedron_vertex(c, canonical_divisor()));
    const auto both = StaircaseRegion::intersect(c, a, b);
    for (const auto& p : rational_grid(-8, 8, -8, 8)) {
      REQUIRE(both.contains(c, p) == (a.contains(c, p) && b.contains(c, p)));
    }
  }
}

TEST_CASE("the link region is the stated intersection") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const RationalVector vk = polyhedron_vertex(c, canonical_divisor());
  for (const auto& d : {class_rep(1), class_rep(3), wd(-4, -5)}) {
    const auto link = link_region(c, d);
    const auto direct = StaircaseRegion::intersect(
        c, below_region(c, d), below_closure_region(c, d).translated(vk));
    for (const auto& p : rational_grid(-7, 7, -7, 7)) {
      REQUIRE(link.contains(c, p) == direct.contains(c, p));
    }
    CHECK(link.lattice_points(c) == direct.lattice_points(c));
  }
}

TEST_CASE("negated views mirror membership") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const auto region = ext_region(c, class_rep(3), class_rep(0));
  CHECK(region.negated);
  const auto plain = below_region(c, class_rep(3));
  for (const auto& p : rational_grid(-6, 6, -6, 6)) {
    REQUIRE(plain.negated_view().contains(c, p) == plain.contains(c, -p));
  }
  CHECK(region.contains(c, lv(-4, -2)));
  CHECK(region.lattice_points(c) == std::vector<LatticeVector>{lv(-4, -2)});
}

TEST_CASE("coset enumeration agrees with a brute force scan") {
  const std::vector<std::pair<long, long>> samples = {{5, 2}, {7, 3}, {8, 5}};
  for (const auto& [n, q] : samples) {
    const Cqs c = compute_hilbert_basis(n, q);
    std::mt19937_64 rng(31 * n + q);
    std::uniform_int_distribution<long> coef(-n, n);
    for (int k = 0; k < 5; ++k) {
      const WeilDivisor d = wd(coef(rng), coef(rng));
      const WeilDivisor dp = wd(coef(rng), coef(rng));
      const auto region = tor_region(c, d, dp);
      const RationalVector offset{make_rat(coef(rng), n), make_rat(coef(rng), n)};
      auto got = region.coset_points(c, offset);
      std::vector<LatticeVector> want;
      for (long x = -5 * n; x <= 5 * n; ++x)
        for (long y = -5 * n; y <= 5 * n; ++y) {
          const LatticeVector m = lv(x, y);
          if (region.contains(c, offset + m)) want.push_back(m);
        }
      std::sort(want.begin(), want.end());
      CAPTURE(n);
      CAPTURE(q);
      CHECK(got == want);
    }
  }
}

TEST_CASE("coset enumeration refuses regions without cuts") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const auto unbounded = hom_support(c, class_rep(0), class_rep(0));
  CHECK_THROWS_AS(unbounded.lattice_points(c), std::logic_error);
}

TEST_CASE("pairing windows enumerate exactly the congruent degrees") {
  const Cqs c = compute_hilbert_basis(7, 3);
  PairingWindow w{Int(-3), Int(9), Int(-5), Int(11)};
  const auto degs = w.degrees(c);
  // brute force count over a covering coordinate box
  std::vector<LatticeVector> want;
  for (long x = -20; x <= 20; ++x)
    for (long y = -20; y <= 20; ++y) {
      const LatticeVector u = lv(x, y);
      if (pair0(c, u) >= w.s_lo && pair0(c, u) <= w.s_hi && pair1(c, u) >= w.t_lo &&
          pair1(c, u) <= w.t_hi)
        want.push_back(u);
    }
  std::sort(want.begin(), want.end());
  auto got = degs;
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  for (const auto& u : degs) CHECK(w.contains(c, u));
  CHECK_FALSE(w.contains(c, lv(-2, -2)));

  PairingWindow grown = w.expanded(Int(2));
  CHECK(grown.s_lo == -5);
  CHECK(grown.s_hi == 11);
  CHECK(grown.t_lo == -7);
  CHECK(grown.t_hi == 13);
  grown.absorb(c, lv(30, 0));
  CHECK(grown.contains(c, lv(30, 0)));

  const auto r = below_region(c, class_rep(3));
  const auto window = enumeration_window(c, r);
  for (const auto& u : r.lattice_points(c)) CHECK(window.contains(c, u));
}
