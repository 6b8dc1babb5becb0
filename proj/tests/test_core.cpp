#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "cqs/cqs.hpp"

using namespace cqs;

namespace {

LatticeVector lv(long x, long y) { return LatticeVector{Int(x), Int(y)}; }

// All lattice points of the dual cone with pairings in [0, s_max] x [0, t_max].
std::vector<LatticeVector> window_points(const Cqs& c, long s_max, long t_max) {
  std::vector<LatticeVector> out;
  for (Int s = 0; s <= s_max; ++s) {
    for (Int t = mod_floor(-Int(c.q) * s, Int(c.n)); t <= t_max; t += c.n) {
      auto u = lattice_point_from_pairings(c, s, t);
      REQUIRE(u.has_value());
      out.push_back(*u);
    }
  }
  return out;
}

// u is a nonnegative integer combination of Hilbert basis members.
bool representable(const Cqs& c, const LatticeVector& u,
                   std::map<std::pair<long, long>, bool>& memo) {
  if (u.is_zero()) return true;
  const auto key = std::make_pair(static_cast<long>(u.x.get_si()),
                                  static_cast<long>(u.y.get_si()));
  const auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = false;
  bool ok = false;
  for (const auto& h : c.hilbert_basis) {
    const LatticeVector v = u - h;
    if (dual_cone_contains(c, v, false) && representable(c, v, memo)) {
      ok = true;
      break;
    }
  }
  memo[key] = ok;
  return ok;
}

const std::vector<std::pair<long, long>> kSamples = {
    {2, 1}, {3, 1}, {3, 2}, {5, 2}, {7, 3}, {8, 5}, {11, 7}, {12, 5}};

}  // namespace

TEST_CASE("pairings against the two rays") {
  const Cqs c = compute_hilbert_basis(7, 3);
  CHECK(pairing(lv(7, 3), c.rho1) == 0);
  CHECK(pairing(lv(0, 1), c.rho0) == 0);
  CHECK(pairing(lv(4, 2), c.rho1) == 2);
  CHECK(pair0(c, lv(4, 2)) == 4);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> comp(-50, 50);
  for (int k = 0; k < 100; ++k) {
    const LatticeVector u = lv(comp(rng), comp(rng));
    const LatticeVector v = lv(comp(rng), comp(rng));
    CHECK(pairing(u + v, c.rho0) == pairing(u, c.rho0) + pairing(v, c.rho0));
    CHECK(pairing(u + v, c.rho1) == pairing(u, c.rho1) + pairing(v, c.rho1));
  }
}

TEST_CASE("dual cone membership") {
  const Cqs c = compute_hilbert_basis(7, 3);
  CHECK(dual_cone_contains(c, lv(1, 1), true));
  CHECK(dual_cone_contains(c, lv(0, 0), false));
  CHECK_FALSE(dual_cone_contains(c, lv(0, 0), true));
  CHECK_FALSE(dual_cone_contains(c, lv(7, 3), true));
  CHECK(dual_cone_contains(c, lv(7, 3), false));
  CHECK_FALSE(dual_cone_contains(c, lv(-1, 0), false));
  CHECK(dual_cone_contains(c, RationalVector{make_rat(1, 2), make_rat(1, 2)}, true));
}

TEST_CASE("hilbert basis of (7,3)") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const std::vector<LatticeVector> want = {lv(0, 1), lv(1, 1), lv(2, 1), lv(7, 3)};
  CHECK(c.hilbert_basis == want);
}

TEST_CASE("hilbert basis of (2,1)") {
  const Cqs c = compute_hilbert_basis(2, 1);
  const std::vector<LatticeVector> want = {lv(0, 1), lv(1, 1), lv(2, 1)};
  CHECK(c.hilbert_basis == want);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(compute_hilbert_basis(4, 2), InvalidParameters);
  CHECK_THROWS_AS(compute_hilbert_basis(6, 3), InvalidParameters);
  CHECK_THROWS_AS(compute_hilbert_basis(1, 1), InvalidParameters);
  CHECK_THROWS_AS(compute_hilbert_basis(5, 0), InvalidParameters);
  CHECK_THROWS_AS(compute_hilbert_basis(5, 5), InvalidParameters);
  CHECK_THROWS_AS(compute_hilbert_basis(5, 7), InvalidParameters);
  CHECK_THROWS_AS(compute_hilbert_basis(0, 1), InvalidParameters);
  CHECK_THROWS_AS(compute_hilbert_basis(-3, 1), InvalidParameters);
}

TEST_CASE("basis members are irreducible") {
  for (const auto& [n, q] : kSamples) {
    CAPTURE(n);
    CAPTURE(q);
    const Cqs c = compute_hilbert_basis(n, q);
    const auto candidates = window_points(c, n, n);
    for (const auto& h : c.hilbert_basis) {
      bool reducible = false;
      for (const auto& v : candidates) {
        if (v.is_zero() || v == h) continue;
        const LatticeVector w = h - v;
        if (!w.is_zero() && dual_cone_contains(c, w, false)) {
          reducible = true;
          break;
        }
      }
      CHECK_FALSE(reducible);
    }
  }
}

TEST_CASE("window points decompose into basis members") {
  for (const auto& [n, q] : kSamples) {
    CAPTURE(n);
    CAPTURE(q);
    const Cqs c = compute_hilbert_basis(n, q);
    std::map<std::pair<long, long>, bool> memo;
    for (const auto& u : window_points(c, 2 * n, 2 * n)) CHECK(representable(c, u, memo));
  }
}

TEST_CASE("basis is sorted and contains the boundary generators") {
  for (const auto& [n, q] : kSamples) {
    CAPTURE(n);
    CAPTURE(q);
    const Cqs c = compute_hilbert_basis(n, q);
    REQUIRE(c.hilbert_basis.size() >= 2);
    CHECK(c.hilbert_basis.front() == lv(0, 1));
    CHECK(c.hilbert_basis.back() == lv(n, q));
    for (std::size_t i = 1; i < c.hilbert_basis.size(); ++i) {
      CHECK(pair0(c, c.hilbert_basis[i - 1]) < pair0(c, c.hilbert_basis[i]));
      CHECK(pair1(c, c.hilbert_basis[i - 1]) > pair1(c, c.hilbert_basis[i]));
    }
    for (const auto& h : c.hilbert_basis) {
      CHECK(pair0(c, h) >= 0);
      CHECK(pair1(c, h) >= 0);
    }
  }
}

TEST_CASE("pairing coordinates round-trip") {
  const Cqs c = compute_hilbert_basis(7, 3);
  for (const auto& u : window_points(c, 14, 14)) {
    const auto back = lattice_point_from_pairings(c, pair0(c, u), pair1(c, u));
    REQUIRE(back.has_value());
    CHECK(*back == u);
  }
  CHECK_FALSE(lattice_point_from_pairings(c, Int(1), Int(5)).has_value());
  CHECK(lattice_point_from_pairings(c, Int(1), Int(4)).has_value());

  const RationalVector p = rational_point_from_pairings(c, make_rat(3, 1), make_rat(9, 7));
  CHECK(pair0(c, p) == 3);
  CHECK(pair1(c, p) == make_rat(9, 7));
}
