#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "cqs/exttor.hpp"

using namespace cqs;

namespace {

LatticeVector lv(long x, long y) { return LatticeVector{Int(x), Int(y)}; }
WeilDivisor wd(long a0, long a1) { return WeilDivisor{Int(a0), Int(a1)}; }

std::map<LatticeVector, long> counts(std::initializer_list<std::pair<LatticeVector, long>> xs) {
  std::map<LatticeVector, long> m;
  for (const auto& [u, k] : xs) m[u] = k;
  return m;
}

}  // namespace

TEST_CASE("hom supports") {
  const Cqs c = compute_hilbert_basis(7, 3);
  // Hom(D, D) is the coordinate ring: the full dual cone.
  for (int i : {0, 2, 5}) {
    const auto self = hom_support(c, class_rep(i), class_rep(i));
    CHECK(self.contains(c, lv(0, 0)));
    CHECK(self.contains(c, lv(1, 1)));
    CHECK(self.contains(c, lv(7, 3)));
    CHECK_FALSE(self.contains(c, lv(-1, 0)));
    CHECK_FALSE(self.contains(c, lv(1, 0)));
  }
  // Hom(O, D') is the section module of D'.
  const WeilDivisor dp = wd(-4, -5);
  const auto from_free = hom_support(c, class_rep(0), dp);
  for (long x = -10; x <= 10; ++x)
    for (long y = -10; y <= 10; ++y)
      REQUIRE(from_free.contains(c, lv(x, y)) == polyhedron_contains(c, dp, lv(x, y)));
  // Hom(E^3, E^2) sits at the difference of the vertices.
  const auto h = hom_support(c, class_rep(3), class_rep(2));
  CHECK(h.contains(c, lv(-1, 0)));
  CHECK(h.contains(c, lv(0, 0)));
  CHECK_FALSE(h.contains(c, lv(-2, 0)));
  CHECK_FALSE(h.contains(c, lv(0, -1)));
}

TEST_CASE("first ext of the (7,3) classes against the trivial divisor") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const auto e = ext1(c, class_rep(3), class_rep(0));
  CHECK(e.dim() == 1);
  CHECK(e.degree_counts() == counts({{lv(-4, -2), 1}}));
  CHECK(e.entries()[0].label == "ext1");
  CHECK(ext1(c, class_rep(3), canonical_divisor()).empty());
  // dim Ext^1(E^j, O) counts the generators beyond the forced two.
  for (std::int64_t j = 1; j < 7; ++j) {
    CAPTURE(j);
    CHECK(ext1(c, class_rep(j), class_rep(0)).dim() ==
          mingens(c, class_rep(j)).size() - 2);
  }
  CHECK(ext1(c, class_rep(0), class_rep(0)).empty());
}

TEST_CASE("first tor of E^3 against E^2") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const SyzygyQuiver qv = build_quiver(c);
  const auto t = tor1(c, qv, class_rep(3), class_rep(2));
  CHECK(t.dim() == 4);
  CHECK(t.degree_counts() ==
        counts({{lv(11, 6), 1}, {lv(12, 6), 1}, {lv(14, 7), 1}, {lv(15, 7), 1}}));
  REQUIRE(t.entries().size() == 4);
  CHECK(t.entries()[0].label == "W1.1");
  CHECK(t.entries()[1].label == "W1.2");
  CHECK(t.entries()[2].label == "W2.1");
  CHECK(t.entries()[3].label == "W2.2");
  // Tor against the coordinate ring vanishes, in both arguments.
  CHECK(tor1(c, qv, class_rep(0), class_rep(4)).empty());
  CHECK(tor1(c, qv, class_rep(3), class_rep(0)).empty());
}

TEST_CASE("higher ext by unrolling the quiver") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const SyzygyQuiver qv = build_quiver(c);
  ExtTorCalculator cal(c, qv);
  const auto e2 = cal.ext(class_rep(3), class_rep(0), 2);
  CHECK(e2.dim() == 2);
  CHECK(e2.degree_counts() == counts({{lv(-5, -3), 1}, {lv(-8, -4), 1}}));
  for (std::int64_t i = 1; i <= 5; ++i) {
    CHECK(cal.ext(class_rep(0), class_rep(2), i).empty());
    CHECK(cal.tor(class_rep(0), class_rep(2), i).empty());
    CHECK(cal.tor(class_rep(2), class_rep(0), i).empty());
  }
  CHECK_THROWS_AS(cal.ext(class_rep(1), class_rep(0), 0), InvalidIndex);
  CHECK_THROWS_AS(cal.tor(class_rep(1), class_rep(0), -1), InvalidIndex);
  CHECK_THROWS_AS(ext_i(c, qv, class_rep(1), class_rep(0), 0), InvalidIndex);
  CHECK_THROWS_AS(tor_i(c, qv, class_rep(1), class_rep(0), 0), InvalidIndex);
}

TEST_CASE("calculator and direct computations agree") {
  const Cqs c = compute_hilbert_basis(8, 5);
  const SyzygyQuiver qv = build_quiver(c);
  ExtTorCalculator cal(c, qv);
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<long> coef(-8, 8);
  for (int k = 0; k < 10; ++k) {
    const WeilDivisor d = wd(coef(rng), coef(rng));
    const WeilDivisor dp = wd(coef(rng), coef(rng));
    CHECK(same_degree_counts(cal.ext(d, dp, 1), ext1(c, d, dp)));
    CHECK(same_degree_counts(cal.tor(d, dp, 1), tor1(c, qv, d, dp)));
    CHECK(same_degree_counts(cal.ext(d, dp, 3), ext_i(c, qv, d, dp, 3)));
    CHECK(same_degree_counts(cal.tor(d, dp, 2), tor_i(c, qv, d, dp, 2)));
  }
}

TEST_CASE("canonical vanishing on (7,3)") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const SyzygyQuiver qv = build_quiver(c);
  ExtTorCalculator cal(c, qv);
  for (std::int64_t j = 0; j < 7; ++j)
    for (std::int64_t i = 1; i <= 5; ++i) {
      CAPTURE(j);
      CAPTURE(i);
      CHECK(cal.ext(class_rep(j), canonical_divisor(), i).empty());
    }
}

TEST_CASE("twisting shifts ext against and tor with the twist") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const SyzygyQuiver qv = build_quiver(c);
  std::mt19937_64 rng(7373);
  std::uniform_int_distribution<long> coef(-7, 7);
  for (int k = 0; k < 8; ++k) {
    const WeilDivisor d = wd(coef(rng), coef(rng));
    const WeilDivisor dp = wd(coef(rng), coef(rng));
    const LatticeVector w = lv(coef(rng), coef(rng));
    CHECK(ext1(c, twist(c, d, w), dp).entries() == ext1(c, d, dp).shifted(-w).entries());
    CHECK(tor1(c, qv, twist(c, d, w), dp).entries() ==
          tor1(c, qv, d, dp).shifted(w).entries());
  }
}

TEST_CASE("ext against the canonical twist matches the matlis dual of tor") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const SyzygyQuiver qv = build_quiver(c);
  ExtTorCalculator cal(c, qv);
  const WeilDivisor k_minus_e2 = canonical_divisor() - class_rep(2);
  const auto via_ext = cal.ext(class_rep(3), k_minus_e2, 3);
  const auto via_tor = matlis_dual(tor1(c, qv, class_rep(3), class_rep(2)));
  CHECK(same_degree_counts(via_ext, via_tor));
  CHECK(via_ext.degree_counts() ==
        counts({{lv(-11, -6), 1}, {lv(-12, -6), 1}, {lv(-14, -7), 1}, {lv(-15, -7), 1}}));
  CHECK(same_degree_counts(cal.ext(class_rep(3), k_minus_e2, 4),
                           matlis_dual(cal.tor(class_rep(3), class_rep(2), 2))));
}

TEST_CASE("matlis duality is an involution") {
  const Cqs c = compute_hilbert_basis(7, 3);
  const SyzygyQuiver qv = build_quiver(c);
  const auto t = tor1(c, qv, class_rep(3), class_rep(2));
  CHECK(matlis_dual(matlis_dual(t)).entries() == t.entries());
}

TEST_CASE("periodicity of the self-dual singularities") {
  const Cqs c = compute_hilbert_basis(6, 5);
  const SyzygyQuiver qv = build_quiver(c);
  ExtTorCalculator cal(c, qv);
  for (std::int64_t a = 1; a < 6; ++a) {
    const auto& in_a = qv.arrows_into[static_cast<std::size_t>(a)];
    REQUIRE(in_a.size() == 1);
    const LabelledArrow& first = qv.arrows[in_a[0]];
    const auto& in_src = qv.arrows_into[static_cast<std::size_t>(first.source)];
    REQUIRE(in_src.size() == 1);
    const LatticeVector period = first.label + qv.arrows[in_src[0]].label;
    for (std::int64_t b = 0; b < 6; ++b)
      for (std::int64_t i = 1; i <= 2; ++i) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(i);
        CHECK(same_degree_counts(cal.ext(class_rep(a), class_rep(b), i + 2),
                                 cal.ext(class_rep(a), class_rep(b), i).shifted(-period)));
      }
  }
}
