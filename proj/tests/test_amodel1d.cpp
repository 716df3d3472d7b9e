#include "doctest.h"

#include "circuitcat/amodel1d.hpp"
#include "circuitcat/balgebra.hpp"
#include "circuitcat/error.hpp"
#include "oracles.hpp"

using namespace circuitcat;

namespace {

Circuit make(std::vector<Int> a, std::vector<Int> nu = {}) {
  if (nu.empty()) nu.assign(a.size(), 0);
  return Circuit::validate(a, nu);
}

}  // namespace

TEST_CASE("intersection_indices") {
  CHECK(intersection_indices(2, 3, 0, 5) == std::vector<Int>{-2, -1, 0, 1});
  CHECK(intersection_indices(7, 9, 4, 4) == std::vector<Int>{0});
  CHECK(intersection_indices(1, 4, 0, 3) == std::vector<Int>{-3, -2, -1, 0});
  CHECK_THROWS_AS(intersection_indices(1, 1, 2, 1), Error);
}

TEST_CASE("intersection_count") {
  CHECK(intersection_count(2, 3, 0, 5) == 4);
  CHECK(intersection_count(1, 1, 0, 1) == 3);
  CHECK(intersection_count(5, 7, 0, 1) == 1);
  CHECK_THROWS_AS(intersection_count(1, 1, 3, 1), Error);
}

TEST_CASE("geometric_oracle") {
  CHECK(geometric_oracle(2, 3, 0, 5) == std::vector<Int>{-2, -1, 0, 1});
  CHECK(geometric_oracle(1, 1, 0, 2) == std::vector<Int>{-2, -1, 0, 1, 2});
  CHECK(geometric_oracle(3, 2, 0, 1) == std::vector<Int>{0});
}

TEST_CASE("lifted segments") {
  const LiftedSegment s = LiftedSegment::make(2, 3, 5);
  CHECK(s.lower == Rational(-1, 2));
  CHECK(s.upper == Rational(1, 3));
  CHECK(s.height(Rational(1, 5)) == Rational(1));
  CHECK(s.contains(Rational(1, 3)));
  CHECK_FALSE(s.contains(Rational(2, 5)));
}

TEST_CASE("intersection formulas agree with the scan oracle") {
  for (Int a0 = 1; a0 <= 12; ++a0)
    for (Int a1 = 1; a1 <= 12; ++a1)
      for (Int delta = 0; delta <= 60; ++delta) {
        const auto want = oracle::intersections(a0, a1, delta);
        REQUIRE(intersection_indices(a0, a1, 3, 3 + delta) == want);
        REQUIRE(geometric_oracle(a0, a1, 3, 3 + delta) == want);
        REQUIRE(intersection_count(a0, a1, 3, 3 + delta) == static_cast<Int>(want.size()));
      }
}

TEST_CASE("triangle_product") {
  const TriangleProduct in = triangle_product(2, 3, 0, 3, 6, 1, 1);
  CHECK(in.m == 2);
  CHECK(in.region == Region::Interior);
  const TriangleProduct out = triangle_product(1, 1, 0, 1, 2, 1, -1);
  CHECK(out.m == 0);
  CHECK(out.region == Region::ThroughPuncture);
  CHECK(triangle_product(4, 5, 0, 3, 9, 0, 0).region == Region::Interior);
  CHECK_THROWS_AS(triangle_product(2, 3, 0, 1, 2, 1, 0), Error);
  // z^1 needs k1 - k0 >= a1 = 3.
  CHECK_THROWS_AS(triangle_product(2, 3, 0, 2, 4, 1, 1), Error);
}

TEST_CASE("triangle products stay in bounds") {
  for (Int a0 = 1; a0 <= 6; ++a0)
    for (Int a1 = 1; a1 <= 6; ++a1)
      for (Int k1 = 1; k1 <= 8; ++k1)
        for (Int k2 = k1 + 1; k2 <= 9; ++k2)
          for (Int n1 : oracle::intersections(a0, a1, k1))
            for (Int n2 : oracle::intersections(a0, a1, k2 - k1)) {
              const TriangleProduct t = triangle_product(a0, a1, 0, k1, k2, n1, n2);
              CHECK(t.m == n1 + n2);
              CHECK(-k2 <= a0 * t.m);
              CHECK(a1 * t.m <= k2);
            }
}

TEST_CASE("hom_basis_1d") {
  const auto h = hom_basis_1d(make({2, 3, -5}), 5, 0, 4);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == Hom1dElement{false, 0, 2, 0});
  CHECK(hom_basis_1d(make({2, 3, -5}), 5, 0, 1).empty());
  const auto id = hom_basis_1d(make({1, 1, -2}), 1, 0, 0);
  REQUIRE(id.size() == 1);
  CHECK(id[0].identity);

  CHECK(hom_basis_1d(make({2, 3, -5}, {1, -1, 0}), 5, 0, 3)[0].degree == -2);
  CHECK_THROWS_AS(hom_basis_1d(make({2, 3, -5}), 6, 0, 1), Error);
  CHECK_THROWS_AS(hom_basis_1d(make({2, 3, -5}), 5, 0, 5), Error);
  CHECK_THROWS_AS(hom_basis_1d(make({1, 2, 3, -6}), 5, 0, 1), Error);
}

TEST_CASE("compose_1d") {
  const Hom1dElement p0{false, 0, 1, 2};
  const Hom1dElement p0sq{false, 0, 2, 4};
  const Hom1dElement p1sq{false, 1, 2, 0};
  const Hom1dElement id{true, 0, 0, 0};
  CHECK(compose_1d(p0, p0) == p0sq);
  CHECK(compose_1d(id, p1sq) == p1sq);
  CHECK(compose_1d(p0, p0sq).degree == p0.degree + p0sq.degree);
  CHECK_THROWS_AS(compose_1d(p0, Hom1dElement{false, 1, 1, 0}), Error);
}

TEST_CASE("kappa_1d") {
  const Circuit c = make({1, 2, -3});
  CHECK(kappa_1d(c, 1, Hom1dElement{false, 1, 1, 0}) == 1);
  CHECK(kappa_1d(c, 1, Hom1dElement{false, 0, 2, 0}) == 0);
  CHECK(kappa_1d(make({2, 3, -5}), 0, Hom1dElement{false, 0, 1, 0}) == 1);
  CHECK_THROWS_AS(kappa_1d(c, 1, Hom1dElement{false, 0, 1, 0}), Error);
}

TEST_CASE("one-dimensional model matches the B side") {
  for (const Circuit& c : enumerate_circuits(1, 6)) {
    if (c.positives() != 2) continue;
    for (const auto& nu : balanced_nus(3, 2)) {
      const Circuit cn = Circuit::from_internal(c.a(), nu);
      const int n = static_cast<int>(volume(cn));
      const BCategory b = BCategory::build(cn, n);
      for (int k = 0; k < n; ++k) {
        const auto h = hom_basis_1d(cn, n, 0, k);
        REQUIRE(h.size() == b.dim(0, k));
        for (const auto& e : h) {
          if (e.identity) continue;
          const Monomial v = Monomial::generator(3, static_cast<std::size_t>(e.branch), e.power);
          CHECK(e.degree == 2 * nu[e.branch] * e.power);
          CHECK(e.degree == oracle::degree(cn.a(), cn.nu(), v.exponents));
        }
      }
    }
  }
}
