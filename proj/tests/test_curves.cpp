#include <doctest.h>

#include <numeric>

#include "genus_oracle.hpp"
#include "support.hpp"

using namespace rdyn;
using namespace support;

namespace {

const BiPoly X = BiPoly::x(), Y = BiPoly::y();

}  // namespace

TEST_SUITE("curves") {

TEST_CASE("separated curves and implicitization") {
  CHECK(separated_curve(zn(3), zn(2)) == BiCurve(X.pow(3) - Y.pow(2)));
  CHECK(implicitize(zn(2), zn(3)) == BiCurve(X.pow(3) - Y.pow(2)));
  CHECK(implicitize(RatMap::identity(), RatMap::identity()) == BiCurve(X - Y));
  CHECK(implicitize(zn(2), zn(2)) == BiCurve(X - Y));
}

TEST_CASE("implicit equations vanish on their parametrization") {
  Gen g(51);
  for (int k = 0; k < 15; ++k) {
    RatMap X1 = g.map(static_cast<int>(g.integer(1, 3))), X2 = g.map(static_cast<int>(g.integer(1, 3)));
    BiCurve C = implicitize(X1, X2);
    CHECK(C.irreducible());
    for (long t = -3; t <= 3; ++t) {
      P1 a = X1.eval(Q(t)), b = X2.eval(Q(t));
      if (a.inf || b.inf) continue;
      CHECK(C.poly().eval(a.v, b.v) == 0);
    }
  }
}

TEST_CASE("image curves") {
  BiCurve D(X - Y);
  RatMap A(z() * z() - c(1));
  CHECK(image_curve(D, A, A) == D);
  CHECK(image_curve(BiCurve(X - Y.pow(2)), zn(2), zn(2)) == BiCurve(X - Y.pow(2)));
  CHECK(image_curve(BiCurve(X * Y - BiPoly::constant(1)), zn(2), zn(2)) == BiCurve(X * Y - BiPoly::constant(1)));
  CHECK(image_curve(BiCurve(X + Y), zn(2), zn(2)) == D);
  CHECK(image_curve(D, lattes4(), lattes4()) == D);
}

TEST_CASE("invariance, periodicity and preperiodicity") {
  CHECK(is_invariant(BiCurve(X - Y), zn(2), zn(2)));
  CHECK_FALSE(is_invariant(BiCurve(X + Y), zn(2), zn(2)));
  auto pp = preperiodicity(BiCurve(X + Y), zn(2), zn(2), 3, 3);
  REQUIRE(pp.has_value());
  CHECK(pp->first == 1);
  CHECK(pp->second == 1);
  RatMap A(z().pow(3) + c(2) * z());
  RatMap negA = RatMap(-A.num());
  auto p = periodicity(BiCurve(X - Y), A, negA, 4);
  REQUIRE(p.has_value());
  CHECK(*p == 2);
}

TEST_CASE("genus of separated curves") {
  CHECK(genus_separated(zn(3), zn(2)) == 0);
  CHECK(genus_separated(RatMap(z().pow(3) - z()), zn(2)) == 1);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CAPTURE(m);
      CAPTURE(n);
      CHECK(genus_separated(zn(m), zn(n)) == 0);
      CHECK(oracle::fiber_product_genus(zn(m), zn(n)) == 0);
    }
  CHECK(oracle::fiber_product_genus(RatMap(z().pow(3) - z()), zn(2)) == 1);
  CHECK_THROWS_AS(genus_separated(zn(2), zn(2)), ReducibleCurve);
  try {
    genus_separated(zn(2), zn(2));
  } catch (const ReducibleCurve& e) {
    CHECK(e.factors().size() == 2);
  }
}

TEST_CASE("genus agrees with the pairing count on random irreducible pairs") {
  Gen g(52);
  int seen = 0;
  for (int k = 0; k < 30 && seen < 12; ++k) {
    RatMap Y1 = g.map(static_cast<int>(g.integer(2, 4))), Y2 = g.map(static_cast<int>(g.integer(2, 3)));
    if (!separated_curve(Y1, Y2).irreducible()) continue;
    ++seen;
    CAPTURE(Y1.str());
    CAPTURE(Y2.str());
    CHECK(genus_separated(Y1, Y2) == oracle::fiber_product_genus(Y1, Y2));
  }
  CHECK(seen > 0);
}

TEST_CASE("curves from semiconjugacies") {
  RatMap A((z() + c(1)).pow(2));
  auto r = separated_component_check(zn(2), zn(2), RatMap(z() + c(1)), RatMap(z() + c(1)), A, A, 1);
  CHECK(r.ok());
  for (const auto& c : r.checks) CHECK_MESSAGE(c.holds, c.name);
  REQUIRE(r.curve.has_value());
  CHECK(*r.curve == BiCurve(X - Y));
}

}
