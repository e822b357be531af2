#include <doctest.h>

#include "support.hpp"

using namespace rdyn;
using namespace support;

TEST_SUITE("algebra") {

TEST_CASE("division with remainder reconstructs the dividend") {
  Gen g(11);
  for (int k = 0; k < 50; ++k) {
    UniPoly a = g.poly(static_cast<int>(g.integer(0, 8))), b = g.poly(static_cast<int>(g.integer(0, 5)));
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());
  }
}

TEST_CASE("gcd divides both and keeps planted factors") {
  Gen g(12);
  for (int k = 0; k < 40; ++k) {
    UniPoly a = g.poly(3), b = g.poly(3), f = g.poly(2);
    UniPoly d = gcd(a * f, b * f);
    CHECK(divides(d, a * f));
    CHECK(divides(d, b * f));
    CHECK(divides(f.monic(), d));
  }
}

TEST_CASE("univariate factorization") {
  SUBCASE("z^4 + 4 splits into two quadratics") {
    auto F = factor_univariate(z().pow(4) + c(4));
    REQUIRE(F.factors.size() == 2);
    CHECK(F.factors[0].first.deg() == 2);
    CHECK(F.factors[1].first.deg() == 2);
  }
  SUBCASE("z^4 - 10z^2 + 1 is irreducible") { CHECK(is_irreducible(z().pow(4) - c(10) * z().pow(2) + c(1))); }
  SUBCASE("random products reconstruct") {
    Gen g(13);
    for (int k = 0; k < 30; ++k) {
      UniPoly p = g.poly(2) * g.poly(3) * g.poly(1);
      auto F = factor_univariate(p);
      UniPoly r = UniPoly::constant(F.unit);
      for (auto& [f, e] : F.factors) {
        CHECK(is_irreducible(f));
        r *= f.pow(static_cast<unsigned>(e));
      }
      CHECK(r == p);
    }
  }
}

TEST_CASE("bivariate factorization") {
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  SUBCASE("cusp is irreducible") { CHECK(is_irreducible(x.pow(3) - y.pow(2))); }
  SUBCASE("z^2 = w^2 splits") {
    auto F = factor_bivariate(x * x - y * y);
    CHECK(F.factors.size() == 2);
  }
  SUBCASE("products reconstruct") {
    BiPoly p = (x - y * y) * (x * y + BiPoly::constant(3)) * (x + y);
    auto F = factor_bivariate(p);
    BiPoly r = BiPoly::constant(F.unit);
    for (auto& [f, e] : F.factors) r = r * f.pow(static_cast<unsigned>(e));
    CHECK(r == p);
    CHECK(F.factors.size() == 3);
  }
}

TEST_CASE("resultants vanish exactly at common roots") {
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  // Res_y(y^2 - x, y - 1) = 1 - x.
  UniPoly r = resultant_y(y * y - x, y - BiPoly::constant(1));
  CHECK(r.eval(Q(1)) == 0);
  CHECK(r.deg() == 1);
}

TEST_CASE("composition is associative and iterates add") {
  Gen g(14);
  for (int k = 0; k < 30; ++k) {
    RatMap f = g.map(2), h = g.map(2), u = g.map(1);
    CHECK(compose(compose(f, h), u) == compose(f, compose(h, u)));
    CHECK(compose(f, h).deg() == f.deg() * h.deg());
  }
  RatMap f = g.map(2);
  CHECK(iterate(f, 3) == compose(f, iterate(f, 2)));
  CHECK(iterate(f, 0).is_identity());
}

TEST_CASE("Chebyshev polynomials commute and compose") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) CHECK(compose(chebyshev(m), chebyshev(n)) == chebyshev(m * n));
  CHECK(chebyshev(3) == RatMap(c(4) * z().pow(3) - c(3) * z()));
}

TEST_CASE("Mobius inverses") {
  RatMap m = RatMap::mobius(Q(2), Q(1), Q(1), Q(1));
  CHECK(compose(m, m.inverse()).is_identity());
  CHECK(compose(m.inverse(), m).is_identity());
}

TEST_CASE("difference polynomial vanishes on the diagonal") {
  Gen g(15);
  for (int k = 0; k < 20; ++k) {
    RatMap f = g.map(3);
    BiPoly D = difference_poly(f);
    for (long t = -2; t <= 2; ++t) CHECK(D.eval(Q(t), Q(t)) == 0);
  }
}

TEST_CASE("left roots recover planted right factors") {
  Gen g(16);
  for (int k = 0; k < 15; ++k) {
    RatMap X = g.map(2), R = g.map(2);
    auto roots = ratmap_roots(X, compose(X, R));
    bool found = false;
    for (auto& r : roots) {
      CHECK(compose(X, r) == compose(X, R));
      found = found || r == R;
    }
    CHECK(found);
  }
}

TEST_CASE("rational solutions of zero-dimensional systems") {
  // x^2 = 2y, y = 2.
  const MPoly x = MPoly::var(2, 0), y = MPoly::var(2, 1);
  auto s = solve_rational({x * x - y.scaled(2), y - MPoly::constant(2, 2)});
  REQUIRE(s.size() == 2);
  CHECK(s[0][0] == -2);
  CHECK(s[1][0] == 2);
  // x^2 = 2 has no rational points.
  CHECK(solve_rational({MPoly::var(1, 0) * MPoly::var(1, 0) - MPoly::constant(1, 2)}).empty());
}

}
