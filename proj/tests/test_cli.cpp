#include <doctest.h>

#include "parse.hpp"
#include "report.hpp"
#include "support.hpp"

using namespace rdyn;
using namespace rdyn::cli;
using namespace support;

namespace {

std::size_t error_position(const std::string& s) {
  try {
    parse_map(s);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("map expressions") {
  CHECK(parse_map("z^2 - 1") == RatMap(z() * z() - c(1)));
  RatMap L = parse_map("(z^2+1)^2 / (4*z*(z^2-1))");
  CHECK(L.deg() == 4);
  CHECK(L == lattes4());
  CHECK(parse_map("T3") == RatMap(c(4) * z().pow(3) - c(3) * z()));
  CHECK(parse_map("z^2 o (z+1)") == RatMap((z() + c(1)).pow(2)));
  CHECK(parse_map("(z^2-1)^\xE2\x88\x98" "2") == RatMap(z().pow(4) - c(2) * z() * z()));
  CHECK(parse_map("(z+1)^o4") == RatMap(z() + c(4)));
  CHECK(parse_map("1/z o 1/z").is_identity());
  CHECK(parse_map(" 3/4 z ") == RatMap(z() * Q(3, 4)));
  CHECK(parse_map("4z^3") == RatMap(c(4) * z().pow(3)));
  CHECK(parse_map("z^-2") == RatMap(c(1), z() * z()));
  CHECK(parse_map("T2 o T3") == chebyshev(6));
}

TEST_CASE("map syntax errors carry positions") {
  CHECK(error_position("z^2 +* 1") == 5);
  CHECK(error_position("(z+1") == 4);
  CHECK(error_position("z $") == 2);
  CHECK(error_position("") == 0);
  CHECK(error_position("T13") == 0);
  CHECK_THROWS_AS(parse_map("1/(z-z)"), ParseError);
  CHECK_THROWS_AS(parse_map("z^"), ParseError);
}

TEST_CASE("printing round-trips") {
  Gen g(61);
  std::vector<RatMap> fixtures{lattes4(), chebyshev(5), zn(3), RatMap(c(1), z()), RatMap::constant(Q(-2, 3))};
  for (int k = 0; k < 40; ++k) fixtures.push_back(g.map(static_cast<int>(g.integer(1, 5)), 7));
  for (const auto& f : fixtures) {
    CAPTURE(f.str());
    CHECK(parse_map(f.str()) == f);
    CHECK(map_from_json(to_json(f)) == f);
  }
}

TEST_CASE("curves") {
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  CHECK(parse_curve("x - (y+1)^2") == x - (y + BiPoly::constant(1)).pow(2));
  CHECK(parse_curve("x*y - 1/2") == x * y - BiPoly::constant(Q(1, 2)));
  CHECK(parse_curve("(x^2 + y)/3") == (x * x + y).scaled(Q(1, 3)));
  CHECK_THROWS_AS(parse_curve("x/y"), ParseError);
  CHECK_THROWS_AS(parse_curve("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_curve("x o y"), ParseError);
  BiPoly F = parse_curve("3x^2y - 2xy^2 + 5");
  CHECK(parse_curve(F.str()) == F);
  CHECK(bipoly_from_json(to_json(F)) == F);
}

TEST_CASE("orbifolds") {
  Orbifold o = parse_orbifold("{0:2, inf:3, root(z^2+1):2, -1/2:5}");
  CHECK(o.nu(Place::rational(Q(0))) == 2);
  CHECK(o.nu(Place::infinity()) == 3);
  CHECK(o.nu(Place::from_minpoly(z() * z() + c(1))) == 2);
  CHECK(o.nu(Place::rational(Q(-1, 2))) == 5);
  CHECK(parse_orbifold(o.str()) == o);
  CHECK(parse_orbifold("{}").is_trivial());
  CHECK_THROWS_AS(parse_orbifold("{0:2, 0:3}"), ParseError);
  CHECK_THROWS_AS(parse_orbifold("{root(z^2-1):2}"), ParseError);
  CHECK_THROWS_AS(parse_orbifold("{0:0}"), ParseError);
}

TEST_CASE("structured reports name identities and theorems") {
  const RatMap A((z() + c(1)).pow(2));
  SearchConfig cfg;
  cfg.d1 = 1;
  cfg.d2 = 2;
  Json j = to_json(find_invariant_curves(A, A, cfg), "invariant curves");
  CHECK(j["theorem"] == "invariant curves");
  REQUIRE(j["curves"].size() == 1);
  const Json& cert = j["curves"][0];
  CHECK(cert["curve"]["bidegree"] == Json::array({1, 2}));
  for (const auto& id : cert["identities"]) {
    CHECK(id.contains("identity"));
    CHECK(id["theorem"] == "invariant curves");
    CHECK(id["holds"] == true);
  }
  CHECK(bipoly_from_json(cert["curve"]) == BiCurve(parse_curve("x - (y+1)^2")).poly());
  CHECK(map_from_json(cert["B"]).deg() == 2);
}

}
