#include <doctest.h>

#include "support.hpp"

using namespace rdyn;
using namespace support;

namespace {

Place pt(long a) { return Place::rational(Q(a)); }
const Place inf = Place::infinity();

// theta o B = A o theta with theta = (z^2+1)/(2z): a generalized Lattes map
// built from a planted B.
RatMap planted_gl() {
  RatMap th(z() * z() + c(1), z() * Q(2));
  RatMap B(z() * z() * (z() - c(2)), c(1) - z() * Q(2));
  return *right_divide(compose(th, B), th);
}

RatMap conj(const RatMap& mu, const RatMap& A) { return compose(compose(mu, A), mu.inverse()); }

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("power conjugacy") {
  auto w = detect_power_conjugacy(zn(3));
  REQUIRE(w.status == Witness::Rational);
  CHECK(w.n == 3);
  CHECK(w.sign == 1);
  CHECK(w.mu->is_identity());

  w = detect_power_conjugacy(RatMap(c(1), z() * z()));
  REQUIRE(w.status == Witness::Rational);
  CHECK(w.n == 2);
  CHECK(w.sign == -1);

  RatMap A(z() * z() + c(2) * z());
  w = detect_power_conjugacy(A);
  REQUIRE(w.status == Witness::Rational);
  CHECK(conj(*w.mu, A) == zn(2));

  CHECK(detect_power_conjugacy(RatMap(z() * z() - c(1))).status == Witness::None);
}

TEST_CASE("Chebyshev conjugacy") {
  for (int n = 2; n <= 4; ++n) {
    auto w = detect_chebyshev_conjugacy(chebyshev(n));
    REQUIRE(w.status == Witness::Rational);
    CHECK(w.n == n);
  }
  RatMap A(z() * z() - c(2));
  auto w = detect_chebyshev_conjugacy(A);
  REQUIRE(w.status == Witness::Rational);
  CHECK(conj(*w.mu, A) == chebyshev(2));

  RatMap negT3(-chebyshev(3).num());
  w = detect_chebyshev_conjugacy(negT3);
  REQUIRE(w.status == Witness::Rational);
  CHECK(w.sign == -1);
}

TEST_CASE("conjugation by random Mobius maps is detected") {
  Gen g(31);
  for (int k = 0; k < 8; ++k) {
    RatMap mu = RatMap::mobius(Q(g.integer(1, 3)), Q(g.integer(-2, 2)), Q(0), Q(1));
    for (const RatMap& base : {zn(3), chebyshev(3)}) {
      RatMap A = conj(mu.inverse(), base);
      SpecialClass s = classify(A);
      CHECK(s.n == 3);
      CHECK((s.tag == SpecialTag::PowerConjugate || s.tag == SpecialTag::ChebyshevConjugate));
      if (s.mu) {
        RatMap B = conj(*s.mu, A);
        CHECK((B == zn(3) || B == chebyshev(3) || B == RatMap(-chebyshev(3).num())));
      }
    }
  }
}

TEST_CASE("Lattes detection") {
  auto L = is_lattes(lattes4());
  REQUIRE(L.has_value());
  CHECK(*L == Orbifold{{pt(0), 2}, {pt(1), 2}, {pt(-1), 2}, {inf, 2}});
  CHECK(is_covering(lattes4(), *L, *L));
  CHECK_FALSE(is_lattes(zn(2)).has_value());
  CHECK_FALSE(is_lattes(chebyshev(2)).has_value());
}

TEST_CASE("maximal orbifold") {
  CHECK(maximal_orbifold(RatMap(z() * z() - c(1))).is_trivial());
  CHECK(maximal_orbifold(RatMap(z() * z() + c(1))).is_trivial());
  const Orbifold L = maximal_orbifold(lattes4());
  CHECK(L == Orbifold{{pt(0), 2}, {pt(1), 2}, {pt(-1), 2}, {inf, 2}});
  CHECK(is_min_holomorphic(lattes4(), L, L));
  CHECK_THROWS_AS(maximal_orbifold(zn(3)), NotDefined);
  CHECK_THROWS_AS(maximal_orbifold(chebyshev(3)), NotDefined);

  const RatMap A = planted_gl();
  const Orbifold O = maximal_orbifold(A);
  CHECK(O == Orbifold{{pt(-1), 2}, {pt(1), 2}});
  CHECK(is_min_holomorphic(A, O, O));
}

TEST_CASE("maximal orbifold is the same for the second iterate") {
  for (const RatMap& A : {RatMap(z() * z() - c(1)), lattes4(), planted_gl()})
    CHECK(maximal_orbifold(A) == maximal_orbifold(iterate(A, 2)));
}

TEST_CASE("theta realizes every spherical signature") {
  const std::vector<Orbifold> sigs{
      {{pt(0), 3}, {inf, 3}},
      {{pt(-1), 2}, {pt(1), 2}, {inf, 5}},
      {{pt(1), 2}, {pt(0), 3}, {inf, 3}},
      {{pt(1), 2}, {pt(0), 3}, {inf, 4}},
      {{pt(1), 2}, {pt(0), 3}, {inf, 5}},
      {{pt(5), 2}, {pt(7), 3}, {pt(-2), 5}},
  };
  for (const auto& o : sigs) {
    CAPTURE(o.str());
    CHECK(o2_of(theta(o)) == o);
  }
  CHECK(theta(Orbifold{{pt(0), 4}, {inf, 4}}) == zn(4));
  CHECK(theta(Orbifold{{pt(-1), 2}, {pt(1), 2}, {inf, 3}}) ==
        RatMap(z().pow(6) + c(1), z().pow(3) * Q(2)));
}

TEST_CASE("Mobius symmetry groups") {
  CHECK(mobius_left_stabilizer(zn(2)).size() == 2);
  CHECK(mobius_left_stabilizer(zn(3)).size() == 1);
  CHECK(mobius_left_stabilizer(RatMap(z() + c(1))).size() == 1);
  auto G = mobius_left_stabilizer(RatMap(z().pow(4) + c(1), z() * z() * Q(2)));
  CHECK(G.size() >= 4);
  for (auto& m : G) CHECK(compose(RatMap(z().pow(4) + c(1), z() * z() * Q(2)), m) ==
                          RatMap(z().pow(4) + c(1), z() * z() * Q(2)));

  auto C2 = mobius_commutant(zn(2));
  CHECK(std::find(C2.begin(), C2.end(), RatMap(c(1), z())) != C2.end());
  CHECK(mobius_commutant(RatMap(z() * z() - c(1))).size() == 1);
  CHECK(mobius_commutant(zn(3)).size() >= 4);
  for (auto& m : mobius_commutant(zn(3))) CHECK(compose(m, zn(3)) == compose(zn(3), m));
}

TEST_CASE("classification tags") {
  CHECK(classify(zn(5)).tag == SpecialTag::PowerConjugate);
  CHECK(classify(zn(5)).n == 5);
  CHECK(classify(lattes4()).tag == SpecialTag::Lattes);
  CHECK(classify(RatMap(z() * z() - c(1))).tag == SpecialTag::NonSpecialNonGL);
  CHECK(classify(chebyshev(4)).tag == SpecialTag::ChebyshevConjugate);
  CHECK(classify(planted_gl()).tag == SpecialTag::GeneralizedLattes);
}

TEST_CASE("postcritical sets") {
  auto P = postcritical_set(RatMap(z() * z() - c(1)), 8);
  REQUIRE(P.has_value());
  CHECK(geometric_count(*P) == 3);  // 0, -1, inf
  CHECK_FALSE(postcritical_set(RatMap(z() * z() + c(1)), 8).has_value());
}

}
