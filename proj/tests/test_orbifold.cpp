#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "support.hpp"

using namespace rdyn;
using namespace support;

namespace {

Place pt(long a) { return Place::rational(Q(a)); }
const Place inf = Place::infinity();

Orbifold with_signature(const std::vector<int>& sig) {
  Orbifold o;
  long a = 0;
  for (int v : sig) o.set(pt(a++), v);
  return o;
}

bool zero_list(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  const std::vector<std::vector<int>> L{{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
  return std::find(L.begin(), L.end(), s) != L.end();
}

bool positive_list(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  if (s.empty()) return true;
  if (s.size() == 2) return s[0] == s[1];
  if (s.size() != 3) return false;
  if (s[0] == 2 && s[1] == 2) return true;
  return s[0] == 2 && s[1] == 3 && s[2] <= 5;
}

}  // namespace

TEST_SUITE("orbifold") {

TEST_CASE("Euler characteristic") {
  CHECK(chi(Orbifold()) == 2);
  CHECK(chi(with_signature({2, 2, 2, 2})) == 0);
  CHECK(chi(with_signature({2, 3, 7})) == Q(-1, 42));
  Orbifold ext;
  ext.set(Place::from_minpoly(z() * z() + c(1)), 2);  // two geometric points
  CHECK(chi(ext) == 1);
  CHECK(ext.signature() == std::vector<int>{2, 2});
}

TEST_CASE("chi sign matches the signature lists") {
  // Good orbifolds only: one point, or two with distinct values, are
  // excluded from the lists.
  std::vector<int> s;
  std::function<void(int)> rec = [&](int from) {
    if (Orbifold o = with_signature(s); o.is_good()) {
      const Q x = chi(o);
      CAPTURE(o.str());
      CHECK((x == 0) == zero_list(s));
      CHECK((x > 0) == positive_list(s));
    }
    if (s.size() == 4) return;
    for (int v = from; v <= 12; ++v) {
      s.push_back(v);
      rec(v);
      s.pop_back();
    }
  };
  rec(2);
}

TEST_CASE("preceq and lcm join") {
  Orbifold a{{pt(0), 2}, {inf, 2}}, b{{pt(0), 4}, {inf, 4}};
  CHECK(preceq(Orbifold(), a));
  CHECK(preceq(a, b));
  CHECK_FALSE(preceq(b, a));
  CHECK_FALSE(preceq(Orbifold{{pt(0), 3}}, Orbifold{{pt(0), 2}}));
  Orbifold j = lcm_join(Orbifold{{pt(0), 2}}, Orbifold{{pt(0), 3}, {pt(1), 2}});
  CHECK(j == Orbifold{{pt(0), 6}, {pt(1), 2}});
}

TEST_CASE("orbifolds of a map") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(o2_of(zn(n)) == Orbifold{{pt(0), n}, {inf, n}});
    std::vector<int> sig = o2_of(chebyshev(n)).signature();
    std::vector<int> want{2, 2, n};
    std::sort(want.begin(), want.end());
    if (n == 2) want = {2, 2};  // T2 is z^2 in disguise: {-1:2, inf:2}
    CHECK(sig == want);
  }
  CHECK(o2_of(chebyshev(3)) == Orbifold{{pt(1), 2}, {pt(-1), 2}, {inf, 3}});
  CHECK(o2_of(chebyshev(2)) == Orbifold{{pt(-1), 2}, {inf, 2}});
}

TEST_CASE("pullbacks") {
  Orbifold o{{pt(0), 2}, {inf, 2}};
  CHECK(pullback(zn(2), o).is_trivial());
  CHECK(pullback(zn(3), o) == o);
  CHECK(pullback(zn(2), Orbifold{{pt(1), 2}}) == Orbifold{{pt(1), 2}, {pt(-1), 2}});
  Gen g(21);
  for (int k = 0; k < 20; ++k) CHECK(pullback(g.map(3), Orbifold()).is_trivial());
}

TEST_CASE("covering and minimal holomorphic examples") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 5; ++m) {
      Orbifold o{{pt(0), m}, {inf, m}};
      if (std::gcd(n, m) != 1) continue;
      CHECK(is_min_holomorphic(zn(n), o, o));
      CHECK_FALSE(is_covering(zn(n), o, o));
    }
  // z^2 ramifies over 0 and inf, so those values are forced on the target.
  CHECK_FALSE(is_covering(zn(2), Orbifold{{pt(-1), 2}, {pt(1), 2}}, Orbifold{{pt(1), 2}}));
  CHECK(is_covering(zn(2), Orbifold{{pt(-1), 2}, {pt(1), 2}}, Orbifold{{pt(0), 2}, {pt(1), 2}, {inf, 2}}));
  Orbifold L{{pt(0), 2}, {pt(1), 2}, {pt(-1), 2}, {inf, 2}};
  CHECK(is_covering(lattes4(), L, L));
  CHECK(rh_identity_check(lattes4(), L, L));
  CHECK_FALSE(is_min_holomorphic(zn(2), Orbifold{{pt(0), 2}, {inf, 2}}, Orbifold{{pt(0), 2}, {inf, 2}}));
  for (int n : {3, 5}) {
    Orbifold t{{pt(-1), 2}, {pt(1), 2}, {inf, 4}};
    CHECK(is_min_holomorphic(chebyshev(n), t, t));
  }
}

TEST_CASE("o1 -> o2 is a covering for every map") {
  Gen g(22);
  for (int k = 0; k < 40; ++k) {
    RatMap f = g.map(static_cast<int>(g.integer(2, 5)));
    CAPTURE(f.str());
    CHECK(is_covering(f, o1_of(f), o2_of(f)));
    CHECK(rh_identity_check(f, o1_of(f), o2_of(f)));
  }
}

TEST_CASE("Riemann-Hurwitz count of critical points") {
  Gen g(23);
  for (int k = 0; k < 60; ++k) {
    RatMap f = g.map(static_cast<int>(g.integer(1, 6)));
    int s = 0;
    for (const auto& p : critical_points(f)) s += (local_degree(f, p) - 1) * p.degree();
    CHECK(s == 2 * f.deg() - 2);
  }
}

TEST_CASE("chi inequality with equality exactly for coverings") {
  Gen g(24);
  int coverings = 0;
  for (int k = 0; k < 80; ++k) {
    RatMap f = g.map(static_cast<int>(g.integer(2, 4)));
    Orbifold o2 = k % 4 == 0 ? o2_of(f) : g.orbifold();
    Orbifold o1 = pullback(f, o2);
    CHECK(is_holomorphic(f, o1, o2));
    CHECK(chi_inequality_check(f, o1, o2));
    const bool eq = chi(o1) == f.deg() * chi(o2);
    CHECK(eq == is_covering(f, o1, o2));
    coverings += eq;
  }
  CHECK(coverings > 0);
}

TEST_CASE("precondition failures are distinct") {
  Orbifold o{{pt(0), 2}, {inf, 2}};
  CHECK_THROWS_AS(rh_identity_check(zn(2), o, o), PreconditionError);
}

TEST_CASE("functoriality of pullbacks") {
  CHECK(functoriality_check(zn(2), zn(2), Orbifold{{pt(1), 4}}));
  CHECK(functoriality_check(zn(3), zn(2), Orbifold{{pt(0), 5}, {inf, 5}}));
  Gen g(25);
  for (int k = 0; k < 60; ++k) {
    RatMap f = g.map(static_cast<int>(g.integer(1, 3))), h = g.map(static_cast<int>(g.integer(1, 3)));
    Orbifold o = g.orbifold();
    CHECK(functoriality_check(f, h, o));
    CHECK(pullback(compose(h, f), o) == pullback(f, pullback(h, o)));
  }
}

TEST_CASE("critical values contain the support") {
  Orbifold o{{pt(0), 2}, {inf, 2}};
  CHECK(toch_predicate(zn(5), o, o));
  CHECK(toch_predicate(zn(9), o, o));
  CHECK_THROWS_AS(toch_predicate(zn(3), o, o), PreconditionError);
  CHECK_THROWS_AS(toch_predicate(zn(5), Orbifold(), o), PreconditionError);
}

}
