#include <doctest.h>

#include "support.hpp"

using namespace rdyn;
using namespace support;

namespace {

// Every column pair (i, j), i < j, with W_j = W_i o alpha for a Mobius alpha.
std::optional<std::pair<int, int>> brute_period(const Diagram& D) {
  const int n = static_cast<int>(D.columns.size());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (D.columns[i].deg() == D.columns[j].deg() && mu_equivalent(D.columns[j], D.columns[i])) return {{i, j - i}};
  return std::nullopt;
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("maximal common right factor") {
  auto r = max_common_right_factor(zn(4), zn(6));
  CHECK(r.w.deg() == 2);
  CHECK(compose(r.f1, r.w) == zn(4));
  CHECK(compose(r.g1, r.w) == zn(6));
  r = max_common_right_factor(zn(2), RatMap(z() * z() + c(1)));
  CHECK(r.w.deg() == 2);
  r = max_common_right_factor(zn(2), zn(3));
  CHECK(r.w.deg() == 1);
}

TEST_CASE("common right factor is maximal on planted towers") {
  Gen g(41);
  for (int k = 0; k < 10; ++k) {
    RatMap w = g.map(2), f1 = g.map(2), g1 = g.map(3);
    RatMap f = compose(f1, w), h = compose(g1, w);
    auto r = max_common_right_factor(f, h);
    CHECK(compose(r.f1, r.w) == f);
    CHECK(compose(r.g1, r.w) == h);
    CHECK(r.w.deg() % 2 == 0);
    // Any further common right factor of the quotients would enlarge w.
    CHECK(max_common_right_factor(r.f1, r.g1).w.deg() == 1);
  }
}

TEST_CASE("left and right division") {
  auto L = left_divide(zn(6), zn(3));
  REQUIRE(L.size() == 1);
  CHECK(L[0] == zn(2));
  for (auto& R : left_divide(chebyshev(6), chebyshev(3))) CHECK(compose(chebyshev(3), R) == chebyshev(6));
  CHECK(left_divide(zn(6), zn(4)).empty());
  CHECK(*right_divide(zn(6), zn(2)) == zn(3));
  CHECK(*right_divide(RatMap(z() * z() + c(1)), zn(2)) == RatMap(z() + c(1)));
  CHECK_FALSE(right_divide(RatMap(z() * z() + z()), zn(2)).has_value());
}

TEST_CASE("left factor classes") {
  CHECK(all_left_factors(zn(6), 2).size() == 1);
  auto T = all_left_factors(chebyshev(6), 3);
  REQUIRE(T.size() == 1);
  CHECK(mu_equivalent(T[0], chebyshev(3)));
  RatMap F(z().pow(4) + c(2) * z() * z());
  for (const RatMap& F0 : {F, zn(6), chebyshev(6), lattes4()}) {
    for (int n : {2, 3}) {
      if (F0.deg() % n) continue;
      auto cls = all_left_factors(F0, n);
      for (std::size_t i = 0; i < cls.size(); ++i) {
        CHECK_FALSE(left_divide(F0, cls[i]).empty());
        for (std::size_t j = i + 1; j < cls.size(); ++j) CHECK_FALSE(mu_equivalent(cls[i], cls[j]));
      }
    }
  }
  CHECK(all_left_factors(lattes4(), 2).size() == 3);
}

TEST_CASE("elementary transformations and walks") {
  CHECK(elementary_transform(RatMap((z() + c(1)).pow(2)), {zn(2), RatMap(z() + c(1))}) ==
        RatMap(z() * z() + c(1)));
  CHECK(elementary_transform(zn(6), {zn(2), zn(3)}) == zn(6));
  CHECK(elementary_transform(chebyshev(6), {chebyshev(2), chebyshev(3)}) == chebyshev(6));

  auto W = equivalence_walk(RatMap((z() + c(1)).pow(2)), 1);
  CHECK(W.representatives.size() == 2);
  CHECK(equivalence_walk(zn(2), 2).representatives.size() == 1);
  CHECK(equivalence_walk(chebyshev(6), 2).representatives.size() == 1);
  for (const auto& e : W.edges) {
    CHECK(compose(e.split.outer, e.split.inner) == W.representatives[e.from]);
    CHECK(compose(e.split.inner, e.split.outer) == W.representatives[e.to]);
  }
}

TEST_CASE("assembly of elementary transformation chains") {
  auto r = assemble_chain({{zn(2), RatMap(z() + c(1))}});
  CHECK(r.s == 1);
  CHECK(compose(r.V, r.U) == RatMap((z() + c(1)).pow(2)));
  CHECK(compose(r.U, r.V) == RatMap(z() * z() + c(1)));
  CHECK_THROWS_AS(assemble_chain({}), PreconditionError);
}

TEST_CASE("semiconjugacies") {
  CHECK(verify_semiconjugacy(zn(2), zn(3), zn(2)));
  CHECK(verify_semiconjugacy(RatMap((z() + c(1)).pow(2)), zn(2), RatMap(z() * z() + c(1))));
  CHECK_FALSE(verify_semiconjugacy(zn(2), RatMap(z() + c(1)), zn(2)));

  auto s = complete_semiconjugacy(RatMap((z() + c(1)).pow(2)), zn(2), RatMap(z() * z() + c(1)));
  CHECK(s.Y == RatMap(z() + c(1)));
  CHECK(s.d == 1);
  RatMap A(z() * z() - c(2));
  s = complete_semiconjugacy(A, RatMap::identity(), A);
  CHECK(s.d == 1);
  CHECK(s.Y == A);
}

TEST_CASE("completion on products A = V o U") {
  Gen g(42);
  for (int k = 0; k < 6; ++k) {
    RatMap V = g.map(2), U = g.map(2);
    RatMap A = compose(V, U), B = compose(U, V);
    if (classify(A).tag != SpecialTag::NonSpecialNonGL) continue;
    auto s = complete_semiconjugacy(A, V, B);
    CHECK(compose(V, s.Y) == iterate(A, s.d));
    CHECK(compose(s.Y, V) == iterate(B, s.d));
    CHECK(compose(compose(V, s.Y), A) == compose(A, compose(V, s.Y)));
  }
}

TEST_CASE("normalization of left factors of iterates") {
  auto n = normalize_left_factor(zn(2), zn(4), zn(4), 4);
  CHECK(n.N == 2);
  CHECK(n.R.is_identity());
  n = normalize_left_factor(chebyshev(2), chebyshev(4), chebyshev(4), 4);
  CHECK(n.N == 2);
  CHECK(n.R.is_identity());
  RatMap A(z() * z() - c(1));
  n = normalize_left_factor(A, A, A, 2);
  CHECK(n.N == 1);
  CHECK(n.R.is_identity());
}

TEST_CASE("good diagram chains") {
  for (auto [A, W0] : std::vector<std::pair<RatMap, RatMap>>{{zn(2), zn(3)}, {chebyshev(2), chebyshev(3)}}) {
    Diagram D = good_diagram_chain(A, W0, 6);
    CHECK(diagram_commutes(D));
    CHECK(D.good);
    for (const auto& W : D.columns) CHECK(W == W0);
    for (const auto& h : D.rungs) CHECK(h == A);
    auto p = detect_periodicity(D);
    REQUIRE(p.has_value());
    CHECK(p->N0 == 0);
    CHECK(p->r == 1);
    auto b = brute_period(D);
    REQUIRE(b.has_value());
    CHECK(b->first == p->N0);
    CHECK(b->second == p->r);
  }
  Diagram D = good_diagram_chain(zn(2), zn(2), 4);
  CHECK(D.columns[1].deg() == 1);
  CHECK(diagram_commutes(D));
}

TEST_CASE("bounds") {
  CHECK(bound_phi(3, 1) == 1);
  CHECK(bound_psi(2, 2) == 1 + bound_C(2) * bound_kappa(2));
  CHECK(bound_kappa(12) == 9);
  CHECK_FALSE(theorem_m2_gate(2, 1000, 0));
  CHECK(theorem_m2_gate(2, 2, 5));
  CHECK_FALSE(theorem_m2_gate(3, 84, 0));
  CHECK_THROWS_AS(theorem_m2_gate(0, 1, 0), PreconditionError);
}

TEST_CASE("good solutions") {
  CHECK(is_good_solution(zn(3), zn(2), zn(2), zn(3)));
  auto rep = good_solution_report(zn(2), RatMap::identity(), zn(2), RatMap::identity());
  CHECK_FALSE(rep.irreducible);
  CHECK(rep.no_common_right);
  CHECK_FALSE(rep.degrees_match);
  CHECK_FALSE(rep.good());
}

}
