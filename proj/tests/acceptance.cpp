// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime limits are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "genus_oracle.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace rdyn;
using namespace support;

namespace {

struct Failure {
  std::string why;
};

void need(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

Place pt(long a) { return Place::rational(Q(a)); }
const Place inf = Place::infinity();
const BiPoly X = BiPoly::x(), Y = BiPoly::y();

Orbifold with_signature(const std::vector<int>& sig) {
  Orbifold o;
  long a = 0;
  for (int v : sig) o.set(pt(a++), v);
  return o;
}

RatMap planted_gl(const RatMap& B) {
  RatMap th(z() * z() + c(1), z() * Q(2));  // (z + 1/z) / 2
  auto A = right_divide(compose(th, B), th);
  need(A.has_value(), "fixture " + B.str() + " does not descend through theta");
  return *A;
}

// 1
void orbifold_suite() {
  for (auto s : std::vector<std::vector<int>>{{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}})
    need(chi(with_signature(s)) == 0, "chi != 0 for " + with_signature(s).str());
  std::vector<std::vector<int>> pos{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
  for (int n = 2; n <= 12; ++n) {
    pos.push_back({n, n});
    pos.push_back({2, 2, n});
  }
  for (const auto& s : pos) need(chi(with_signature(s)) > 0, "chi <= 0 for " + with_signature(s).str());
  for (int n = 2; n <= 6; ++n) {
    need(o2_of(zn(n)) == Orbifold{{pt(0), n}, {inf, n}}, "o2_of(z^" + std::to_string(n) + ")");
    std::vector<int> want{2, 2, n};
    std::sort(want.begin(), want.end());
    // T2 has one finite critical value: its {2,2,n} degenerates to {2,2}.
    if (n == 2) want = {2, 2};
    need(o2_of(chebyshev(n)).signature() == want, "o2_of(T" + std::to_string(n) + ")");
  }
}

// 2
void functoriality() {
  Gen g(1002);
  for (int k = 0; k < 200; ++k) {
    RatMap f = g.map(static_cast<int>(g.integer(1, 4))), h = g.map(static_cast<int>(g.integer(1, 4)));
    Orbifold o = g.orbifold(3);
    need(pullback(compose(h, f), o) == pullback(f, pullback(h, o)),
         "f = " + f.str() + ", g = " + h.str() + ", O = " + o.str());
  }
}

// 3
void riemann_hurwitz() {
  Gen g(1003);
  for (int k = 0; k < 100; ++k) {
    RatMap f = g.map(static_cast<int>(g.integer(1, 6)));
    int s = 0;
    for (const auto& p : critical_points(f)) s += (local_degree(f, p) - 1) * p.degree();
    need(s == 2 * f.deg() - 2, "critical count for " + f.str());
  }
  int coverings = 0, strict = 0;
  for (int k = 0; k < 60; ++k) {
    RatMap f = g.map(static_cast<int>(g.integer(2, 4)));
    // Covering instances: (o1_of f, o2_of f). Holomorphic ones: pullbacks.
    need(is_covering(f, o1_of(f), o2_of(f)), "o1 -> o2 not a covering for " + f.str());
    need(chi(o1_of(f)) == f.deg() * chi(o2_of(f)), "chi(o1) != d chi(o2) for " + f.str());
    need(rh_identity_check(f, o1_of(f), o2_of(f)), "rh identity for " + f.str());
    ++coverings;
    Orbifold o2 = g.orbifold(3), o1 = pullback(f, o2);
    const bool cov = is_covering(f, o1, o2);
    const Q lhs = chi(o1), rhs = f.deg() * chi(o2);
    need(lhs <= rhs, "chi inequality for " + f.str() + " over " + o2.str());
    need((lhs == rhs) == cov, "equality without covering for " + f.str() + " over " + o2.str());
    need(chi_inequality_check(f, o1, o2), "library inequality check for " + f.str());
    strict += !cov;
  }
  need(coverings > 0 && strict > 0, "both branches of the inequality exercised");
}

// 4
void generalized_lattes() {
  need(maximal_orbifold(RatMap(z() * z() - c(1))).is_trivial(), "z^2 - 1 has a nontrivial O0");
  const Orbifold L{{pt(-1), 2}, {pt(0), 2}, {pt(1), 2}, {inf, 2}};
  const Orbifold O = maximal_orbifold(lattes4());
  need(O == L, "Lattes orbifold is " + O.str());
  need(is_covering(lattes4(), O, O), "Lattes map is not a covering");
  const std::vector<RatMap> fixtures{RatMap(z() * z() - c(1)), RatMap(z() * z() + c(1)), lattes4(),
                                     planted_gl(RatMap(z() * z() * (z() - c(2)), c(1) - z() * Q(2)))};
  for (const auto& A : fixtures)
    need(maximal_orbifold(A) == maximal_orbifold(iterate(A, 2)), "O0 differs for the iterate of " + A.str());
}

// 5
void semiconjugacy_completion() {
  Gen g(1005);
  int done = 0;
  for (int tries = 0; done < 20 && tries < 400; ++tries) {
    const int dv = static_cast<int>(g.integer(1, 4));
    const int du = static_cast<int>(g.integer(1, 8 / dv));
    if (dv * du < 2) continue;
    RatMap V = g.map(dv), U = g.map(du);
    RatMap A = compose(V, U), B = compose(U, V);
    if (dv > 1 && classify(A).tag != SpecialTag::NonSpecialNonGL) continue;
    auto s = complete_semiconjugacy(A, V, B);
    need(compose(V, s.Y) == iterate(A, s.d), "X o Y != A^d for V = " + V.str() + ", U = " + U.str());
    need(compose(s.Y, V) == iterate(B, s.d), "Y o X != B^d for V = " + V.str() + ", U = " + U.str());
    ++done;
  }
  need(done == 20, "only " + std::to_string(done) + " fixtures built");
}

// 6
void normalization() {
  const std::vector<RatMap> maps{RatMap(z() * z() - c(1)), RatMap(z() * z() + c(1)), RatMap((z() + c(1)).pow(2)),
                                 RatMap(z().pow(3) + z() + c(1)), RatMap(z() * z() + c(1), z() - c(2))};
  for (const auto& A : maps)
    for (int k = 1; k <= 2; ++k)
      for (int d = k + 1; d <= k + 2; ++d) {
        if (A.deg() == 3 && d > 3) continue;
        const RatMap Xk = iterate(A, k), R = iterate(A, d - k);
        const auto n = normalize_left_factor(A, Xk, R, d);
        const std::string tag = A.str() + ", k = " + std::to_string(k) + ", d = " + std::to_string(d);
        need(n.N == k, "N = " + std::to_string(n.N) + " for " + tag);
        need(compose(Xk, n.R) == iterate(A, n.N), "X o R' != A^N for " + tag);
        need(compose(n.R, iterate(A, d - n.N)) == R, "consistency identity for " + tag);
        for (int M = 0; M < n.N; ++M) need(left_divide(iterate(A, M), Xk).empty(), "smaller N admits a factor");
      }
}

// 7
void diagram_chains() {
  for (auto [A, W0] : std::vector<std::pair<RatMap, RatMap>>{{zn(2), zn(3)}, {chebyshev(2), chebyshev(3)}}) {
    const Diagram D = good_diagram_chain(A, W0, 6);
    const std::string tag = "A = " + A.str() + ", W0 = " + W0.str();
    need(D.columns.size() == 7 && D.rungs.size() == 6, "chain length for " + tag);
    need(diagram_commutes(D), "diagram does not commute for " + tag);
    const auto p = detect_periodicity(D);
    need(p && p->r == 1, "not 1-periodic for " + tag);
    for (std::size_t d = 1; d < D.columns.size(); ++d) {
      const RatMap &Wp = D.columns[d - 1], &W = D.columns[d], &h = D.rungs[d - 1];
      need(is_good_solution(Wp, h, A, W), "rung " + std::to_string(d) + " not good for " + tag);
      need(is_min_holomorphic(A, o2_of(W), o2_of(Wp)), "A not minimal holomorphic at rung " + std::to_string(d));
      need(is_min_holomorphic(h, o1_of(W), o1_of(Wp)), "h not minimal holomorphic at rung " + std::to_string(d));
    }
  }
}

// 8
void genus() {
  need(genus_separated(zn(3), zn(2)) == 0, "genus(z^3, z^2)");
  need(oracle::fiber_product_genus(zn(3), zn(2)) == 0, "pairing count (z^3, z^2)");
  const RatMap E(z().pow(3) - z());
  need(genus_separated(E, zn(2)) == 1, "genus(z^3 - z, z^2)");
  need(oracle::fiber_product_genus(E, zn(2)) == 1, "pairing count (z^3 - z, z^2)");
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      if (std::gcd(m, n) != 1) continue;
      need(genus_separated(zn(m), zn(n)) == 0, "genus(z^" + std::to_string(m) + ", z^" + std::to_string(n) + ")");
      need(oracle::fiber_product_genus(zn(m), zn(n)) == 0, "pairing count for monomials");
    }
}

std::vector<BiPoly> polys(const std::vector<BiCurve>& cs) {
  std::vector<BiPoly> out;
  for (const auto& c : cs) out.push_back(c.poly());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BiPoly> polys(std::vector<BiPoly> ps) {
  for (auto& p : ps) p = BiCurve(p).poly();
  std::sort(ps.begin(), ps.end());
  return ps;
}

// 9
void search_vs_oracle() {
  const RatMap A((z() + c(1)).pow(2));
  for (auto [d1, d2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    SearchConfig cfg;
    cfg.d1 = d1;
    cfg.d2 = d2;
    cfg.iterate_cap = 2;
    const SearchReport r = find_invariant_curves(A, A, cfg);
    const std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    need(r.completeness == Completeness::CompleteUpToCap, "completeness at " + tag);
    const auto want = polys(oracle::invariant_curves(A.num(), d1, d2));
    const auto got = polys(r.curve_list());
    std::ostringstream msg;
    msg << "bidegree " << tag << ": search {";
    for (const auto& p : got) msg << " " << p.str();
    msg << " } oracle {";
    for (const auto& p : want) msg << " " << p.str();
    msg << " }";
    need(got == want, msg.str());
    for (const auto& C : r.curve_list()) need(is_invariant(C, A, A), C.str() + " does not re-verify");
  }
}

// 10
void route_agreement() {
  const RatMap A((z() + c(1)).pow(2));
  for (int d1 = 1; d1 <= 2; ++d1)
    for (int d2 = 1; d2 <= 2; ++d2) {
      SearchConfig cfg;
      cfg.d1 = d1;
      cfg.d2 = d2;
      need(polys(commuting_route(A, cfg).curve_list()) == polys(find_invariant_curves(A, A, cfg).curve_list()),
           "routes disagree at (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
    }
}

// 11
void m2_gate() {
  for (int n = 1; n <= 4; ++n)
    for (int g = 0; g <= 3; ++g) {
      const int boundary = 84 * n - 168 + 84 * g;  // g == (m - 84n + 168) / 84
      for (int m : {boundary - 1, boundary, boundary + 1, 1, 1000}) {
        if (m < 1) continue;
        const bool want = Q(g) > Q(m - 84 * n + 168, 84);
        need(theorem_m2_gate(n, m, g) == want, "gate(" + std::to_string(n) + ", " + std::to_string(m) + ", " +
                                                   std::to_string(g) + ")");
      }
    }
  need(!theorem_m2_gate(2, 1000, 0), "n = 2, m = 1000, g = 0");
  need(theorem_m2_gate(2, 2, 5), "n = 2, m = 2, g = 5");
}

// 12
void theta_reduction() {
  for (const RatMap& B : {RatMap(z() * z() * (z() - c(2)), c(1) - z() * Q(2)),
                          RatMap(z() * z() * (z() - c(3)), c(1) - z() * Q(3))}) {
    const RatMap A = planted_gl(B);
    const auto red = reduce_via_theta(A, A);
    need(compose(A, red.X1) == compose(red.X1, red.B1), "theta o B' != A o theta for " + A.str());
    need(maximal_orbifold(red.B1).is_trivial(), "B' = " + red.B1.str() + " has a nontrivial O0");
    need(red.B1.deg() == A.deg(), "degree of B'");
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> cs{
      {1, "orbifold suite", 1, orbifold_suite},
      {2, "functoriality of pullbacks", 10, functoriality},
      {3, "Riemann-Hurwitz", 10, riemann_hurwitz},
      {4, "generalized Lattes detection", 30, generalized_lattes},
      {5, "semiconjugacy completion", 60, semiconjugacy_completion},
      {6, "normalization of left factors", 30, normalization},
      {7, "good diagram chains", 30, diagram_chains},
      {8, "genus of separated curves", 20, genus},
      {9, "invariant-curve search vs oracle", 600, search_vs_oracle},
      {10, "route agreement", 300, route_agreement},
      {11, "m2 gate arithmetic", 1, m2_gate},
      {12, "theta reduction fixture", 60, theta_reduction},
  };
  int failed = 0;
  for (const auto& c : cs) {
    std::string why;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && dt > c.limit_s) why = "over the time limit";
    std::printf("%s  %2d  %-34s %8.3f s (limit %g s)%s%s\n", why.empty() ? "PASS" : "FAIL", c.id, c.name, dt,
                c.limit_s, why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
    failed += !why.empty();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(cs.size()) - failed, cs.size());
  return failed ? 1 : 0;
}
