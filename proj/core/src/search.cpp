#include "rdyn/search.hpp"

#include <algorithm>
#include <set>

#include "rdyn/classify.hpp"
#include "rdyn/decompose.hpp"
#include "rdyn/errors.hpp"

namespace rdyn {

std::string completeness_name(Completeness c) {
  switch (c) {
    case Completeness::Complete: return "Complete";
    case Completeness::CompleteUpToCap: return "CompleteUpToCap";
    case Completeness::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string Line::str() const { return std::string(vertical ? "x = " : "y = ") + at.str(); }

std::vector<BiCurve> SearchReport::curve_list() const {
  std::vector<BiCurve> out;
  for (const auto& c : curves) out.push_back(c.curve);
  return out;
}

namespace {

std::vector<P1> rational_fixed_points(const RatMap& A) {
  std::vector<P1> out;
  for (const Q& r : rational_roots(A.num() - A.den() * UniPoly::x())) out.push_back(P1::finite(r));
  if (A.eval(P1::infinity()).inf) out.push_back(P1::infinity());
  return out;
}

bool special_or_gl(const RatMap& A) {
  return classify(A).tag != SpecialTag::NonSpecialNonGL;
}

void add_curve(SearchReport& rep, CurveCertificate c) {
  for (const auto& o : rep.curves)
    if (o.curve == c.curve) return;
  rep.curves.push_back(std::move(c));
}

void sort_curves(SearchReport& rep) {
  std::sort(rep.curves.begin(), rep.curves.end(),
            [](const CurveCertificate& a, const CurveCertificate& b) { return a.curve < b.curve; });
}

// Collapse curves related by (mu1, mu2) with mu_i commuting with A_i.
void dedup_symmetry(SearchReport& rep, const RatMap& A1, const RatMap& A2) {
  auto G1 = mobius_commutant(A1), G2 = mobius_commutant(A2);
  std::vector<CurveCertificate> kept;
  for (const auto& c : rep.curves) {
    bool dup = false;
    for (const auto& k : kept)
      for (const auto& m1 : G1)
        for (const auto& m2 : G2)
          dup = dup || image_curve(k.curve, m1, m2) == c.curve;
    if (!dup) kept.push_back(c);
  }
  rep.curves = std::move(kept);
}

}  // namespace

std::vector<Line> fixed_lines(const RatMap& A1, const RatMap& A2) {
  std::vector<Line> out;
  for (const auto& p : rational_fixed_points(A1)) out.push_back({true, p});
  for (const auto& p : rational_fixed_points(A2)) out.push_back({false, p});
  return out;
}

SearchReport find_invariant_curves(const RatMap& A1, const RatMap& A2, const SearchConfig& cfg) {
  if (A1.deg() < 2 || A2.deg() < 2) throw PreconditionError("maps of degree at least 2 required");
  if (cfg.d1 < 1 || cfg.d2 < 1 || cfg.iterate_cap < 1) throw PreconditionError("bidegree and cap must be positive");
  SearchReport rep;
  rep.cap = cfg.iterate_cap;
  if (cfg.include_lines) rep.lines = fixed_lines(A1, A2);
  if (A1.deg() != A2.deg()) {
    rep.completeness = Completeness::Complete;
    rep.notes.push_back("deg A1 != deg A2: only lines are invariant");
    return rep;
  }
  if (special_or_gl(A1) || special_or_gl(A2)) {
    rep.completeness = Completeness::Inconclusive;
    rep.notes.push_back("special or generalized Lattes input: results are verified, completeness is not claimed");
  }
  try {
    const RatMap F1 = iterate(A1, cfg.iterate_cap), F2 = iterate(A2, cfg.iterate_cap);
    if (F1.deg() % cfg.d2 != 0 || F2.deg() % cfg.d1 != 0) return rep;
    for (const auto& X1 : all_left_factors(F1, cfg.d2)) {
      for (const auto& X2 : all_left_factors(F2, cfg.d1)) {
        // Fix the parameter by X1; X2 is twisted by mu with
        // mu o B1 o mu^-1 = B2.
        for (const auto& B1 : left_divide(compose(A1, X1), X1)) {
          for (const auto& B2 : left_divide(compose(A2, X2), X2)) {
            for (const auto& mu : conjugators(B1, B2)) {
              const RatMap X2m = compose(X2, mu);
              BiCurve C = implicitize(X1, X2m);
              if (C.d1() != cfg.d1 || C.d2() != cfg.d2) continue;
              CurveCertificate cert{C, X1, X2m, B1, 1, {}};
              cert.identities.push_back({"A1 o X1 = X1 o B", compose(A1, X1) == compose(X1, B1)});
              cert.identities.push_back({"A2 o X2 = X2 o B", compose(A2, X2m) == compose(X2m, B1)});
              cert.identities.push_back({"(A1, A2)(C) = C", is_invariant(C, A1, A2)});
              bool ok = std::all_of(cert.identities.begin(), cert.identities.end(),
                                    [](const IdentityCheck& c) { return c.holds; });
              if (!ok) throw TheoremViolation("constructed curve " + C.str() + " fails its certificate");
              add_curve(rep, std::move(cert));
            }
          }
        }
      }
    }
  } catch (const Inconclusive& e) {
    rep.completeness = Completeness::Inconclusive;
    rep.notes.push_back(e.what());
  }
  if (cfg.dedup_by_symmetry) dedup_symmetry(rep, A1, A2);
  sort_curves(rep);
  return rep;
}

SearchReport find_periodic_curves(const RatMap& A1, const RatMap& A2, const SearchConfig& cfg, int period_cap) {
  if (period_cap < 1) throw PreconditionError("period cap must be positive");
  SearchReport rep;
  rep.cap = cfg.iterate_cap;
  if (cfg.include_lines) rep.lines = fixed_lines(A1, A2);
  for (int n = 1; n <= period_cap; ++n) {
    SearchConfig c = cfg;
    c.include_lines = false;
    c.dedup_by_symmetry = false;
    SearchReport r = find_invariant_curves(iterate(A1, n), iterate(A2, n), c);
    if (r.completeness == Completeness::Inconclusive) rep.completeness = Completeness::Inconclusive;
    for (const auto& s : r.notes) rep.notes.push_back("n = " + std::to_string(n) + ": " + s);
    for (auto cert : r.curves) {
      auto p = periodicity(cert.curve, A1, A2, n);
      if (!p) throw TheoremViolation("curve " + cert.curve.str() + " is not periodic with period dividing n");
      cert.period = *p;
      cert.identities.push_back({"(A1, A2)^" + std::to_string(*p) + "(C) = C", true});
      add_curve(rep, std::move(cert));
    }
  }
  sort_curves(rep);
  return rep;
}

PreperiodicReport find_preperiodic_components(const RatMap& A1, const RatMap& A2, const RatMap& Y1,
                                              const RatMap& Y2, int n_cap, int orbit_cap) {
  if (Y1.deg() < 1 || Y2.deg() < 1) throw PreconditionError("Y1, Y2 must be nonconstant");
  PreperiodicReport rep;
  for (int n = 1; n <= n_cap && rep.n == 0; ++n) {
    auto B1 = right_divide(compose(Y1, iterate(A1, n)), Y1);
    auto B2 = right_divide(compose(Y2, iterate(A2, n)), Y2);
    if (B1 && B2 && *B1 == *B2) {
      rep.n = n;
      rep.B = *B1;
    }
  }
  if (rep.n == 0)
    throw PreconditionError("identity failure: no B with Y1 o A1^n = B o Y1 and Y2 o A2^n = B o Y2 for n <= " +
                            std::to_string(n_cap));
  for (const auto& comp : separated_curve(Y1, Y2).components()) {
    ComponentOrbit o{comp, std::nullopt, std::nullopt};
    if (auto pp = preperiodicity(comp, A1, A2, orbit_cap, orbit_cap * rep.n)) {
      o.tail = pp->first;
      o.period = pp->second;
    }
    rep.components.push_back(o);
  }
  return rep;
}

ThetaReduction reduce_via_theta(const RatMap& A1, const RatMap& A2) {
  ThetaReduction r;
  for (int i = 0; i < 2; ++i) {
    const RatMap& A = i == 0 ? A1 : A2;
    SpecialClass sc = classify(A);
    if (sc.tag != SpecialTag::GeneralizedLattes)
      throw NotGeneralizedLattes("map " + A.str() + " is " + tag_name(sc.tag) + ", nothing to reduce");
    const Orbifold& O = *sc.orbifold;
    if (chi(O) <= 0) throw PreconditionError("maximal orbifold has zero Euler characteristic");
    RatMap X = theta(O);
    std::optional<RatMap> lift;
    for (const auto& B : left_divide(compose(A, X), X)) {
      if (B.deg() < 2) continue;
      SpecialClass sb = classify(B);
      if (sb.tag == SpecialTag::NonSpecialNonGL) {
        lift = B;
        break;
      }
    }
    if (!lift) throw TheoremViolation("no lift through theta with trivial maximal orbifold for " + A.str());
    (i == 0 ? r.X1 : r.X2) = X;
    (i == 0 ? r.B1 : r.B2) = *lift;
  }
  return r;
}

std::vector<BiCurve> push_forward(const ThetaReduction& r, const std::vector<BiCurve>& curves) {
  std::vector<BiCurve> out;
  for (const auto& c : curves) {
    BiCurve img = image_curve(c, r.X1, r.X2);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RatMap> commuting_left_factors(const RatMap& A, int k, int N) {
  const RatMap F = iterate(A, N);
  std::set<RatMap> out;
  if (F.deg() % k != 0) return {};
  for (const auto& X : all_left_factors(F, k)) {
    // X o mu commutes with A iff mu o A o mu^-1 solves X o B = A o X.
    for (const auto& B : left_divide(compose(A, X), X))
      for (const auto& mu : conjugators(A, B)) {
        RatMap U = compose(X, mu);
        if (compose(A, U) == compose(U, A)) out.insert(U);
      }
  }
  return {out.begin(), out.end()};
}

SearchReport commuting_route(const RatMap& A, const SearchConfig& cfg) {
  if (A.deg() < 2) throw PreconditionError("map of degree at least 2 required");
  if (special_or_gl(A)) throw PreconditionError("commuting route requires a map that is neither special nor generalized Lattes");
  SearchReport rep;
  rep.cap = cfg.iterate_cap;
  if (cfg.include_lines) rep.lines = fixed_lines(A, A);
  try {
    auto U1s = commuting_left_factors(A, cfg.d2, cfg.iterate_cap);
    auto U2s = commuting_left_factors(A, cfg.d1, cfg.iterate_cap);
    for (const auto& U1 : U1s)
      for (const auto& U2 : U2s) {
        BiCurve C = implicitize(U1, U2);
        if (C.d1() != cfg.d1 || C.d2() != cfg.d2) continue;
        CurveCertificate cert{C, U1, U2, A, 1, {}};
        cert.identities.push_back({"A o U1 = U1 o A", true});
        cert.identities.push_back({"A o U2 = U2 o A", true});
        cert.identities.push_back({"(A, A)(C) = C", is_invariant(C, A, A)});
        if (!cert.identities.back().holds) throw TheoremViolation("commuting curve " + C.str() + " is not invariant");
        add_curve(rep, std::move(cert));
      }
  } catch (const Inconclusive& e) {
    rep.completeness = Completeness::Inconclusive;
    rep.notes.push_back(e.what());
  }
  if (cfg.dedup_by_symmetry) dedup_symmetry(rep, A, A);
  sort_curves(rep);
  return rep;
}

}  // namespace rdyn
