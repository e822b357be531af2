#include "rdyn/curves.hpp"

#include <algorithm>
#include <numeric>

#include "rdyn/errors.hpp"
#include "rdyn/place.hpp"

namespace rdyn {

namespace {

Q sample(long i) { return i % 2 == 0 ? Q(i / 2) : Q(-(i + 1) / 2); }

// t-degree of num - a den, or -1 if it drops below the generic value.
bool keeps_degree(const RatMap& f, const Q& a) {
  return (f.num() - f.den() * a).deg() == f.deg();
}

// sum_i (num_i - v den_i) t^i with t in the x slot and v in the y slot.
BiPoly graph_in_t(const RatMap& f) {
  std::vector<UniPoly> cx;
  for (int i = 0; i <= f.deg(); ++i) cx.push_back(UniPoly(std::vector<Q>{f.num().coeff(i), -f.den().coeff(i)}));
  return BiPoly(cx);
}

// Interpolate F(x, y) from slices F(a_i, y).
BiPoly interpolate_x(const std::vector<Q>& xs, const std::vector<UniPoly>& slices) {
  int dy = 0;
  for (const auto& s : slices) dy = std::max(dy, s.deg());
  std::map<std::pair<int, int>, Q> terms;
  for (int j = 0; j <= dy; ++j) {
    std::vector<Q> ys;
    for (const auto& s : slices) ys.push_back(s.coeff(j));
    UniPoly px = interpolate(xs, ys);
    for (int i = 0; i <= px.deg(); ++i)
      if (px.coeff(i) != 0) terms[{i, j}] = px.coeff(i);
  }
  return BiPoly::from_terms(terms);
}

BiPoly canonical(const BiPoly& F) {
  if (F.is_zero()) throw PreconditionError("zero polynomial is not a curve");
  return squarefree_part(F).primitive();
}

}  // namespace

BiCurve::BiCurve(const BiPoly& F) : poly_(canonical(F)) {}

bool BiCurve::irreducible() const { return is_irreducible(poly_); }

std::vector<BiCurve> BiCurve::components() const {
  std::vector<BiCurve> out;
  for (const auto& [f, e] : factor_bivariate(poly_).factors) out.push_back(BiCurve(f));
  return out;
}

BiCurve separated_curve(const RatMap& Y1, const RatMap& Y2) {
  if (Y1.deg() < 1 || Y2.deg() < 1) throw PreconditionError("separated curve needs nonconstant maps");
  return BiCurve(separated_poly(Y1, Y2));
}

BiCurve implicitize(const ParamCurve& p) {
  const RatMap &X1 = p.X1, &X2 = p.X2;
  if (X1.deg() < 1 || X2.deg() < 1) throw PreconditionError("parametrization must be nonconstant");
  // Res_t(num X1 - x den X1, num X2 - y den X2): x-degree <= deg X2.
  const BiPoly G = graph_in_t(X2);
  std::vector<Q> xs;
  std::vector<UniPoly> slices;
  for (long i = 0; static_cast<int>(xs.size()) <= X2.deg(); ++i) {
    Q a = sample(i);
    if (!keeps_degree(X1, a)) continue;
    xs.push_back(a);
    slices.push_back(resultant_x(BiPoly::in_x(X1.num() - X1.den() * a), G));
  }
  return BiCurve(interpolate_x(xs, slices));
}

bool pullback_contains(const BiCurve& C, const BiCurve& image, const RatMap& A1, const RatMap& A2) {
  BiPoly pb = image.poly().substitute(A1.num(), A1.den(), A2.num(), A2.den());
  return exact_divide(pb, C.poly()).has_value();
}

BiCurve image_curve(const BiCurve& C, const RatMap& A1, const RatMap& A2) {
  if (A1.deg() < 1 || A2.deg() < 1) throw PreconditionError("image under constant map");
  const BiPoly& F = C.poly();
  // R(u, v) = Res_y(Res_x(F, u D1 - N1), v D2 - N2), by slices in u.
  const int du = std::max(1, F.deg_x()) * A2.deg();
  const BiPoly H = graph_in_t(A2);
  std::vector<Q> us;
  std::vector<UniPoly> r1;
  int generic = -1;
  for (long i = 0; static_cast<int>(us.size()) <= du + 1 || generic < 0; ++i) {
    Q a = sample(i);
    if (!keeps_degree(A1, a)) continue;
    UniPoly s = resultant_x(F, BiPoly::in_x(A1.num() - A1.den() * a));
    if (s.deg() > generic) {
      generic = s.deg();
      us.clear();
      r1.clear();
    }
    if (s.deg() < generic) continue;
    us.push_back(a);
    r1.push_back(s);
    if (i > 40 * (du + 2)) break;
  }
  std::vector<UniPoly> slices;
  for (const auto& s : r1) slices.push_back(s.deg() <= 0 ? s.pow(A2.deg()) : resultant_x(BiPoly::in_x(s), H));
  BiPoly R = interpolate_x(us, slices);
  if (R.is_zero()) throw TheoremViolation("elimination produced the zero polynomial");
  for (const auto& comp : BiCurve(R).components())
    if (pullback_contains(C, comp, A1, A2)) return comp;
  throw Unsupported("image curve leaves the affine chart");
}

bool is_invariant(const BiCurve& C, const RatMap& A1, const RatMap& A2) {
  return image_curve(C, A1, A2) == C;
}

std::optional<int> periodicity(const BiCurve& C, const RatMap& A1, const RatMap& A2, int max_n) {
  BiCurve cur = C;
  for (int n = 1; n <= max_n; ++n) {
    cur = image_curve(cur, A1, A2);
    if (cur == C) return n;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> preperiodicity(const BiCurve& C, const RatMap& A1, const RatMap& A2,
                                                  int max_l, int max_n) {
  std::vector<BiCurve> orbit{C};
  for (int i = 0; i < max_l + max_n; ++i) orbit.push_back(image_curve(orbit.back(), A1, A2));
  for (int l = 0; l <= max_l; ++l)
    for (int n = 1; n <= max_n; ++n)
      if (orbit[l + n] == orbit[l]) return std::make_pair(l, n);
  return std::nullopt;
}

int genus_separated(const RatMap& Y1, const RatMap& Y2) {
  BiCurve C = separated_curve(Y1, Y2);
  auto comps = C.components();
  if (comps.size() > 1 || separated_poly(Y1, Y2).primitive() != C.poly()) {
    std::vector<std::string> names;
    for (const auto& c : comps) names.push_back(c.str());
    throw ReducibleCurve("separated curve " + C.str() + " is reducible", names);
  }
  const long p = Y1.deg(), q = Y2.deg();
  std::vector<Place> cv = critical_values(Y1);
  for (const auto& c : critical_values(Y2)) cv.push_back(c);
  cv.push_back(Place::infinity());
  std::sort(cv.begin(), cv.end());
  cv.erase(std::unique(cv.begin(), cv.end()), cv.end());
  long sigma = 0;
  for (const auto& c : cv) {
    long s = 0;
    for (const auto& [a, na] : fiber_partition(Y1, c))
      for (const auto& [b, nb] : fiber_partition(Y2, c)) s += long(na) * nb * (long(a) * b - std::gcd(a, b));
    sigma += s * c.degree();
  }
  long twice = 2 * p * q - sigma;  // 2 - 2g
  if (twice % 2 != 0 || twice > 2) throw TheoremViolation("Riemann-Hurwitz count is inconsistent");
  return static_cast<int>((2 - twice) / 2);
}

bool SeparatedComponentReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

SeparatedComponentReport separated_component_check(const RatMap& X1, const RatMap& X2, const RatMap& Y1, const RatMap& Y2,
                                   const RatMap& A1, const RatMap& A2, int n) {
  for (const RatMap* f : {&X1, &X2, &Y1, &Y2, &A1, &A2})
    if (f->deg() < 1) throw PreconditionError("all maps must be nonconstant");
  if (n < 1) throw PreconditionError("n >= 1 required");
  SeparatedComponentReport r;
  r.B = compose(Y1, X1);
  r.checks.push_back({"Y1 o X1 = Y2 o X2", r.B == compose(Y2, X2)});
  r.checks.push_back({"X1 o Y1 = A1^n", compose(X1, Y1) == iterate(A1, n)});
  r.checks.push_back({"X2 o Y2 = A2^n", compose(X2, Y2) == iterate(A2, n)});
  r.checks.push_back({"A1 o X1 = X1 o B", compose(A1, X1) == compose(X1, r.B)});
  r.checks.push_back({"A2 o X2 = X2 o B", compose(A2, X2) == compose(X2, r.B)});
  BiCurve C = implicitize(X1, X2);
  r.curve = C;
  r.checks.push_back({"curve is a component of Y1(x) = Y2(y)",
                      exact_divide(separated_poly(Y1, Y2), C.poly()).has_value()});
  r.checks.push_back({"curve is (A1, A2)-invariant", is_invariant(C, A1, A2)});
  return r;
}

}  // namespace rdyn
