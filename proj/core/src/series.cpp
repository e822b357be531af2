#include "rdyn/series.hpp"

#include <algorithm>

#include "rdyn/errors.hpp"

namespace rdyn {

namespace {

using S = std::vector<Q>;

S smul(const S& a, const S& b, int n) {
  S r(n);
  for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < n && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

S sinv(const S& a, int n) {
  S r(n);
  r[0] = 1 / a[0];
  for (int k = 1; k < n; ++k) {
    Q acc = 0;
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc += a[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return r;
}

// p(y(s)) mod s^n.
S seval(const UniPoly& p, const S& y, int n) {
  S r(n);
  for (int i = p.deg(); i >= 0; --i) {
    r = smul(r, y, n);
    r[0] += p.coeff(i);
  }
  return r;
}

// p(center + s) as a series.
S poly_series(const UniPoly& p, const Q& c, int n) {
  UniPoly q = p.shift(c);
  S r(n);
  for (int i = 0; i < n && i <= q.deg(); ++i) r[i] = q.coeff(i);
  return r;
}

}  // namespace

SeriesApprox newton_lift(const RatMap& X, const RatMap& F, const Q& center, const Q& y0,
                         int precision) {
  // G(y, s) = Xn(y) Fd(c+s) - Fn(c+s) Xd(y)
  const S fn = poly_series(F.num(), center, precision);
  const S fd = poly_series(F.den(), center, precision);
  const UniPoly xn = X.num(), xd = X.den();
  const UniPoly xn1 = xn.derivative(), xd1 = xd.derivative();
  S y{y0};
  int n = 1;
  while (n < precision) {
    n = std::min(2 * n, precision);
    y.resize(n);
    S g(n), gy(n);
    S a = seval(xn, y, n), b = seval(xd, y, n);
    S a1 = seval(xn1, y, n), b1 = seval(xd1, y, n);
    S t1 = smul(a, fd, n), t2 = smul(fn, b, n);
    S u1 = smul(a1, fd, n), u2 = smul(fn, b1, n);
    for (int i = 0; i < n; ++i) {
      g[i] = t1[i] - t2[i];
      gy[i] = u1[i] - u2[i];
    }
    if (gy[0] == 0) throw PreconditionError("Newton lifting at a multiple root");
    S corr = smul(g, sinv(gy, n), n);
    for (int i = 0; i < n; ++i) y[i] -= corr[i];
  }
  y.resize(precision);
  return {center, y};
}

std::optional<RatMap> pade(const SeriesApprox& s, int k) {
  const int n = s.precision();
  if (n < 2 * k + 1) return std::nullopt;
  UniPoly r0 = UniPoly::monomial(1, n), r1(s.coeffs);
  UniPoly t0, t1 = UniPoly::constant(1);
  while (r1.deg() > k) {
    auto [q, r] = divmod(r0, r1);
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.is_zero() || t1.deg() > k || t1.coeff(0) == 0) return std::nullopt;
  return RatMap(r1.shift(-s.center), t1.shift(-s.center));
}

std::vector<RatMap> ratmap_roots(const RatMap& X, const RatMap& F) {
  if (X.deg() < 1) throw PreconditionError("left factor must be nonconstant");
  std::vector<RatMap> out;
  if (F.deg() == 0) {
    Q c = F.num().coeff(0);
    for (const auto& r : rational_roots(X.num() - X.den() * c)) out.push_back(RatMap::constant(r));
    return out;
  }
  if (F.deg() % X.deg() != 0) return out;
  const int k = F.deg() / X.deg();
  const P1 xinf = X.eval(P1::infinity());
  Q t0;
  UniPoly P;
  for (long i = 0;; ++i) {
    t0 = (i % 2 == 0) ? Q(i / 2) : Q(-(i + 1) / 2);
    P1 c = F.eval(t0);
    if (c.inf || xinf == c) continue;
    P = X.num() - X.den() * c.v;
    if (P.deg() != X.deg()) continue;
    if (gcd(P, P.derivative()).deg() > 0) continue;
    break;
  }
  for (const Q& y0 : rational_roots(P)) {
    int prec = 2 * F.deg() + 4;
    for (int attempt = 0; attempt < 2; ++attempt, prec *= 2) {
      SeriesApprox s = newton_lift(X, F, t0, y0, prec);
      auto R = pade(s, k);
      if (R && R->deg() == k && compose(X, *R) == F) {
        out.push_back(*R);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rdyn
