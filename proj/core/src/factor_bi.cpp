#include <algorithm>

#include "rdyn/bipoly.hpp"
#include "rdyn/errors.hpp"
#include "rdyn/factor.hpp"

namespace rdyn {

namespace {

using Series = std::vector<UniPoly>;  // coefficients of s^k, each a polynomial in x

BiPoly must_divide(const BiPoly& a, const BiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw TheoremViolation("expected exact bivariate division");
  return *q;
}

BiPoly prim_x(const BiPoly& a) {
  UniPoly c = a.content_x();
  return c.deg() > 0 ? divide_by_y(a, c) : a;
}

// T(x, s) rewritten as a series in s.
Series to_series(const BiPoly& T, int prec) {
  Series out(prec);
  for (const auto& [e, c] : T.terms())
    if (e.second < prec) out[e.second] += UniPoly::monomial(c, e.first);
  return out;
}

BiPoly from_series(const Series& s) {
  std::map<std::pair<int, int>, Q> t;
  for (std::size_t k = 0; k < s.size(); ++k)
    for (int i = 0; i <= s[k].deg(); ++i)
      if (s[k].coeff(i) != 0) t[{i, static_cast<int>(k)}] = s[k].coeff(i);
  return BiPoly::from_terms(t);
}

Series series_mul(const Series& a, const Series& b, int prec) {
  Series r(prec);
  for (int i = 0; i < prec && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < prec && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Irreducible factors of a primitive, squarefree S with deg_x >= 1.
std::vector<BiPoly> factor_sqf(const BiPoly& S) {
  if (S.deg_x() == 1) return {S.primitive()};
  if (S.deg_y() == 0) {
    std::vector<BiPoly> out;
    for (const auto& [g, e] : factor_univariate(S.eval_y(0)).factors) {
      (void)e;
      out.push_back(BiPoly::in_x(g).primitive());
    }
    return out;
  }
  const UniPoly& lcx = S.cx().back();
  Q y0 = 0;
  UniPoly s0;
  for (long k = 0;; ++k) {
    y0 = k;
    if (lcx.eval(y0) == 0) continue;
    s0 = S.eval_y(y0);
    if (gcd(s0, s0.derivative()).deg() == 0) break;
  }
  auto fac = factor_univariate(s0).factors;
  if (fac.size() == 1) return {S.primitive()};

  const BiPoly T = S.shift_y(y0);
  const int prec = 2 * T.deg_y() + 1;
  const UniPoly l = T.cx().back();

  // Fhat = T / l in Q[x][[s]].
  std::vector<Q> linv(prec);
  linv[0] = 1 / l.coeff(0);
  for (int k = 1; k < prec; ++k) {
    Q acc = 0;
    for (int j = 1; j <= k && j <= l.deg(); ++j) acc += l.coeff(j) * linv[k - j];
    linv[k] = -acc * linv[0];
  }
  Series Ts = to_series(T, prec);
  Series Fh(prec);
  for (int k = 0; k < prec; ++k)
    for (int j = 0; j <= k; ++j)
      if (!Ts[j].is_zero() && linv[k - j] != 0) Fh[k] += Ts[j] * linv[k - j];

  const std::size_t r = fac.size();
  std::vector<UniPoly> u0(r);
  for (std::size_t i = 0; i < r; ++i) u0[i] = fac[i].first;
  std::vector<UniPoly> delta(r);
  for (std::size_t i = 0; i < r; ++i) {
    UniPoly others = UniPoly::constant(1);
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others *= u0[j];
    delta[i] = invmod(others % u0[i], u0[i]);
  }
  std::vector<Series> U(r, Series(prec));
  for (std::size_t i = 0; i < r; ++i) U[i][0] = u0[i];
  for (int k = 1; k < prec; ++k) {
    Series prod(k + 1);
    prod[0] = UniPoly::constant(1);
    for (std::size_t i = 0; i < r; ++i) prod = series_mul(prod, U[i], k + 1);
    UniPoly e = Fh[k] - prod[k];
    if (e.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) U[i][k] = (e * delta[i]) % u0[i];
  }

  // Recombination.
  std::vector<BiPoly> out;
  BiPoly cur = T;
  std::vector<Series> pool = U;
  std::size_t sz = 1;
  while (2 * sz <= pool.size()) {
    bool found = false;
    const std::size_t n = pool.size();
    std::vector<std::size_t> idx(sz);
    for (std::size_t k = 0; k < sz; ++k) idx[k] = k;
    while (true) {
      Series c(prec);
      const UniPoly lc = cur.cx().back();
      for (int k = 0; k <= lc.deg() && k < prec; ++k) c[k] = UniPoly::constant(lc.coeff(k));
      for (auto k : idx) c = series_mul(c, pool[k], prec);
      BiPoly cand = prim_x(from_series(c));
      if (cand.deg_x() >= 1 && cand.deg_y() <= cur.deg_y()) {
        if (auto q = exact_divide(cur, cand)) {
          out.push_back(cand);
          cur = *q;
          std::vector<Series> np;
          for (std::size_t k = 0, t = 0; k < n; ++k) {
            if (t < sz && idx[t] == k) {
              ++t;
              continue;
            }
            np.push_back(pool[k]);
          }
          pool = std::move(np);
          found = true;
          break;
        }
      }
      std::size_t k = sz;
      while (k > 0 && idx[k - 1] == n - sz + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++sz;
  }
  if (cur.deg_x() >= 1) out.push_back(cur);
  for (auto& f : out) f = f.shift_y(-y0).primitive();
  return out;
}

Q lead_term(const BiPoly& F) { return F.cx().back().lead(); }

}  // namespace

BiFactorization factor_bivariate(const BiPoly& F) {
  if (F.is_zero()) throw PreconditionError("factor of zero polynomial");
  BiFactorization res;
  UniPoly c = F.content_x();
  for (const auto& [g, e] : factor_univariate(c).factors)
    res.factors.emplace_back(BiPoly::in_y(g).primitive(), e);
  BiPoly a = divide_by_y(F, c);
  if (a.deg_x() >= 1) {
    // Yun in x over Q(y); a is primitive in x.
    BiPoly b = a.derivative_x();
    BiPoly g = gcd(a, b);
    BiPoly w = must_divide(a, g);
    BiPoly yv = must_divide(b, g);
    BiPoly z = yv - w.derivative_x();
    for (int i = 1; w.deg_x() >= 1; ++i) {
      BiPoly h = gcd(w, z);
      if (h.deg_x() >= 1)
        for (const auto& f : factor_sqf(h)) res.factors.emplace_back(f, i);
      w = must_divide(w, h);
      yv = must_divide(z, h);
      z = yv - w.derivative_x();
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& p, const auto& q) { return p.first < q.first || (p.first == q.first && p.second < q.second); });
  BiPoly prod = BiPoly::constant(1);
  for (const auto& [f, e] : res.factors) prod = prod * f.pow(e);
  res.unit = lead_term(F) / lead_term(prod);
  return res;
}

bool is_irreducible(const BiPoly& F) {
  if (F.total_degree() < 1) return false;
  auto f = factor_bivariate(F);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

BiPoly squarefree_part(const BiPoly& F) {
  if (F.is_zero()) return F;
  UniPoly c = F.content_x();
  BiPoly a = divide_by_y(F, c);
  BiPoly s = BiPoly::in_y(c.deg() > 0 ? squarefree_part(c) : UniPoly::constant(1));
  if (a.deg_x() >= 1) s = s * must_divide(a, gcd(a, a.derivative_x()));
  return s.primitive();
}

}  // namespace rdyn
