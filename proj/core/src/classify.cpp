#include "rdyn/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "modp.hpp"
#include "rdyn/errors.hpp"
#include "rdyn/mpoly.hpp"
#include "rdyn/series.hpp"

namespace rdyn {

namespace {

RatMap monomial_map(int n) {
  if (n >= 0) return RatMap(UniPoly::monomial(1, n));
  return RatMap(UniPoly::constant(1), UniPoly::monomial(1, -n));
}

RatMap scale_map(const Q& l) { return RatMap::mobius(l, 0, 0, 1); }

// Third rational point distinct from the given ones.
P1 spare_point(const std::vector<P1>& used) {
  for (long k = 0;; ++k) {
    P1 p = P1::finite(Q(k % 2 == 0 ? k / 2 : (k + 1) / 2));
    if (k % 2 == 0) p.v = -p.v;
    if (std::find(used.begin(), used.end(), p) == used.end()) return p;
  }
}

bool rational_sqrt(const Q& r, Q& out) {
  if (r < 0) return false;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
    return false;
  Z a, b;
  mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
  out = Q(a, b);
  out.canonicalize();
  return true;
}

Q qpow(const Q& a, int e) {
  Q r = 1;
  Q b = e >= 0 ? a : Q(1 / a);
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

// Mobius sending a1, a2, a3 to 0, 1, infinity.
RatMap to_standard(const P1& a1, const P1& a2, const P1& a3) {
  if (a1.inf) return RatMap::mobius(0, a2.v - a3.v, 1, -a3.v);
  if (a2.inf) return RatMap::mobius(1, -a1.v, 1, -a3.v);
  if (a3.inf) return RatMap::mobius(1, -a1.v, 0, a2.v - a1.v);
  Q k = (a2.v - a3.v) / (a2.v - a1.v);
  return RatMap::mobius(k, -k * a1.v, 1, -a3.v);
}


// Reduction of a p-integral rational, or nullopt when p divides the
// denominator.
std::optional<modp::u64> reduce(const Q& a, const modp::Field& F) {
  if (mpz_fdiv_ui(a.get_den_mpz_t(), F.p) == 0) return std::nullopt;
  const modp::u64 n = mpz_fdiv_ui(a.get_num_mpz_t(), F.p), d = mpz_fdiv_ui(a.get_den_mpz_t(), F.p);
  return F.mul(n, F.inv(d));
}

std::optional<modp::Poly> reduce(const UniPoly& f, const modp::Field& F) {
  modp::Poly r(f.deg() + 1);
  for (int i = 0; i <= f.deg(); ++i) {
    auto c = reduce(f.coeff(i), F);
    if (!c) return std::nullopt;
    r[i] = *c;
  }
  modp::trim(r);
  return r;
}

// False only if A^L(x) != x for every L <= max_period. Iterates the
// homogeneous pair of x in F_p[z]/(m), m the minpoly of x: an identity
// m | n_L - z d_L over Z_(p)[z] survives reduction, so a nonzero residue
// refutes periodicity without the height growth of exact images.
bool may_be_periodic(const RatMap& A, const Place& x, int max_period) {
  if (max_period < 1) return false;
  static const modp::u64 primes[] = {2147483647, 2147483629, 2147483587, 2147483579, 2147483563};
  const int D = A.deg();
  for (modp::u64 p : primes) {
    const modp::Field F{p};
    const UniPoly m = x.is_infinity() ? UniPoly::x() : x.minpoly();
    auto mb = reduce(m, F);
    std::vector<std::optional<modp::u64>> N(D + 1), Dn(D + 1);
    bool ok = mb && static_cast<int>(mb->size()) == m.deg() + 1;
    for (int i = 0; ok && i <= D; ++i) {
      N[i] = reduce(A.num().coeff(i), F);
      Dn[i] = reduce(A.den().coeff(i), F);
      ok = N[i] && Dn[i];
    }
    if (!ok) continue;
    auto modm = [&](const modp::Poly& a) { return modp::rem(a, *mb, F); };
    modp::Poly a = x.is_infinity() ? modp::Poly{1} : modm(modp::Poly{0, 1});
    modp::Poly b = x.is_infinity() ? modp::Poly{} : modp::Poly{1};
    const modp::Poly a0 = a, b0 = b;
    for (int L = 1; L <= max_period; ++L) {
      // Homogeneous Horner: sum c_i a^i b^(D-i).
      std::vector<modp::Poly> bp{modp::Poly{1}};
      for (int i = 1; i <= D; ++i) bp.push_back(modm(modp::mul(bp.back(), b, F)));
      modp::Poly na{(*N[D])}, da{(*Dn[D])};
      modp::trim(na);
      modp::trim(da);
      for (int i = D - 1; i >= 0; --i) {
        na = modm(modp::add(modp::mul(na, a, F), modp::scale(bp[D - i], *N[i], F), F));
        da = modm(modp::add(modp::mul(da, a, F), modp::scale(bp[D - i], *Dn[i], F), F));
      }
      a = na;
      b = da;
      if (modm(modp::sub(modp::mul(a, b0, F), modp::mul(a0, b, F), F)).empty()) return true;
    }
    return false;
  }
  return true;
}

}  // namespace

RatMap mobius_3pt(const P1& a1, const P1& a2, const P1& a3, const P1& b1, const P1& b2,
                  const P1& b3) {
  if (a1 == a2 || a1 == a3 || a2 == a3 || b1 == b2 || b1 == b3 || b2 == b3)
    throw PreconditionError("Mobius interpolation needs distinct points");
  return compose(to_standard(b1, b2, b3).inverse(), to_standard(a1, a2, a3));
}

Conjugacy detect_power_conjugacy(const RatMap& A) {
  const int n = A.deg();
  if (n < 2) throw PreconditionError("map of degree at least 2 required");
  std::vector<Place> T;
  for (const auto& c : critical_points(A))
    if (local_degree(A, c) == n) T.push_back(c);
  Conjugacy out;
  if (geometric_count(T) != 2) return out;
  for (const auto& p : T)
    if (std::find(T.begin(), T.end(), image_place(A, p)) == T.end()) return out;
  out.n = n;
  if (T.size() == 1) {
    out.status = Witness::ExtensionNeeded;
    out.sign = image_place(A, T[0]) == T[0] ? 1 : -1;
    return out;
  }
  const P1 e1 = T[0].point(), e2 = T[1].point();
  const bool fixed = image_place(A, T[0]) == T[0];
  out.sign = fixed ? 1 : -1;
  RatMap mu = mobius_3pt(e1, spare_point({e1, e2}), e2, P1::finite(0), P1::finite(1), P1::infinity());
  RatMap B = compose(compose(mu, A), mu.inverse());
  Q c = fixed ? B.num().lead() : B.num().coeff(0);
  UniPoly eq = fixed ? UniPoly::monomial(1, n - 1) - UniPoly::constant(c)
                     : UniPoly::monomial(1, n + 1) - UniPoly::constant(1 / c);
  auto roots = rational_roots(eq);
  if (roots.empty()) {
    out.status = Witness::ExtensionNeeded;
    return out;
  }
  Q lam = roots.back();
  RatMap m = compose(scale_map(lam), mu);
  RatMap target = monomial_map(fixed ? n : -n);
  if (compose(m, A) != compose(target, m)) throw TheoremViolation("power conjugacy failed to verify");
  out.status = Witness::Rational;
  out.mu = m;
  return out;
}

Conjugacy detect_chebyshev_conjugacy(const RatMap& A) {
  const int n = A.deg();
  if (n < 2) throw PreconditionError("map of degree at least 2 required");
  Conjugacy out;
  if (detect_power_conjugacy(A).status != Witness::None) return out;
  std::vector<Place> E;
  for (const auto& c : critical_points(A))
    if (local_degree(A, c) == n && image_place(A, c) == c) E.push_back(c);
  if (E.size() != 1 || !E[0].is_rational()) return out;
  const P1 e = E[0].point();
  RatMap mu0 = e.inf ? RatMap::identity() : RatMap::mobius(0, 1, 1, -e.v);
  RatMap P = compose(compose(mu0, A), mu0.inverse());
  if (!P.is_polynomial()) return out;
  const Q a = P.num().lead();
  const Q beta = P.num().coeff(n - 1) / (Q(n) * a);
  RatMap tau = RatMap::mobius(1, beta, 0, 1);
  RatMap P1m = compose(compose(tau, P), tau.inverse());
  const UniPoly& p1 = P1m.num();
  const UniPoly Tn = chebyshev(n).num();
  const Q tn = Tn.lead(), tp = Tn.coeff(n - 2);
  const Q c = p1.coeff(n - 2);
  if (c == 0) return out;
  const Q r = a * tp / (c * tn);
  Q alpha;
  if (rational_sqrt(r, alpha)) {
    for (int s : {1, -1}) {
      for (const Q& al : {alpha, Q(-alpha)}) {
        if (a * qpow(al, 1 - n) / tn != s) continue;
        RatMap sigma = scale_map(al);
        RatMap mu = compose(sigma, compose(tau, mu0));
        if (compose(mu, A) == compose(RatMap(Tn * Q(s)), mu)) {
          out.status = Witness::Rational;
          out.mu = mu;
          out.n = n;
          out.sign = s;
          return out;
        }
      }
    }
    return out;
  }
  if (n % 2 == 0 || r <= 0) return out;
  // Odd n: alpha enters only through alpha^2 = r.
  const Q s = a * qpow(r, (1 - n) / 2) / tn;
  if (s != 1 && s != -1) return out;
  for (int k = 0; k <= n; ++k) {
    Q want = s * Tn.coeff(k);
    Q have = (k % 2 == 1) ? p1.coeff(k) * qpow(r, (1 - k) / 2) : p1.coeff(k);
    if (k % 2 == 0 && have != 0) return out;
    if (k % 2 == 1 && have != want) return out;
  }
  out.status = Witness::ExtensionNeeded;
  out.n = n;
  out.sign = s == 1 ? 1 : -1;
  return out;
}

std::optional<std::vector<Place>> postcritical_set(const RatMap& A, int cap) {
  std::set<Place> seen;
  std::vector<Place> todo = critical_values(A);
  int geo = 0;
  while (!todo.empty()) {
    Place p = todo.back();
    todo.pop_back();
    if (!seen.insert(p).second) continue;
    geo += p.degree();
    if (geo > cap) return std::nullopt;
    todo.push_back(image_place(A, p));
  }
  return std::vector<Place>(seen.begin(), seen.end());
}

std::optional<Orbifold> is_lattes(const RatMap& A) {
  if (A.deg() < 2) throw PreconditionError("map of degree at least 2 required");
  auto P = postcritical_set(A, 4);
  if (!P) return std::nullopt;
  static const std::vector<std::vector<int>> lists = {{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
  static const int vals[] = {1, 2, 3, 4, 6};
  const std::size_t m = P->size();
  std::vector<int> choice(m, 0);
  while (true) {
    Orbifold o;
    for (std::size_t i = 0; i < m; ++i) o.set((*P)[i], vals[choice[i]]);
    auto sig = o.signature();
    if (std::find(lists.begin(), lists.end(), sig) != lists.end() && is_covering(A, o, o)) return o;
    std::size_t i = 0;
    while (i < m && ++choice[i] == 5) choice[i++] = 0;
    if (i == m) break;
  }
  return std::nullopt;
}

Orbifold maximal_orbifold(const RatMap& A) {
  if (A.deg() < 2) throw PreconditionError("map of degree at least 2 required");
  if (detect_power_conjugacy(A).status != Witness::None)
    throw NotDefined("maximal orbifold is not defined for maps conjugate to z^n or z^-n");
  if (detect_chebyshev_conjugacy(A).status != Witness::None)
    throw NotDefined("maximal orbifold is not defined for maps conjugate to +-T_n");

  std::map<Place, std::vector<std::pair<Place, int>>> pre_cache;
  auto preimages = [&](const Place& q) -> const std::vector<std::pair<Place, int>>& {
    auto it = pre_cache.find(q);
    if (it == pre_cache.end()) it = pre_cache.emplace(q, preimage_places(A, q)).first;
    return it->second;
  };
  auto pull = [&](const Orbifold& o) {
    Orbifold r;
    for (const auto& [q, v] : o.ram())
      for (const auto& [p, e] : preimages(q)) r.set(p, v / std::gcd(e, v));
    return r;
  };
  std::map<Place, Place> img;
  auto image = [&](const Place& p) {
    auto it = img.find(p);
    if (it == img.end()) it = img.emplace(p, image_place(A, p)).first;
    return it->second;
  };

  // Support points are A^i(c), c critical, 1 <= i <= 4; periodic ones form
  // place cycles of at most 4 geometric points.
  std::set<Place> cand;
  for (const auto& c : critical_points(A)) {
    Place x = c;
    for (int i = 1; i <= 4; ++i) {
      x = image(x);
      cand.insert(x);
    }
  }
  std::vector<std::vector<Place>> cycles;
  std::set<Place> on_cycle;
  for (const auto& x : cand) {
    if (on_cycle.count(x)) continue;
    if (!may_be_periodic(A, x, 4 / x.degree())) continue;
    std::vector<Place> cyc{x};
    Place y = image(x);
    int geo = x.degree();
    while (!(y == x) && geo <= 4 && cyc.size() <= 4) {
      cyc.push_back(y);
      geo += y.degree();
      y = image(y);
    }
    if (y == x && geo <= 4) {
      for (const auto& p : cyc) on_cycle.insert(p);
      cycles.push_back(cyc);
    }
  }

  // Fixed points generated by a single cycle with constant value k.
  std::vector<std::vector<Orbifold>> options(cycles.size());
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    int degs = 1;
    for (const auto& p : cycles[ci]) degs = std::lcm(degs, local_degree(A, p));
    for (int k = 2; k <= 60; ++k) {
      if (std::gcd(k, degs) != 1) continue;
      Orbifold o;
      for (const auto& p : cycles[ci]) o.set(p, k);
      bool ok = true;
      while (true) {
        Orbifold next = pull(o);
        if (geometric_count(next.support()) > 4) {
          ok = false;
          break;
        }
        if (next == o) break;
        o = next;
      }
      if (ok) options[ci].push_back(o);
    }
  }

  // Pullback commutes with lcm-joins, so joins of fixed points are fixed.
  std::vector<Orbifold> good;
  std::function<void(std::size_t, const Orbifold&)> dfs = [&](std::size_t ci, const Orbifold& acc) {
    if (ci == cycles.size()) {
      if (!acc.is_trivial() && acc.is_good()) good.push_back(acc);
      return;
    }
    dfs(ci + 1, acc);
    for (const auto& o : options[ci]) {
      Orbifold j = lcm_join(acc, o);
      if (geometric_count(j.support()) > 4) continue;
      dfs(ci + 1, j);
    }
  };
  dfs(0, Orbifold());
  Orbifold O0;
  for (const auto& o : good) O0 = lcm_join(O0, o);
  if (!O0.is_trivial() && (pull(O0) != O0 || !O0.is_good()))
    throw TheoremViolation("join of invariant orbifolds is not invariant: " + O0.str());
  return O0;
}

RatMap theta(const Orbifold& o) {
  const auto sig = o.signature();
  if (!o.is_good() || chi(o) <= 0) throw PreconditionError("theta needs a good orbifold with positive Euler characteristic");
  std::vector<std::pair<int, P1>> pts;
  for (const auto& [p, v] : o.ram()) {
    if (!p.is_rational()) throw NonRationalPosition("singular place " + p.str() + " is not rational");
    pts.emplace_back(v, p.point());
  }
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const UniPoly z = UniPoly::x();
  if (sig.size() == 2) {
    const P1 a = pts[0].second, b = pts[1].second;
    RatMap mu = mobius_3pt(P1::finite(0), P1::finite(1), P1::infinity(), a, spare_point({a, b}), b);
    return compose(mu, monomial_map(sig[0]));
  }
  if (sig.size() != 3) throw PreconditionError("signature outside the spherical list");
  RatMap t0;
  P1 s0, s1, s2;  // singular values of t0 in the order of pts
  if (sig[0] == 2 && sig[1] == 2) {
    const int n = sig[2];
    t0 = RatMap(UniPoly::monomial(1, 2 * n) + UniPoly::constant(1), UniPoly::monomial(2, n));
    s0 = P1::finite(-1);
    s1 = P1::finite(1);
    s2 = P1::infinity();
  } else if (sig == std::vector<int>{2, 3, 3}) {
    UniPoly z3 = z.pow(3);
    t0 = RatMap(z3 * (z3 + UniPoly::constant(8)).pow(3), (z3 - UniPoly::constant(1)).pow(3) * Q(64));
    s0 = P1::finite(1);
    s1 = P1::finite(0);
    s2 = P1::infinity();
  } else if (sig == std::vector<int>{2, 3, 4}) {
    UniPoly t = z * (z.pow(4) - UniPoly::constant(1));
    UniPoly W = z.pow(8) + UniPoly::monomial(14, 4) + UniPoly::constant(1);
    t0 = RatMap(W.pow(3), t.pow(4) * Q(108));
    s0 = P1::finite(1);
    s1 = P1::finite(0);
    s2 = P1::infinity();
  } else if (sig == std::vector<int>{2, 3, 5}) {
    UniPoly f = z * (z.pow(10) + UniPoly::monomial(11, 5) - UniPoly::constant(1));
    UniPoly H = -(z.pow(20) + UniPoly::constant(1)) + (z.pow(15) - z.pow(5)) * Q(228) -
                UniPoly::monomial(494, 10);
    t0 = RatMap(H.pow(3), f.pow(5) * Q(1728));
    s0 = P1::finite(1);
    s1 = P1::finite(0);
    s2 = P1::infinity();
  } else {
    throw PreconditionError("signature outside the spherical list");
  }
  RatMap mu = mobius_3pt(s0, s1, s2, pts[0].second, pts[1].second, pts[2].second);
  return compose(mu, t0);
}

namespace {

using ZP = std::vector<MPoly>;  // polynomial in z, coefficients in Q[a,b,c,w]

ZP zp_mul(const ZP& a, const ZP& b, int nv) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, MPoly(nv));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

ZP zp_add(const ZP& a, const ZP& b, int nv) {
  ZP r(std::max(a.size(), b.size()), MPoly(nv));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

ZP zp_const(const UniPoly& p, int nv) {
  ZP r;
  for (const auto& c : p.coeffs()) r.push_back(MPoly::constant(nv, c));
  return r;
}

ZP zp_scale(const ZP& a, const MPoly& s, int nv) {
  ZP r;
  for (const auto& c : a) r.push_back(c * s);
  (void)nv;
  return r;
}

// Sum_i p_i mn^i md^(d-i).
ZP zp_hom(const UniPoly& p, int d, const ZP& mn, const ZP& md, int nv) {
  std::vector<ZP> pn(d + 1), pd(d + 1);
  pn[0] = pd[0] = ZP{MPoly::constant(nv, 1)};
  for (int i = 1; i <= d; ++i) {
    pn[i] = zp_mul(pn[i - 1], mn, nv);
    pd[i] = zp_mul(pd[i - 1], md, nv);
  }
  ZP r;
  for (int i = 0; i <= p.deg(); ++i)
    if (p.coeff(i) != 0)
      r = zp_add(r, zp_scale(zp_mul(pn[i], pd[d - i], nv), MPoly::constant(nv, p.coeff(i)), nv), nv);
  return r;
}

std::vector<RatMap> conjugators_groebner(const RatMap& B1, const RatMap& B2) {
  const int nv = 4;
  const MPoly a = MPoly::var(nv, 0), b = MPoly::var(nv, 1), c = MPoly::var(nv, 2),
              w = MPoly::var(nv, 3), one = MPoly::constant(nv, 1);
  const int m = B2.deg();
  std::vector<RatMap> out;
  for (int chart = 0; chart < 2; ++chart) {
    ZP mn{b, a};
    ZP md = chart == 0 ? ZP{one, c} : ZP{MPoly(nv), one};
    MPoly det = chart == 0 ? a - b * c : MPoly(nv) - b;
    ZP b1n = zp_const(B1.num(), nv), b1d = zp_const(B1.den(), nv);
    ZP Ln = zp_add(zp_scale(b1n, a, nv), zp_scale(b1d, b, nv), nv);
    ZP Ld = chart == 0 ? zp_add(zp_scale(b1n, c, nv), b1d, nv) : b1n;
    ZP Rn = zp_hom(B2.num(), m, mn, md, nv), Rd = zp_hom(B2.den(), m, mn, md, nv);
    ZP lhs = zp_mul(Ln, Rd, nv), rhs = zp_mul(Ld, Rn, nv);
    std::vector<MPoly> eqs;
    for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
      MPoly e = (i < lhs.size() ? lhs[i] : MPoly(nv)) - (i < rhs.size() ? rhs[i] : MPoly(nv));
      if (!e.is_zero()) eqs.push_back(e);
    }
    eqs.push_back(w * det - one);
    if (chart == 1) eqs.push_back(c);
    for (const auto& s : solve_rational(eqs)) {
      RatMap mu = chart == 0 ? RatMap::mobius(s[0], s[1], s[2], 1) : RatMap::mobius(s[0], s[1], 1, 0);
      if (compose(mu, B1) == compose(B2, mu)) out.push_back(mu);
    }
  }
  return out;
}

}  // namespace

std::vector<RatMap> conjugators(const RatMap& B1, const RatMap& B2) {
  std::vector<RatMap> out;
  const int n = B1.deg();
  if (n != B2.deg() || n < 1) return out;
  if (n >= 2 && B1.is_polynomial() && B2.is_polynomial() &&
      detect_power_conjugacy(B1).status == Witness::None &&
      detect_power_conjugacy(B2).status == Witness::None) {
    const Q l1 = B1.num().lead(), l2 = B2.num().lead();
    const Q c1 = B1.num().coeff(n - 1), c2 = B2.num().coeff(n - 1);
    for (const Q& a : rational_roots(UniPoly::monomial(1, n - 1) - UniPoly::constant(l1 / l2))) {
      if (a == 0) continue;
      Q an = qpow(a, n - 1);
      Q b = (a * c1 - c2 * an) / (l2 * Q(n) * an);
      RatMap mu = RatMap::mobius(a, b, 0, 1);
      if (compose(mu, B1) == compose(B2, mu)) out.push_back(mu);
    }
  } else {
    out = conjugators_groebner(B1, B2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatMap> mobius_left_stabilizer(const RatMap& B) {
  if (B.deg() < 1) throw PreconditionError("nonconstant map required");
  std::vector<RatMap> out;
  for (const auto& r : ratmap_roots(B, B))
    if (r.deg() == 1) out.push_back(r);
  return out;
}

std::vector<RatMap> mobius_commutant(const RatMap& B) {
  if (B.deg() < 2) throw PreconditionError("map of degree at least 2 required");
  return conjugators(B, B);
}

std::string tag_name(SpecialTag t) {
  switch (t) {
    case SpecialTag::PowerConjugate: return "PowerConjugate";
    case SpecialTag::ChebyshevConjugate: return "ChebyshevConjugate";
    case SpecialTag::Lattes: return "Lattes";
    case SpecialTag::GeneralizedLattes: return "GeneralizedLattes";
    case SpecialTag::NonSpecialNonGL: return "NonSpecialNonGL";
  }
  return "?";
}

SpecialClass classify(const RatMap& A) {
  if (A.deg() < 2) throw PreconditionError("map of degree at least 2 required");
  SpecialClass sc;
  for (int pass = 0; pass < 2; ++pass) {
    Conjugacy c = pass == 0 ? detect_power_conjugacy(A) : detect_chebyshev_conjugacy(A);
    if (c.status == Witness::None) continue;
    sc.tag = pass == 0 ? SpecialTag::PowerConjugate : SpecialTag::ChebyshevConjugate;
    sc.n = c.n;
    sc.sign = c.sign;
    sc.over_extension = c.status == Witness::ExtensionNeeded;
    sc.mu = c.mu;
    return sc;
  }
  if (auto o = is_lattes(A)) {
    sc.tag = SpecialTag::Lattes;
    sc.orbifold = o;
    return sc;
  }
  Orbifold o0 = maximal_orbifold(A);
  if (!o0.is_trivial()) {
    sc.tag = SpecialTag::GeneralizedLattes;
    sc.orbifold = o0;
  }
  return sc;
}

}  // namespace rdyn
