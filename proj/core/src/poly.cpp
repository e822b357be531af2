#include "rdyn/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rdyn/errors.hpp"
#include "rdyn/factor.hpp"

namespace rdyn {

namespace {

const Q& zero_q() {
  static const Q z(0);
  return z;
}

using ZPoly = std::vector<Z>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Z zcontent(const ZPoly& p) {
  Z g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zprimitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  Z g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b, over Z.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Z& lb = b.back();
  ztrim(a);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    Z la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    ztrim(a);
  }
  return a;
}

ZPoly to_zpoly(const UniPoly& p) { return p.to_integer(); }

UniPoly from_zpoly(const ZPoly& p) {
  std::vector<Q> c(p.begin(), p.end());
  return UniPoly(std::move(c));
}

}  // namespace

UniPoly::UniPoly(std::vector<Q> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

UniPoly::UniPoly(std::initializer_list<Q> coeffs) : c_(coeffs) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

UniPoly UniPoly::constant(const Q& c) { return UniPoly(std::vector<Q>{c}); }

UniPoly UniPoly::monomial(const Q& c, int k) {
  if (c == 0) return UniPoly();
  std::vector<Q> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::x() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Q UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

const Q& UniPoly::lead() const { return c_.empty() ? zero_q() : c_.back(); }

Q UniPoly::eval(const Q& t) const {
  Q r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Q> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  UniPoly r = *this;
  Q l = lead();
  for (auto& q : r.c_) q /= l;
  return r;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= g;
    r += UniPoly::constant(*it);
  }
  return r;
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly r = UniPoly::constant(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

UniPoly UniPoly::shift(const Q& a) const {
  // Horner with (z + a).
  UniPoly lin{a, Q(1)};
  return compose(lin);
}

UniPoly UniPoly::reversed(int n) const {
  std::vector<Q> v(n + 1);
  for (int i = 0; i <= deg(); ++i) v[n - i] = c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::truncate(int n) const {
  if (n >= static_cast<int>(c_.size())) return *this;
  return UniPoly(std::vector<Q>(c_.begin(), c_.begin() + std::max(n, 0)));
}

UniPoly UniPoly::mul_xk(int k) const {
  if (c_.empty()) return *this;
  std::vector<Q> v(k, Q(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return UniPoly(std::move(v));
}

Q UniPoly::content() const {
  if (c_.empty()) return 1;
  Z num = 0, den = 1;
  for (const auto& q : c_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  Q r(num, den);
  r.canonicalize();
  if (lead() < 0) r = -r;
  return r;
}

UniPoly UniPoly::primitive() const {
  if (c_.empty()) return *this;
  UniPoly r = *this;
  Q ct = content();
  for (auto& q : r.c_) q /= ct;
  return r;
}

std::vector<Z> UniPoly::to_integer() const {
  UniPoly p = primitive();
  std::vector<Z> out;
  out.reserve(p.c_.size());
  for (const auto& q : p.c_) out.push_back(q.get_num());
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UniPoly();
  std::vector<Q> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Q& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    const Q& q = c_[i];
    if (q == 0) continue;
    Q a = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.deg() < b.deg()) return {UniPoly(), a};
  std::vector<Q> r = a.coeffs();
  std::vector<Q> q(a.deg() - b.deg() + 1);
  const auto& bc = b.coeffs();
  const int db = b.deg();
  const Q lb = b.lead();
  for (int i = a.deg(); i >= db; --i) {
    if (r[i] == 0) continue;
    Q f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

bool divides(const UniPoly& d, const UniPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.deg() == 0 || b.deg() == 0) return UniPoly::constant(1);
  ZPoly x = to_zpoly(a), y = to_zpoly(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = zprem(x, y);
    zprimitive(r);
    x = std::move(y);
    y = std::move(r);
    if (y.size() == 1) return UniPoly::constant(1);
  }
  return from_zpoly(x).monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  return ((a * b) / gcd(a, b)).monic();
}

XGcd xgcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b, s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Q l = r0.lead();
  Q inv = 1 / l;
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly invmod(const UniPoly& a, const UniPoly& m) {
  XGcd e = xgcd(a % m, m);
  if (e.g.deg() != 0) throw PreconditionError("invmod: not invertible");
  return e.s % m;
}

Q resultant(const UniPoly& a0, const UniPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  UniPoly a = a0, b = b0;
  Q res = 1;
  while (true) {
    const int m = a.deg(), n = b.deg();
    if (n == 0) {
      Q p = 1;
      for (int i = 0; i < m; ++i) p *= b.lead();
      return res * p;
    }
    if (m == 0) {
      Q p = 1;
      for (int i = 0; i < n; ++i) p *= a.lead();
      return res * p;
    }
    UniPoly r = a % b;
    if (r.is_zero()) return 0;
    if ((m * n) % 2) res = -res;
    const int e = m - r.deg();
    for (int i = 0; i < e; ++i) res *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

Q discriminant(const UniPoly& a) {
  const int n = a.deg();
  if (n < 1) return 0;
  Q r = resultant(a, a.derivative()) / a.lead();
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.deg() < 1) return out;
  UniPoly dp = p.derivative();
  UniPoly b = gcd(p, dp);
  UniPoly c = p / b;
  UniPoly d = dp / b - c.derivative();
  int i = 1;
  while (c.deg() > 0) {
    UniPoly a = gcd(c, d);
    if (a.deg() > 0) out.emplace_back(a.monic(), i);
    c = c / a;
    d = d / a - c.derivative();
    ++i;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.deg() < 1) return UniPoly::constant(1);
  return (p / gcd(p, p.derivative())).monic();
}

std::vector<Q> rational_roots(const UniPoly& p) {
  std::vector<Q> roots;
  if (p.deg() < 1) return roots;
  for (const auto& [f, e] : factor_univariate(p).factors) {
    (void)e;
    if (f.deg() == 1) roots.push_back(-f.coeff(0) / f.coeff(1));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int valuation(const UniPoly& p, const UniPoly& g) {
  if (p.is_zero()) throw PreconditionError("valuation of zero polynomial");
  int v = 0;
  UniPoly cur = p;
  while (true) {
    auto [q, r] = divmod(cur, g);
    if (!r.is_zero()) return v;
    cur = std::move(q);
    ++v;
  }
}

UniPoly interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys) {
  const std::size_t n = xs.size();
  std::vector<Q> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly r;
  for (std::size_t k = n; k-- > 0;) {
    r *= UniPoly{-xs[k], Q(1)};
    r += UniPoly::constant(dd[k]);
  }
  return r;
}

int64_t to_int64(const Z& z) {
  if (!z.fits_slong_p()) throw PreconditionError("integer out of range");
  return z.get_si();
}

}  // namespace rdyn
