#include "modp.hpp"

#include <stdexcept>

namespace rdyn::modp {

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly from_z(const std::vector<mpz_class>& a, const Field& F) {
  Poly r(a.size());
  mpz_class t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), a[i].get_mpz_t(), F.p);
    r[i] = t.get_ui();
  }
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 s, const Field& F) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F) {
  if (b.empty()) throw std::domain_error("modp division by zero");
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  const std::size_t db = b.size() - 1;
  q.assign(r.size() - db, 0);
  const u64 il = F.inv(b.back());
  for (std::size_t i = r.size(); i-- > db;) {
    if (!r[i]) continue;
    u64 f = F.mul(r[i], il);
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(f, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Poly rem(const Poly& a, const Poly& b, const Field& F) {
  Poly q, r;
  divmod(a, b, q, r, F);
  return r;
}

Poly monic(const Poly& a, const Field& F) {
  if (a.empty()) return a;
  return scale(a, F.inv(a.back()), F);
}

Poly gcd(Poly a, Poly b, const Field& F) {
  while (!b.empty()) {
    Poly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t, const Field& F) {
  Poly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r, F);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, F), F), t2 = sub(t0, mul(q, t1, F), F);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 il = F.inv(r0.back());
  g = scale(r0, il, F);
  s = scale(s0, il, F);
  t = scale(t0, il, F);
}

Poly derivative(const Poly& a, const Field& F) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, const Field& F) {
  Poly r{1}, b = rem(base, m, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, F), m, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b, F), m, F);
  }
  return r;
}

namespace {

// Split g, a product of distinct monic irreducibles of degree d.
void equal_degree(const Poly& g, std::size_t d, const Field& F, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  while (true) {
    Poly a(n);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() < 2) continue;
    Poly h = gcd(a, g, F);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(h, d, F, rng, out);
      Poly q, r;
      divmod(g, h, q, r, F);
      equal_degree(monic(q, F), d, F, rng, out);
      return;
    }
    Poly b = powmod(a, e, g, F);
    b = sub(b, Poly{1}, F);
    h = gcd(b, g, F);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(h, d, F, rng, out);
      Poly q, r;
      divmod(g, h, q, r, F);
      equal_degree(monic(q, F), d, F, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f0, const Field& F, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly f = monic(f0, F);
  if (f.size() <= 2) {
    if (f.size() == 2) out.push_back(f);
    return out;
  }
  Poly x{0, 1};
  Poly h = x;
  mpz_class P = F.p;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = powmod(h, P, f, F);
    Poly g = gcd(sub(h, x, F), f, F);
    if (g.size() > 1) {
      equal_degree(g, d, F, rng, out);
      Poly q, r;
      divmod(f, g, q, r, F);
      f = monic(q, F);
      h = rem(h, f, F);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(const ZPoly& a, const mpz_class& M) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), M.get_mpz_t());
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& M) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zmod(r, M);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& M) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zmod(r, M);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& M) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zmod(r, M);
}

void zdivmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r, const mpz_class& M) {
  r = zmod(a, M);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  const std::size_t db = b.size() - 1;
  q.assign(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    mpz_class f = r[i];
    if (f == 0) continue;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] -= f * b[j];
      mpz_fdiv_r(r[i - db + j].get_mpz_t(), r[i - db + j].get_mpz_t(), M.get_mpz_t());
    }
  }
  r.resize(db);
  ztrim(r);
  ztrim(q);
}

namespace {

ZPoly lift_u(const Poly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

ZPoly monic_image(const ZPoly& f, const mpz_class& M) {
  mpz_class inv;
  mpz_class l = f.back();
  if (!mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), M.get_mpz_t()))
    throw std::domain_error("leading coefficient not invertible");
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] * inv;
  return zmod(r, M);
}

}  // namespace

ZPoly hensel_lift_pair(const ZPoly& f_int, const Poly& g0, const Poly& h0, const Field& F,
                       const mpz_class& target, mpz_class& M) {
  Poly gg, s0, t0;
  xgcd(g0, h0, gg, s0, t0, F);
  if (gg.size() != 1) throw std::domain_error("hensel: factors not coprime");
  ZPoly g = lift_u(g0), h = lift_u(h0), s = lift_u(s0), t = lift_u(t0);
  mpz_class m = F.p;
  while (m < target) {
    mpz_class m2 = m * m;
    ZPoly f = monic_image(f_int, m2);
    ZPoly e = zsub(f, zmul(g, h, m2), m2);
    ZPoly q, r;
    zdivmod(zmul(s, e, m2), h, q, r, m2);
    ZPoly gs = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
    ZPoly hs = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, gs, m2), zmul(t, hs, m2), m2), ZPoly{1}, m2);
    ZPoly c, d;
    zdivmod(zmul(s, b, m2), hs, c, d, m2);
    s = zsub(s, d, m2);
    t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, gs, m2), m2);
    g = std::move(gs);
    h = std::move(hs);
    m = m2;
  }
  M = m;
  return g;
}

}  // namespace rdyn::modp
