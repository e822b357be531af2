#include <algorithm>

#include "modp.hpp"
#include "rdyn/errors.hpp"
#include "rdyn/factor.hpp"

namespace rdyn {

namespace {

using modp::Field;
using ZPoly = std::vector<Z>;

bool is_prime_small(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

UniPoly from_z(const ZPoly& p) { return UniPoly(std::vector<Q>(p.begin(), p.end())); }

// Symmetric residue of the monic Z/M polynomial times lc, then primitive.
UniPoly candidate(const ZPoly& g, const Z& lc, const Z& M) {
  ZPoly c(g.size());
  Z half = M / 2;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Z v = g[i] * lc;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    if (v > half) v -= M;
    c[i] = v;
  }
  return from_z(c).primitive();
}

// Irreducible factors (primitive, integral) of a primitive squarefree f.
std::vector<UniPoly> zassenhaus(const UniPoly& fq) {
  const int n = fq.deg();
  if (n <= 1) return {fq};
  ZPoly f = fq.to_integer();
  const Z lc = f.back();

  std::mt19937_64 rng(0x5eed1234abcdULL);
  Field best{0};
  std::vector<modp::Poly> best_fac;
  int good = 0;
  for (unsigned long p = 5; good < 5 && p < 100000; p += 2) {
    if (!is_prime_small(p)) continue;
    Field F{p};
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    modp::Poly fp = modp::from_z(f, F);
    if (modp::gcd(fp, modp::derivative(fp, F), F).size() != 1) continue;
    auto fac = modp::factor_squarefree(fp, F, rng);
    ++good;
    if (best.p == 0 || fac.size() < best_fac.size()) {
      best = F;
      best_fac = std::move(fac);
    }
    if (best_fac.size() == 1) break;
  }
  if (best.p == 0) throw Inconclusive("no suitable prime for factorization");
  if (best_fac.size() == 1) return {fq};

  // Coefficient bound for factors of lc * f.
  Z norm1 = 0;
  for (const auto& c : f) norm1 += abs(c);
  Z B = norm1 * abs(lc);
  mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), static_cast<unsigned long>(n));
  Z target = 2 * B + 1;

  // Lift one factor at a time against the product of the remaining ones.
  std::vector<ZPoly> lifted;
  Z M = 0;
  ZPoly cur = f;
  for (std::size_t i = 0; i + 1 < best_fac.size(); ++i) {
    modp::Poly rest{1};
    for (std::size_t j = i + 1; j < best_fac.size(); ++j) rest = modp::mul(rest, best_fac[j], best);
    Z Mi;
    ZPoly g = modp::hensel_lift_pair(cur, best_fac[i], rest, best, target, Mi);
    M = Mi;
    lifted.push_back(g);
    // cur := monic(cur) / g mod M
    ZPoly cm(cur.size());
    Z inv;
    mpz_invert(inv.get_mpz_t(), cur.back().get_mpz_t(), M.get_mpz_t());
    for (std::size_t k = 0; k < cur.size(); ++k) cm[k] = cur[k] * inv;
    cm = modp::zmod(cm, M);
    ZPoly q, r;
    modp::zdivmod(cm, g, q, r, M);
    cur = q;
  }
  lifted.push_back(modp::zmod(cur, M));

  // Recombination.
  std::vector<UniPoly> out;
  UniPoly rem = fq;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    const std::size_t r = pool.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t k = 0; k < s; ++k) idx[k] = k;
    while (true) {
      ZPoly prod{1};
      for (auto k : idx) prod = modp::zmul(prod, pool[k], M);
      Z lr = rem.to_integer().back();
      UniPoly cand = candidate(prod, lr, M);
      if (cand.deg() >= 1 && divides(cand, rem)) {
        out.push_back(cand);
        rem = (rem / cand).primitive();
        std::vector<ZPoly> np;
        for (std::size_t k = 0, t = 0; k < r; ++k) {
          if (t < s && idx[t] == k) {
            ++t;
            continue;
          }
          np.push_back(pool[k]);
        }
        pool = std::move(np);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rem.deg() >= 1) out.push_back(rem);
  return out;
}

}  // namespace

UniFactorization factor_univariate(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("factor of zero polynomial");
  UniFactorization res;
  res.unit = p.lead();
  if (p.deg() == 0) return res;
  for (const auto& [s, e] : squarefree_decomposition(p)) {
    if (s.deg() < 1) continue;
    int v = 0;
    while (s.coeff(v) == 0) ++v;
    if (v > 0) res.factors.emplace_back(UniPoly::x(), e);
    UniPoly core = v > 0 ? UniPoly(std::vector<Q>(s.coeffs().begin() + v, s.coeffs().end())) : s;
    if (core.deg() < 1) continue;
    for (const auto& g : zassenhaus(core.primitive())) res.factors.emplace_back(g.monic(), e);
  }
  std::sort(res.factors.begin(), res.factors.end());
  return res;
}

bool is_irreducible(const UniPoly& p) {
  if (p.deg() < 1) return false;
  auto f = factor_univariate(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace rdyn
