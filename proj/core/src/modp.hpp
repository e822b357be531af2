#pragma once

// Internal: polynomial arithmetic over Z/p (p odd, below 2^31) and over
// Z/p^k with GMP integers. Coefficients lowest degree first, trimmed.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace rdyn::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(Poly& a);
Poly from_z(const std::vector<mpz_class>& a, const Field& F);
Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly scale(const Poly& a, u64 s, const Field& F);
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F);
Poly rem(const Poly& a, const Poly& b, const Field& F);
Poly monic(const Poly& a, const Field& F);
Poly gcd(Poly a, Poly b, const Field& F);
void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t, const Field& F);
Poly derivative(const Poly& a, const Field& F);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, const Field& F);

// Monic irreducible factors of a monic squarefree polynomial.
std::vector<Poly> factor_squarefree(const Poly& f, const Field& F, std::mt19937_64& rng);

// Z/M arithmetic, M = p^k. Polys are vectors of mpz in [0, M).
using ZPoly = std::vector<mpz_class>;
void ztrim(ZPoly& a);
ZPoly zmod(const ZPoly& a, const mpz_class& M);
ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& M);
ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& M);
ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& M);
// Division by a monic b modulo M.
void zdivmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r, const mpz_class& M);

// Given monic f over Z/M0... lifts f = g*h (mod p) to modulus >= target.
// f is the monic image of the integer polynomial (lc inverted mod target).
// Returns lifted monic g; modulus actually reached is written to M.
ZPoly hensel_lift_pair(const ZPoly& f_int, const Poly& g, const Poly& h, const Field& F,
                       const mpz_class& target, mpz_class& M);

}  // namespace rdyn::modp
