#pragma once

#include <random>

#include "rdyn/rdyn.hpp"

namespace support {

using namespace rdyn;

inline UniPoly z() { return UniPoly::x(); }
inline UniPoly c(long k) { return UniPoly::constant(k); }
inline RatMap zn(int n) { return RatMap(z().pow(static_cast<unsigned>(n))); }

// (z^2+1)^2 / (4z(z^2-1)), the doubling map of an elliptic curve.
inline RatMap lattes4() { return RatMap((z() * z() + c(1)).pow(2), z() * (z() * z() - c(1)) * Q(4)); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  UniPoly poly(int deg, long bound = 3) {
    std::vector<Q> cs;
    for (int i = 0; i <= deg; ++i) cs.emplace_back(integer(-bound, bound));
    while (cs.back() == 0) cs.back() = integer(1, bound);
    return UniPoly(cs);
  }

  // A map of degree exactly d.
  RatMap map(int d, long bound = 3) {
    while (true) {
      const bool poly_only = integer(0, 3) == 0;
      RatMap f = poly_only ? RatMap(poly(d, bound)) : RatMap(poly(d, bound), poly(integer(0, d), bound));
      if (f.deg() == d) return f;
    }
  }

  Orbifold orbifold(int max_points = 3) {
    Orbifold o;
    const int k = static_cast<int>(integer(0, max_points));
    for (int i = 0; i < k; ++i) {
      const long where = integer(-3, 4);
      Place p = where == 4 ? Place::infinity() : Place::rational(Q(where));
      o.set(p, static_cast<int>(integer(2, 6)));
    }
    return o;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace support
