#pragma once

// Genus of the fiber product Y1(x) = Y2(y) from the pairing count
//   2g - 2 = -2 m n + sum over branch values v, over pairs of points
//            (p over v for Y1 with multiplicity a, q for Y2 with b),
//            of (a b - gcd(a, b)),
// with fibers read off factorizations of norms. Independent of the place
// machinery the library uses.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "rdyn/rdyn.hpp"

namespace oracle {

using namespace rdyn;

// (multiplicity, points) over one geometric point of the place v = root of
// mu, or over infinity when mu is zero.
inline std::vector<std::pair<int, int>> fiber(const RatMap& Y, const UniPoly& mu) {
  std::vector<std::pair<int, int>> out;
  const int m = Y.deg();
  UniPoly P;
  int k = 1;
  if (mu.is_zero()) {
    P = Y.den();
  } else if (mu.deg() == 1) {
    const Q v0 = -mu.coeff(0) / mu.coeff(1);
    P = Y.num() - Y.den() * v0;
  } else {
    k = mu.deg();
    BiPoly F = BiPoly::in_x(Y.num()) - BiPoly::y() * BiPoly::in_x(Y.den());
    P = resultant_y(F, BiPoly::in_y(mu));
  }
  if (const int deficit = m - P.deg() / k; deficit > 0) out.push_back({deficit, 1});
  for (const auto& [f, e] : factor_univariate(P).factors) out.push_back({e, f.deg() / k});
  return out;
}

inline std::vector<UniPoly> branch_places(const RatMap& Y) {
  const UniPoly& n = Y.num();
  const UniPoly& d = Y.den();
  UniPoly W = n.derivative() * d - n * d.derivative();
  std::vector<UniPoly> out;
  if (W.deg() >= 1) {
    BiPoly F = BiPoly::in_x(n) - BiPoly::y() * BiPoly::in_x(d);
    for (const auto& [f, e] : factor_univariate(resultant_x(F, BiPoly::in_x(W))).factors) out.push_back(f);
  }
  // Values where the fiber loses degree (a point over infinity).
  if (n.deg() == d.deg()) out.push_back(UniPoly{-n.lead() / d.lead(), Q(1)});
  if (n.deg() < d.deg()) out.push_back(UniPoly::x());
  return out;
}

inline int fiber_product_genus(const RatMap& Y1, const RatMap& Y2) {
  std::vector<UniPoly> vs = branch_places(Y1);
  for (auto& p : branch_places(Y2)) vs.push_back(p);
  for (auto& p : vs) p = p.monic();
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  vs.push_back(UniPoly());  // infinity
  long sum = 0;
  for (const auto& v : vs) {
    const long k = v.is_zero() ? 1 : v.deg();
    for (auto [a, ca] : fiber(Y1, v))
      for (auto [b, cb] : fiber(Y2, v)) sum += k * ca * cb * (a * b - std::gcd(a, b));
  }
  const long two_g_minus_2 = -2L * Y1.deg() * Y2.deg() + sum;
  return static_cast<int>(two_g_minus_2 / 2 + 1);
}

}  // namespace oracle
