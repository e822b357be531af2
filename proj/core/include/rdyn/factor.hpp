#pragma once

#include <utility>
#include <vector>

#include "rdyn/poly.hpp"

namespace rdyn {

// p = unit * prod f^e with f monic irreducible over Q, sorted by (f, e).
struct UniFactorization {
  Q unit;
  std::vector<std::pair<UniPoly, int>> factors;
};

UniFactorization factor_univariate(const UniPoly& p);
bool is_irreducible(const UniPoly& p);

}  // namespace rdyn
