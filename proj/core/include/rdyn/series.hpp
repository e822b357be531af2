#pragma once

#include <optional>
#include <vector>

#include "rdyn/ratmap.hpp"

namespace rdyn {

// Truncated power series in (t - center).
struct SeriesApprox {
  Q center;
  std::vector<Q> coeffs;
  int precision() const { return static_cast<int>(coeffs.size()); }
};

// Root y(t) of X(y) = F(t) near t = center with y(center) = y0, a simple
// root. Newton iteration to the requested number of terms.
SeriesApprox newton_lift(const RatMap& X, const RatMap& F, const Q& center, const Q& y0,
                         int precision);

// a/b with deg a, deg b <= k matching the series, shifted back to t.
std::optional<RatMap> pade(const SeriesApprox& s, int k);

// All R over Q with X o R = F, sorted.
std::vector<RatMap> ratmap_roots(const RatMap& X, const RatMap& F);

}  // namespace rdyn
