#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdyn/bipoly.hpp"
#include "rdyn/ratmap.hpp"

namespace rdyn {

// Affine curve F(x, y) = 0 in P1 x P1, kept primitive and squarefree with a
// positive leading term. Bidegree is (degree in x, degree in y).
class BiCurve {
 public:
  BiCurve() = default;
  explicit BiCurve(const BiPoly& F);
  const BiPoly& poly() const { return poly_; }
  int d1() const { return poly_.deg_x(); }
  int d2() const { return poly_.deg_y(); }
  bool irreducible() const;
  std::vector<BiCurve> components() const;
  friend bool operator==(const BiCurve& a, const BiCurve& b) { return a.poly_ == b.poly_; }
  friend bool operator!=(const BiCurve& a, const BiCurve& b) { return !(a == b); }
  friend bool operator<(const BiCurve& a, const BiCurve& b) { return a.poly_ < b.poly_; }
  std::string str() const { return poly_.str(); }

 private:
  BiPoly poly_;
};

struct ParamCurve {
  RatMap X1, X2;  // t -> (X1(t), X2(t))
};

BiCurve separated_curve(const RatMap& Y1, const RatMap& Y2);
BiCurve implicitize(const ParamCurve& p);
inline BiCurve implicitize(const RatMap& X1, const RatMap& X2) { return implicitize(ParamCurve{X1, X2}); }

// (A1, A2)(C) for irreducible C.
BiCurve image_curve(const BiCurve& C, const RatMap& A1, const RatMap& A2);
// C is contained in the zero set of F(A1(x), A2(y)).
bool pullback_contains(const BiCurve& C, const BiCurve& image, const RatMap& A1, const RatMap& A2);

bool is_invariant(const BiCurve& C, const RatMap& A1, const RatMap& A2);
std::optional<int> periodicity(const BiCurve& C, const RatMap& A1, const RatMap& A2, int max_n);
std::optional<std::pair<int, int>> preperiodicity(const BiCurve& C, const RatMap& A1, const RatMap& A2,
                                                  int max_l, int max_n);

// Genus of the smooth model of Y1(x) = Y2(y); throws ReducibleCurve.
int genus_separated(const RatMap& Y1, const RatMap& Y2);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};
struct SeparatedComponentReport {
  std::vector<IdentityCheck> checks;
  RatMap B;
  std::optional<BiCurve> curve;
  bool ok() const;
};
// Checks Y1 o X1 = Y2 o X2, X_i o Y_i = A_i^n, A_i o X_i = X_i o B with
// B = Y1 o X1, and that implicitize(X1, X2) is an invariant component of
// Y1(x) = Y2(y).
SeparatedComponentReport separated_component_check(const RatMap& X1, const RatMap& X2, const RatMap& Y1, const RatMap& Y2,
                                   const RatMap& A1, const RatMap& A2, int n);

}  // namespace rdyn
