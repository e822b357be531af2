#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "rdyn/bipoly.hpp"
#include "rdyn/poly.hpp"

namespace rdyn {

// A point of the rational projective line.
struct P1 {
  bool inf = false;
  Q v;
  static P1 infinity() { return {true, Q(0)}; }
  static P1 finite(const Q& q) { return {false, q}; }
  friend bool operator==(const P1& a, const P1& b) {
    return a.inf == b.inf && (a.inf || a.v == b.v);
  }
  friend bool operator<(const P1& a, const P1& b) {
    if (a.inf != b.inf) return b.inf;
    return !a.inf && a.v < b.v;
  }
  std::string str() const;
};

// num/den in lowest terms. Canonical scaling: den monic, and den == 1 when
// the map is a polynomial.
class RatMap {
 public:
  RatMap() : num_(UniPoly::x()), den_(UniPoly::constant(1)) {}
  RatMap(UniPoly num, UniPoly den);
  RatMap(const UniPoly& p);  // NOLINT: polynomials are maps
  static RatMap identity() { return RatMap(); }
  static RatMap constant(const Q& c);
  static RatMap mobius(const Q& a, const Q& b, const Q& c, const Q& d);  // (az+b)/(cz+d)

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  int deg() const { return std::max(num_.deg(), den_.deg()); }
  bool is_constant() const { return deg() <= 0; }
  bool is_polynomial() const { return den_.deg() == 0; }
  bool is_mobius() const { return deg() == 1; }
  bool is_identity() const { return *this == identity(); }

  P1 eval(const P1& p) const;
  P1 eval(const Q& q) const { return eval(P1::finite(q)); }
  RatMap inverse() const;  // Mobius only

  // Mobius coefficients (a,b,c,d) with this = (az+b)/(cz+d).
  void mobius_coeffs(Q& a, Q& b, Q& c, Q& d) const;

  friend bool operator==(const RatMap& a, const RatMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatMap& a, const RatMap& b) { return !(a == b); }
  friend bool operator<(const RatMap& a, const RatMap& b);

  // Field arithmetic on functions (not composition).
  friend RatMap operator+(const RatMap& a, const RatMap& b);
  friend RatMap operator-(const RatMap& a, const RatMap& b);
  friend RatMap operator*(const RatMap& a, const RatMap& b);
  friend RatMap operator/(const RatMap& a, const RatMap& b);
  RatMap operator-() const;
  RatMap power(long k) const;

  std::string str(const std::string& var = "z") const;

 private:
  UniPoly num_, den_;
};

RatMap compose(const RatMap& f, const RatMap& g);  // f(g(z))
RatMap iterate(const RatMap& f, int k);
// Compose a list left to right: fs[0] o fs[1] o ...
RatMap compose_all(std::initializer_list<RatMap> fs);

// num(f(x)) den(f(y)) - num(f(y)) den(f(x)).
BiPoly difference_poly(const RatMap& f);
// num(Y1(x)) den(Y2(y)) - num(Y2(y)) den(Y1(x)).
BiPoly separated_poly(const RatMap& Y1, const RatMap& Y2);

// Chebyshev polynomial T_n.
RatMap chebyshev(int n);

}  // namespace rdyn
