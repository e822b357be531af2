#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdyn/poly.hpp"

namespace rdyn {

// Polynomial in x and y over Q, stored as coefficients in x whose entries
// are polynomials in y: F = sum_i c[i](y) x^i. Trimmed in x.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> cx);
  // From (x-exponent, y-exponent) -> coefficient.
  static BiPoly from_terms(const std::map<std::pair<int, int>, Q>& terms);
  static BiPoly constant(const Q& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly in_x(const UniPoly& p);  // p(x)
  static BiPoly in_y(const UniPoly& p);  // p(y)

  bool is_zero() const { return c_.empty(); }
  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  int deg_y() const;
  int total_degree() const;
  const std::vector<UniPoly>& cx() const { return c_; }
  UniPoly coeff_x(int i) const;  // coefficient of x^i, a polynomial in y
  Q coeff(int i, int j) const;
  std::map<std::pair<int, int>, Q> terms() const;

  UniPoly eval_x(const Q& a) const;  // F(a, y)
  UniPoly eval_y(const Q& b) const;  // F(x, b)
  Q eval(const Q& a, const Q& b) const;
  BiPoly swap() const;               // F(y, x)
  BiPoly derivative_x() const;
  BiPoly shift_y(const Q& b) const;  // F(x, y + b)

  // F(xn/xd, yn/yd) * xd^{deg_x} * yd^{deg_y}, with the denominators as
  // given (no cancellation).
  BiPoly substitute(const UniPoly& xn, const UniPoly& xd, const UniPoly& yn,
                    const UniPoly& yd) const;

  // Integer-primitive with the leading term (highest x, then highest y)
  // positive.
  BiPoly primitive() const;
  // gcd of the x-coefficients, a monic polynomial in y.
  UniPoly content_x() const;
  BiPoly scaled(const Q& s) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
  friend bool operator<(const BiPoly& a, const BiPoly& b);
  BiPoly pow(unsigned k) const;

  std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

 private:
  void trim();
  std::vector<UniPoly> c_;
};

// Quotient when b divides a exactly, else nullopt.
std::optional<BiPoly> exact_divide(const BiPoly& a, const BiPoly& b);
BiPoly divide_by_y(const BiPoly& a, const UniPoly& p);  // exact, p in y

// Res_x(F, G) as a polynomial in y; Res_y likewise in x.
UniPoly resultant_x(const BiPoly& F, const BiPoly& G);
UniPoly resultant_y(const BiPoly& F, const BiPoly& G);

// Primitive, positive-leading gcd over Q.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

struct BiFactorization {
  Q unit;
  std::vector<std::pair<BiPoly, int>> factors;  // primitive, sorted
};
BiFactorization factor_bivariate(const BiPoly& F);
bool is_irreducible(const BiPoly& F);
BiPoly squarefree_part(const BiPoly& F);  // primitive

}  // namespace rdyn
