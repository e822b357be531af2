#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace rdyn {

using Q = mpq_class;
using Z = mpz_class;

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Q> coeffs);
  UniPoly(std::initializer_list<Q> coeffs);

  static UniPoly constant(const Q& c);
  static UniPoly monomial(const Q& c, int k);
  static UniPoly x();  // the variable itself

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Q>& coeffs() const { return c_; }
  Q coeff(int i) const;
  const Q& lead() const;

  Q eval(const Q& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly compose(const UniPoly& g) const;  // this(g(z))
  UniPoly pow(unsigned k) const;
  UniPoly shift(const Q& a) const;  // this(z + a)
  UniPoly reversed(int n) const;    // z^n * this(1/z)
  UniPoly truncate(int n) const;    // keep terms below z^n
  UniPoly mul_xk(int k) const;

  // Positive rational r with this / r integral and primitive, lead > 0.
  Q content() const;
  UniPoly primitive() const;
  std::vector<Z> to_integer() const;  // of primitive()

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Q& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Q& s) { return a *= s; }
  friend UniPoly operator*(const Q& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
  // Total order: degree, then coefficients from the top down.
  friend bool operator<(const UniPoly& a, const UniPoly& b);

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Q> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient part
UniPoly operator%(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, or zero
UniPoly lcm(const UniPoly& a, const UniPoly& b);

struct XGcd {
  UniPoly g, s, t;  // s*a + t*b = g, g monic
};
XGcd xgcd(const UniPoly& a, const UniPoly& b);

// Inverse of a modulo m; m and a coprime.
UniPoly invmod(const UniPoly& a, const UniPoly& m);

Q resultant(const UniPoly& a, const UniPoly& b);
Q discriminant(const UniPoly& a);

// Yun: p = c * prod f_i^{e_i}, f_i monic squarefree pairwise coprime.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);  // monic

std::vector<Q> rational_roots(const UniPoly& p);  // sorted, distinct

// Multiplicity of the irreducible g in p (p nonzero).
int valuation(const UniPoly& p, const UniPoly& g);

// Lagrange interpolation through distinct nodes.
UniPoly interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys);

int64_t to_int64(const Z& z);

}  // namespace rdyn
