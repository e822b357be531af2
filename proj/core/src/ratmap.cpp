#include "rdyn/ratmap.hpp"

#include <sstream>

#include "rdyn/errors.hpp"

namespace rdyn {

std::string P1::str() const {
  if (inf) return "inf";
  return v.get_str();
}

RatMap::RatMap(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational map with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  UniPoly g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Q s = den_.lead();
  if (s != 1) {
    num_ *= Q(1 / s);
    den_ *= Q(1 / s);
  }
}

RatMap::RatMap(const UniPoly& p) : RatMap(p, UniPoly::constant(1)) {}

RatMap RatMap::constant(const Q& c) { return RatMap(UniPoly::constant(c), UniPoly::constant(1)); }

RatMap RatMap::mobius(const Q& a, const Q& b, const Q& c, const Q& d) {
  if (a * d - b * c == 0) throw PreconditionError("degenerate Mobius transformation");
  return RatMap(UniPoly{b, a}, UniPoly{d, c});
}

P1 RatMap::eval(const P1& p) const {
  if (!p.inf) {
    Q d = den_.eval(p.v);
    if (d == 0) return P1::infinity();
    return P1::finite(num_.eval(p.v) / d);
  }
  if (num_.deg() > den_.deg()) return P1::infinity();
  if (num_.deg() < den_.deg()) return P1::finite(0);
  return P1::finite(num_.lead() / den_.lead());
}

void RatMap::mobius_coeffs(Q& a, Q& b, Q& c, Q& d) const {
  if (!is_mobius()) throw PreconditionError("not a Mobius transformation");
  a = num_.coeff(1);
  b = num_.coeff(0);
  c = den_.coeff(1);
  d = den_.coeff(0);
}

RatMap RatMap::inverse() const {
  Q a, b, c, d;
  mobius_coeffs(a, b, c, d);
  return mobius(d, -b, -c, a);
}

bool operator<(const RatMap& a, const RatMap& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  if (a.den_ != b.den_) return a.den_ < b.den_;
  return a.num_ < b.num_;
}

RatMap operator+(const RatMap& a, const RatMap& b) {
  return RatMap(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatMap operator-(const RatMap& a, const RatMap& b) {
  return RatMap(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatMap operator*(const RatMap& a, const RatMap& b) {
  return RatMap(a.num_ * b.num_, a.den_ * b.den_);
}

RatMap operator/(const RatMap& a, const RatMap& b) {
  if (b.num_.is_zero()) throw PreconditionError("division by the zero function");
  return RatMap(a.num_ * b.den_, a.den_ * b.num_);
}

RatMap RatMap::operator-() const { return RatMap(-num_, den_); }

RatMap RatMap::power(long k) const {
  if (k < 0) {
    if (num_.is_zero()) throw PreconditionError("negative power of the zero function");
    return RatMap(den_, num_).power(-k);
  }
  return RatMap(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

std::string RatMap::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatMap compose(const RatMap& f, const RatMap& g) {
  const int d = f.deg();
  if (d <= 0) return f;
  std::vector<UniPoly> gn(d + 1), gd(d + 1);
  gn[0] = gd[0] = UniPoly::constant(1);
  for (int i = 1; i <= d; ++i) {
    gn[i] = gn[i - 1] * g.num();
    gd[i] = gd[i - 1] * g.den();
  }
  UniPoly n, m;
  for (int i = 0; i <= d; ++i) {
    UniPoly t = gn[i] * gd[d - i];
    if (f.num().coeff(i) != 0) n += t * f.num().coeff(i);
    if (f.den().coeff(i) != 0) m += t * f.den().coeff(i);
  }
  return RatMap(n, m);
}

RatMap iterate(const RatMap& f, int k) {
  if (k < 0) throw PreconditionError("negative iterate");
  RatMap r = RatMap::identity();
  for (int i = 0; i < k; ++i) r = compose(f, r);
  return r;
}

RatMap compose_all(std::initializer_list<RatMap> fs) {
  RatMap r = RatMap::identity();
  for (auto it = fs.end(); it != fs.begin();) r = compose(*--it, r);
  return r;
}

BiPoly difference_poly(const RatMap& f) { return separated_poly(f, f); }

BiPoly separated_poly(const RatMap& Y1, const RatMap& Y2) {
  return BiPoly::in_x(Y1.num()) * BiPoly::in_y(Y2.den()) -
         BiPoly::in_y(Y2.num()) * BiPoly::in_x(Y1.den());
}

RatMap chebyshev(int n) {
  if (n < 0) throw PreconditionError("negative Chebyshev index");
  UniPoly a = UniPoly::constant(1), b = UniPoly::x();
  if (n == 0) return RatMap(a);
  for (int i = 1; i < n; ++i) {
    UniPoly c = UniPoly::monomial(2, 1) * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return RatMap(b);
}

}  // namespace rdyn
