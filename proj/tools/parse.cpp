#include "parse.hpp"

#include <cctype>
#include <optional>

#include "rdyn/errors.hpp"
#include "rdyn/factor.hpp"

namespace rdyn::cli {

namespace {

const std::string kRing = "\xE2\x88\x98";  // U+2218

struct MapOps {
  using V = RatMap;
  static std::optional<V> variable(char c) {
    if (c == 'z') return RatMap::identity();
    return std::nullopt;
  }
  static V number(const Q& q) { return RatMap::constant(q); }
  static bool is_zero(const V& v) { return v.is_constant() && v.num().is_zero(); }
  static std::optional<Q> as_constant(const V& v) {
    if (!v.is_constant()) return std::nullopt;
    return v.num().coeff(0) / v.den().coeff(0);
  }
  static V div(const V& a, const V& b, std::size_t pos) {
    if (is_zero(b)) throw ParseError("division by the zero polynomial", pos);
    return a / b;
  }
  static V power(const V& a, long k, std::size_t pos) {
    if (k < 0 && is_zero(a)) throw ParseError("negative power of zero", pos);
    return a.power(k);
  }
  static constexpr bool has_compose = true;
  static V compose(const V& f, const V& g) { return rdyn::compose(f, g); }
  static V iterate(const V& f, long k, std::size_t pos) {
    if (k < 0) throw ParseError("iteration count must be nonnegative", pos);
    return rdyn::iterate(f, static_cast<int>(k));
  }
  static V alias(long n, std::size_t pos) {
    if (n < 1 || n > 12) throw ParseError("Chebyshev alias outside T1..T12", pos);
    return chebyshev(static_cast<int>(n));
  }
};

struct CurveOps {
  using V = BiPoly;
  static std::optional<V> variable(char c) {
    if (c == 'x') return BiPoly::x();
    if (c == 'y') return BiPoly::y();
    return std::nullopt;
  }
  static V number(const Q& q) { return BiPoly::constant(q); }
  static std::optional<Q> as_constant(const V& v) {
    if (v.is_zero()) return Q(0);
    if (v.deg_x() != 0 || v.deg_y() != 0) return std::nullopt;
    return v.coeff(0, 0);
  }
  static V div(const V& a, const V& b, std::size_t pos) {
    auto c = as_constant(b);
    if (!c) throw ParseError("curves allow division by constants only", pos);
    if (*c == 0) throw ParseError("division by zero", pos);
    return a.scaled(1 / *c);
  }
  static V power(const V& a, long k, std::size_t pos) {
    if (k < 0) throw ParseError("negative powers are not polynomial", pos);
    return a.pow(static_cast<unsigned>(k));
  }
  static constexpr bool has_compose = false;
  static V compose(const V& f, const V&) { return f; }
  static V iterate(const V& f, long, std::size_t pos) {
    (void)f;
    throw ParseError("iteration is not defined for curves", pos);
  }
  static V alias(long, std::size_t pos) { throw ParseError("aliases are not defined for curves", pos); }
};

template <class Ops>
class Parser {
 public:
  using V = typename Ops::V;
  explicit Parser(const std::string& s) : s_(s) {}

  V parse() {
    V v = compose_expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return v;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  bool eat_ring() {
    skip();
    if (s_.compare(i_, kRing.size(), kRing) == 0) {
      i_ += kRing.size();
      return true;
    }
    if (i_ < s_.size() && s_[i_] == 'o') {
      ++i_;
      return true;
    }
    return false;
  }
  // The composition operator: a standalone 'o'.
  bool at_compose() {
    skip();
    return i_ < s_.size() && s_[i_] == 'o';
  }

  long integer() {
    skip();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
      neg = s_[i_] == '-';
      ++i_;
      skip();
    }
    const std::size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) throw ParseError("expected an integer", i_);
    if (i_ - st > 6) throw ParseError("exponent too large", st);
    long v = std::stol(s_.substr(st, i_ - st));
    return neg ? -v : v;
  }

  V compose_expr() {
    V v = sum();
    while (at_compose()) {
      const std::size_t pos = i_;
      ++i_;
      if (!Ops::has_compose) throw ParseError("composition is not defined here", pos);
      V r = sum();
      v = Ops::compose(v, r);
    }
    return v;
  }

  V sum() {
    V v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'T' ||
           (Ops::variable(c).has_value());
  }

  V term() {
    V v = unary();
    while (true) {
      skip();
      const std::size_t pos = i_;
      if (eat('*'))
        v = v * unary();
      else if (eat('/'))
        v = Ops::div(v, unary(), pos);
      else if (starts_factor())
        v = v * power();  // juxtaposition, as in 4z^3
      else
        return v;
    }
  }

  V unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  V power() {
    V b = atom();
    while (true) {
      skip();
      const std::size_t pos = i_;
      if (!eat('^')) return b;
      if (eat_ring())
        b = Ops::iterate(b, integer(), pos);
      else
        b = Ops::power(b, integer(), pos);
    }
  }

  V atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    const std::size_t pos = i_;
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      V v = compose_expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Ops::number(Q(Z(s_.substr(st, i_ - st))));
    }
    if (c == 'T') {
      ++i_;
      return Ops::alias(integer(), pos);
    }
    if (auto v = Ops::variable(c)) {
      ++i_;
      return *v;
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos);
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

RatMap parse_map(const std::string& text) { return Parser<MapOps>(text).parse(); }

BiPoly parse_curve(const std::string& text) { return Parser<CurveOps>(text).parse(); }

Place parse_place(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "inf" || t == "oo") return Place::infinity();
  if (t.rfind("root(", 0) == 0 && t.back() == ')') {
    RatMap g = parse_map(t.substr(5, t.size() - 6));
    if (!g.is_polynomial() || g.deg() < 1) throw ParseError("root(...) needs a nonconstant polynomial in z", 0);
    if (!is_irreducible(g.num())) throw ParseError("root(...) needs an irreducible polynomial", 0);
    return Place::from_minpoly(g.num());
  }
  RatMap v = parse_map(t);
  if (!v.is_constant()) throw ParseError("expected a number, inf, or root(poly): " + text, 0);
  return Place::rational(v.num().coeff(0) / v.den().coeff(0));
}

Orbifold parse_orbifold(const std::string& text) {
  std::string t = text;
  auto a = t.find_first_not_of(" \t");
  auto b = t.find_last_not_of(" \t");
  if (a == std::string::npos) return Orbifold();
  t = t.substr(a, b - a + 1);
  if (!t.empty() && t.front() == '{') {
    if (t.back() != '}') throw ParseError("unbalanced braces", t.size());
    t = t.substr(1, t.size() - 2);
  }
  Orbifold o;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i < t.size() && t[i] == '(') ++depth;
    if (i < t.size() && t[i] == ')') --depth;
    if (i < t.size() && !(t[i] == ',' && depth == 0)) continue;
    std::string item = t.substr(start, i - start);
    start = i + 1;
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw ParseError("expected place:value in '" + item + "'", i);
    Place p = parse_place(item.substr(0, colon));
    int v = 0;
    try {
      v = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad ramification value in '" + item + "'", i);
    }
    if (v < 1) throw ParseError("ramification values must be positive", i);
    if (o.nu(p) != 1) throw ParseError("place listed twice: " + p.str(), i);
    o.set(p, v);
  }
  return o;
}

}  // namespace rdyn::cli
