#include "rdyn/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "rdyn/errors.hpp"

namespace rdyn {

BiPoly::BiPoly(std::vector<UniPoly> cx) : c_(std::move(cx)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_terms(const std::map<std::pair<int, int>, Q>& terms) {
  std::vector<std::vector<Q>> rows;
  for (const auto& [e, c] : terms) {
    auto [i, j] = e;
    if (i < 0 || j < 0) throw PreconditionError("negative exponent");
    if (static_cast<int>(rows.size()) <= i) rows.resize(i + 1);
    if (static_cast<int>(rows[i].size()) <= j) rows[i].resize(j + 1);
    rows[i][j] += c;
  }
  std::vector<UniPoly> cx;
  for (auto& r : rows) cx.emplace_back(std::move(r));
  return BiPoly(std::move(cx));
}

BiPoly BiPoly::constant(const Q& c) { return BiPoly({UniPoly::constant(c)}); }
BiPoly BiPoly::x() { return BiPoly({UniPoly(), UniPoly::constant(1)}); }
BiPoly BiPoly::y() { return BiPoly({UniPoly::x()}); }

BiPoly BiPoly::in_x(const UniPoly& p) {
  std::vector<UniPoly> cx;
  for (const auto& c : p.coeffs()) cx.push_back(UniPoly::constant(c));
  return BiPoly(std::move(cx));
}

BiPoly BiPoly::in_y(const UniPoly& p) { return BiPoly({p}); }

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.deg());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) d = std::max(d, static_cast<int>(i) + c_[i].deg());
  return d;
}

UniPoly BiPoly::coeff_x(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return UniPoly();
  return c_[i];
}

Q BiPoly::coeff(int i, int j) const { return coeff_x(i).coeff(j); }

std::map<std::pair<int, int>, Q> BiPoly::terms() const {
  std::map<std::pair<int, int>, Q> t;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (int j = 0; j <= c_[i].deg(); ++j)
      if (c_[i].coeff(j) != 0) t[{static_cast<int>(i), j}] = c_[i].coeff(j);
  return t;
}

UniPoly BiPoly::eval_x(const Q& a) const {
  UniPoly r;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= UniPoly::constant(a);
    r += c_[i];
  }
  return r;
}

UniPoly BiPoly::eval_y(const Q& b) const {
  std::vector<Q> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.eval(b));
  return UniPoly(std::move(v));
}

Q BiPoly::eval(const Q& a, const Q& b) const { return eval_y(b).eval(a); }

BiPoly BiPoly::swap() const {
  std::map<std::pair<int, int>, Q> t;
  for (const auto& [e, c] : terms()) t[{e.second, e.first}] = c;
  return from_terms(t);
}

BiPoly BiPoly::derivative_x() const {
  std::vector<UniPoly> cx;
  for (std::size_t i = 1; i < c_.size(); ++i) cx.push_back(c_[i] * Q(static_cast<long>(i)));
  return BiPoly(std::move(cx));
}

BiPoly BiPoly::shift_y(const Q& b) const {
  std::vector<UniPoly> cx;
  for (const auto& c : c_) cx.push_back(c.shift(b));
  return BiPoly(std::move(cx));
}

BiPoly BiPoly::substitute(const UniPoly& xn, const UniPoly& xd, const UniPoly& yn,
                          const UniPoly& yd) const {
  if (is_zero()) return {};
  const int dx = deg_x(), dy = deg_y();
  std::vector<UniPoly> ynp(dy + 1), ydp(dy + 1);
  ynp[0] = ydp[0] = UniPoly::constant(1);
  for (int j = 1; j <= dy; ++j) {
    ynp[j] = ynp[j - 1] * yn;
    ydp[j] = ydp[j - 1] * yd;
  }
  std::vector<UniPoly> xnp(dx + 1), xdp(dx + 1);
  xnp[0] = xdp[0] = UniPoly::constant(1);
  for (int i = 1; i <= dx; ++i) {
    xnp[i] = xnp[i - 1] * xn;
    xdp[i] = xdp[i - 1] * xd;
  }
  std::vector<UniPoly> out;
  for (int i = 0; i <= dx; ++i) {
    if (c_[i].is_zero()) continue;
    UniPoly Y;
    for (int j = 0; j <= c_[i].deg(); ++j)
      if (c_[i].coeff(j) != 0) Y += ynp[j] * ydp[dy - j] * c_[i].coeff(j);
    UniPoly X = xnp[i] * xdp[dx - i];
    if (static_cast<int>(out.size()) <= X.deg()) out.resize(X.deg() + 1);
    for (int k = 0; k <= X.deg(); ++k)
      if (X.coeff(k) != 0) out[k] += Y * X.coeff(k);
  }
  return BiPoly(std::move(out));
}

BiPoly BiPoly::primitive() const {
  if (is_zero()) return *this;
  Z num = 0, den = 1;
  for (const auto& c : c_)
    for (const auto& q : c.coeffs()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
  Q s(den, num);
  s.canonicalize();
  if (c_.back().lead() < 0) s = -s;
  return scaled(s);
}

UniPoly BiPoly::content_x() const {
  UniPoly g;
  for (const auto& c : c_) {
    g = gcd(g, c);
    if (g.deg() == 0) break;
  }
  return g;
}

BiPoly BiPoly::scaled(const Q& s) const {
  std::vector<UniPoly> cx;
  for (const auto& c : c_) cx.push_back(c * s);
  return BiPoly(std::move(cx));
}

BiPoly BiPoly::operator-() const { return scaled(Q(-1)); }

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<UniPoly> cx(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) cx[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) cx[i] += b.c_[i];
  return BiPoly(std::move(cx));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> cx(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) cx[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(cx));
}

bool operator<(const BiPoly& a, const BiPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

BiPoly BiPoly::pow(unsigned k) const {
  BiPoly r = constant(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

std::string BiPoly::str(const std::string& vx, const std::string& vy) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg_x(); i >= 0; --i) {
    for (int j = c_[i].deg(); j >= 0; --j) {
      Q c = c_[i].coeff(j);
      if (c == 0) continue;
      bool neg = c < 0;
      Q a = neg ? Q(-c) : c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string mono;
      auto add = [&](const std::string& v, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      add(vx, i);
      add(vy, j);
      if (mono.empty())
        os << a;
      else if (a == 1)
        os << mono;
      else
        os << a << "*" << mono;
    }
  }
  return os.str();
}

std::optional<BiPoly> exact_divide(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  if (a.is_zero()) return BiPoly();
  const int db = b.deg_x();
  if (a.deg_x() < db) return std::nullopt;
  std::vector<UniPoly> r = a.cx(), q(a.deg_x() - db + 1);
  const UniPoly& lb = b.cx().back();
  for (int i = a.deg_x(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    auto [qq, rr] = divmod(r[i], lb);
    if (!rr.is_zero()) return std::nullopt;
    q[i - db] = qq;
    for (int k = 0; k <= db; ++k) r[i - db + k] -= qq * b.cx()[k];
  }
  for (int i = 0; i < db; ++i)
    if (!r[i].is_zero()) return std::nullopt;
  return BiPoly(std::move(q));
}

BiPoly divide_by_y(const BiPoly& a, const UniPoly& p) {
  std::vector<UniPoly> cx;
  for (const auto& c : a.cx()) cx.push_back(c / p);
  return BiPoly(std::move(cx));
}

UniPoly resultant_x(const BiPoly& F, const BiPoly& G) {
  if (F.deg_x() < 1 || G.deg_x() < 1)
    throw PreconditionError("resultant needs positive degree in the eliminated variable");
  const int bound = std::max(0, F.deg_y()) * G.deg_x() + std::max(0, G.deg_y()) * F.deg_x();
  const UniPoly& lf = F.cx().back();
  const UniPoly& lg = G.cx().back();
  std::vector<Q> xs, ys;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    Q y0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    if (lf.eval(y0) == 0 || lg.eval(y0) == 0) continue;
    xs.push_back(y0);
    ys.push_back(resultant(F.eval_y(y0), G.eval_y(y0)));
  }
  return interpolate(xs, ys);
}

UniPoly resultant_y(const BiPoly& F, const BiPoly& G) { return resultant_x(F.swap(), G.swap()); }

namespace {

// lc(b)^k * a reduced by b in x, content in y removed along the way.
BiPoly prem_x(BiPoly a, const BiPoly& b) {
  const int db = b.deg_x();
  const UniPoly& lb = b.cx().back();
  while (!a.is_zero() && a.deg_x() >= db) {
    const int da = a.deg_x();
    UniPoly la = a.cx().back();
    UniPoly g = gcd(la, lb);
    UniPoly ma = lb / g, mb = la / g;
    std::vector<UniPoly> sh(da - db);
    for (const auto& c : b.cx()) sh.push_back(c * mb);
    a = a * BiPoly::in_y(ma) - BiPoly(std::move(sh));
  }
  return a;
}

BiPoly prim_x(const BiPoly& a) {
  if (a.is_zero()) return a;
  UniPoly c = a.content_x();
  return c.deg() > 0 ? divide_by_y(a, c) : a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  UniPoly ca = a.content_x(), cb = b.content_x();
  UniPoly cg = gcd(ca, cb);
  BiPoly pa = divide_by_y(a, ca), pb = divide_by_y(b, cb);
  if (pa.deg_x() < pb.deg_x()) std::swap(pa, pb);
  BiPoly g;
  if (pb.deg_x() == 0) {
    g = BiPoly::constant(1);
  } else {
    while (true) {
      BiPoly r = prem_x(pa, pb);
      if (r.is_zero()) {
        g = pb;
        break;
      }
      pa = std::move(pb);
      pb = prim_x(r);
      if (pb.deg_x() == 0) {
        g = BiPoly::constant(1);
        break;
      }
    }
  }
  return (BiPoly::in_y(cg) * g).primitive();
}

}  // namespace rdyn
