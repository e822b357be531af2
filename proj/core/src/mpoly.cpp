#include "rdyn/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rdyn/errors.hpp"

namespace rdyn {

namespace {

using Mono = MPoly::Mono;
using Term = MPoly::Term;

int mdeg(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mlcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Mono mdiv(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

bool MPoly::greater(const Mono& a, const Mono& b) {
  int da = mdeg(a), db = mdeg(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MPoly MPoly::constant(int nvars, const Q& c) {
  MPoly p(nvars);
  if (c != 0) p.t_.emplace_back(Mono(nvars, 0), c);
  return p;
}

MPoly MPoly::var(int nvars, int i) {
  MPoly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.t_.emplace_back(m, Q(1));
  return p;
}

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return greater(a.first, b.first); });
  MPoly p(nvars);
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().first == t.first)
      p.t_.back().second += t.second;
    else
      p.t_.push_back(std::move(t));
    if (p.t_.back().second == 0) p.t_.pop_back();
  }
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, mdeg(t.first));
  return d;
}

MPoly MPoly::monic() const {
  if (t_.empty()) return *this;
  return scaled(1 / lead_coeff());
}

MPoly MPoly::scaled(const Q& s) const {
  MPoly r(n_);
  if (s == 0) return r;
  r.t_ = t_;
  for (auto& t : r.t_) t.second *= s;
  return r;
}

MPoly MPoly::mul_term(const Mono& m, const Q& c) const {
  MPoly r(n_);
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) {
    Mono e = t.first;
    for (int i = 0; i < n_; ++i) e[i] += m[i];
    r.t_.emplace_back(std::move(e), t.second * c);
  }
  return r;
}

Q MPoly::eval(const std::vector<Q>& at) const {
  Q s = 0;
  for (const auto& [m, c] : t_) {
    Q v = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) v *= at[i];
    s += v;
  }
  return s;
}

MPoly MPoly::substitute(int i, const Q& value) const {
  std::vector<Term> ts;
  for (const auto& [m, c] : t_) {
    Mono e = m;
    Q v = c;
    for (int k = 0; k < m[i]; ++k) v *= value;
    e[i] = 0;
    ts.emplace_back(std::move(e), v);
  }
  return from_terms(n_, std::move(ts));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r(a.n_);
  r.t_.reserve(a.t_.size() + b.t_.size());
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() || j < b.t_.size()) {
    if (j == b.t_.size() || (i < a.t_.size() && MPoly::greater(a.t_[i].first, b.t_[j].first))) {
      r.t_.push_back(a.t_[i++]);
    } else if (i == a.t_.size() || MPoly::greater(b.t_[j].first, a.t_[i].first)) {
      r.t_.push_back(b.t_[j++]);
    } else {
      Q c = a.t_[i].second + b.t_[j].second;
      if (c != 0) r.t_.emplace_back(a.t_[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + b.scaled(Q(-1)); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  std::vector<Term> ts;
  ts.reserve(a.t_.size() * b.t_.size());
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      Mono e = ma;
      for (int i = 0; i < a.n_; ++i) e[i] += mb[i];
      ts.emplace_back(std::move(e), ca * cb);
    }
  return MPoly::from_terms(a.n_, std::move(ts));
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    os << (first ? "" : " + ") << c;
    first = false;
    for (int i = 0; i < n_; ++i)
      if (m[i]) os << "*x" << i << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
  }
  return os.str();
}

MPoly normal_form(const MPoly& p, const std::vector<MPoly>& G) {
  std::vector<Term> done;
  MPoly cur = p;
  while (!cur.is_zero()) {
    const auto& [m, c] = cur.terms().front();
    const MPoly* red = nullptr;
    for (const auto& g : G)
      if (divides(g.lead_mono(), m)) {
        red = &g;
        break;
      }
    if (!red) {
      done.push_back(cur.terms().front());
      std::vector<Term> rest(cur.terms().begin() + 1, cur.terms().end());
      cur = MPoly::from_terms(p.nvars(), std::move(rest));
      continue;
    }
    cur = cur - red->mul_term(mdiv(m, red->lead_mono()), c / red->lead_coeff());
  }
  return MPoly::from_terms(p.nvars(), std::move(done));
}

std::vector<MPoly> groebner(std::vector<MPoly> F) {
  std::vector<MPoly> G;
  for (auto& f : F)
    if (!f.is_zero()) G.push_back(f.monic());
  if (G.empty()) return G;
  struct Pair {
    std::size_t i, j;
    Mono l;
  };
  std::vector<Pair> P;
  std::vector<bool> alive(G.size(), true);
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      if (alive[i]) P.push_back({i, k, mlcm(G[i].lead_mono(), G[k].lead_mono())});
  };
  for (std::size_t k = 1; k < G.size(); ++k) add_pairs(k);
  while (!P.empty()) {
    auto it = std::min_element(P.begin(), P.end(), [](const Pair& a, const Pair& b) {
      return MPoly::greater(b.l, a.l);
    });
    Pair pr = *it;
    P.erase(it);
    const MPoly& a = G[pr.i];
    const MPoly& b = G[pr.j];
    if (coprime(a.lead_mono(), b.lead_mono())) continue;
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j || !divides(G[k].lead_mono(), pr.l)) continue;
      auto pending = [&](std::size_t x, std::size_t y) {
        if (x > y) std::swap(x, y);
        for (const auto& q : P)
          if (q.i == x && q.j == y) return true;
        return false;
      };
      if (!pending(pr.i, k) && !pending(pr.j, k)) skip = true;
    }
    if (skip) continue;
    MPoly s = a.mul_term(mdiv(pr.l, a.lead_mono()), Q(1)) - b.mul_term(mdiv(pr.l, b.lead_mono()), Q(1));
    MPoly r = normal_form(s, G);
    if (r.is_zero()) continue;
    r = r.monic();
    if (mdeg(r.lead_mono()) == 0) return {MPoly::constant(r.nvars(), 1)};
    G.push_back(r);
    alive.push_back(true);
    add_pairs(G.size() - 1);
  }
  // Interreduce.
  std::vector<MPoly> B;
  for (std::size_t k = 0; k < G.size(); ++k)
    if (alive[k]) B.push_back(G[k]);
  std::vector<MPoly> M;
  for (std::size_t k = 0; k < B.size(); ++k) {
    bool red = false;
    for (std::size_t j = 0; j < B.size() && !red; ++j)
      if (j != k && divides(B[j].lead_mono(), B[k].lead_mono()) &&
          (B[j].lead_mono() != B[k].lead_mono() || j < k))
        red = true;
    if (!red) M.push_back(B[k]);
  }
  std::vector<MPoly> R;
  for (std::size_t k = 0; k < M.size(); ++k) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != k) others.push_back(M[j]);
    R.push_back(normal_form(M[k], others).monic());
  }
  std::sort(R.begin(), R.end(), [](const MPoly& a, const MPoly& b) {
    return MPoly::greater(b.lead_mono(), a.lead_mono());
  });
  return R;
}

namespace {

std::vector<Mono> standard_monomials(const std::vector<MPoly>& G, int n) {
  // Zero-dimensional iff every variable has a pure-power leading monomial.
  std::vector<int> bound(n, -1);
  for (const auto& g : G) {
    const Mono& m = g.lead_mono();
    int nz = 0, which = -1;
    for (int i = 0; i < n; ++i)
      if (m[i]) {
        ++nz;
        which = i;
      }
    if (nz == 1) bound[which] = bound[which] < 0 ? m[which] : std::min(bound[which], m[which]);
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) throw Inconclusive("polynomial system is not zero-dimensional");
  std::vector<Mono> out;
  Mono cur(n, 0);
  while (true) {
    bool std_m = true;
    for (const auto& g : G)
      if (divides(g.lead_mono(), cur)) {
        std_m = false;
        break;
      }
    if (std_m) out.push_back(cur);
    int i = 0;
    while (i < n) {
      if (++cur[i] < bound[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

UniPoly min_poly_of_var(const std::vector<MPoly>& G, int var, int n) {
  std::vector<Mono> basis = standard_monomials(G, n);
  std::map<Mono, std::size_t> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = k;
  const std::size_t D = basis.size();
  std::vector<std::vector<Q>> rows, combos;
  std::vector<std::size_t> pivots;
  MPoly pw = MPoly::constant(n, 1);
  MPoly x = MPoly::var(n, var);
  for (std::size_t k = 0; k <= D; ++k) {
    MPoly nf = normal_form(pw, G);
    std::vector<Q> row(D);
    for (const auto& [m, c] : nf.terms()) row[idx.at(m)] = c;
    std::vector<Q> comb(D + 1);
    comb[k] = 1;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      Q c = row[pivots[t]];
      if (c == 0) continue;
      for (std::size_t i = 0; i < D; ++i) row[i] -= c * rows[t][i];
      for (std::size_t i = 0; i <= D; ++i) comb[i] -= c * combos[t][i];
    }
    std::size_t piv = D;
    for (std::size_t i = 0; i < D; ++i)
      if (row[i] != 0) {
        piv = i;
        break;
      }
    if (piv == D) return UniPoly(comb);
    Q inv = 1 / row[piv];
    for (auto& v : row) v *= inv;
    for (auto& v : comb) v *= inv;
    rows.push_back(row);
    combos.push_back(comb);
    pivots.push_back(piv);
    pw = nf * x;
  }
  throw TheoremViolation("minimal polynomial not found within the quotient dimension");
}

void solve_rec(const std::vector<MPoly>& F, int n, int var, std::vector<std::vector<Q>>& out) {
  std::vector<MPoly> G = groebner(F);
  if (G.size() == 1 && G[0].total_degree() == 0) return;
  if (var == n) {
    std::vector<Q> pt(n);
    // Every variable is fixed by a linear generator x_i - r.
    for (int i = 0; i < n; ++i) {
      MPoly nf = normal_form(MPoly::var(n, i), G);
      if (nf.total_degree() > 0) throw TheoremViolation("variable not determined");
      pt[i] = nf.is_zero() ? Q(0) : nf.lead_coeff();
    }
    out.push_back(pt);
    return;
  }
  UniPoly mp = min_poly_of_var(G, var, n);
  for (const Q& r : rational_roots(mp)) {
    std::vector<MPoly> H = G;
    H.push_back(MPoly::var(n, var) - MPoly::constant(n, r));
    solve_rec(H, n, var + 1, out);
  }
}

}  // namespace

std::vector<std::vector<Q>> solve_rational(const std::vector<MPoly>& F) {
  std::vector<std::vector<Q>> out;
  if (F.empty()) throw Inconclusive("empty system");
  solve_rec(F, F[0].nvars(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rdyn
