#include "rdyn/place.hpp"

#include <algorithm>
#include <map>

#include "rdyn/errors.hpp"
#include "rdyn/factor.hpp"

namespace rdyn {

Place Place::rational(const Q& a) {
  Place p;
  p.inf_ = false;
  p.g_ = UniPoly{-a, Q(1)};
  return p;
}

Place Place::of(const P1& p) { return p.inf ? infinity() : rational(p.v); }

Place Place::from_minpoly(const UniPoly& g) {
  if (g.deg() < 1) throw PreconditionError("place needs a nonconstant minimal polynomial");
  Place p;
  p.inf_ = false;
  p.g_ = g.monic();
  return p;
}

P1 Place::point() const {
  if (inf_) return P1::infinity();
  if (g_.deg() != 1) throw PreconditionError("place is not rational");
  return P1::finite(-g_.coeff(0));
}

bool operator<(const Place& a, const Place& b) {
  if (a.inf_ != b.inf_) return b.inf_;
  if (a.inf_) return false;
  if (a.g_.deg() != b.g_.deg()) return a.g_.deg() < b.g_.deg();
  if (a.g_.deg() == 1) return -a.g_.coeff(0) < -b.g_.coeff(0);
  return a.g_ < b.g_;
}

std::string Place::str() const {
  if (inf_) return "inf";
  if (g_.deg() == 1) return Q(-g_.coeff(0)).get_str();
  return "root(" + g_.str() + ")";
}

std::vector<Place> places_of(const UniPoly& p) {
  std::vector<Place> out;
  if (p.deg() < 1) return out;
  for (const auto& [g, e] : factor_univariate(p).factors) {
    (void)e;
    out.push_back(Place::from_minpoly(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

UniPoly wronskian(const RatMap& f) {
  return f.num().derivative() * f.den() - f.num() * f.den().derivative();
}

RatMap at_infinity(const RatMap& f) { return compose(f, RatMap::mobius(0, 1, 1, 0)); }

// Norm of num(f) - c den(f) over the conjugates c of p; zero set is f^{-1}(p)
// away from infinity.
UniPoly fiber_norm(const RatMap& f, const Place& p) {
  if (p.is_infinity()) return f.den();
  const UniPoly& m = p.minpoly();
  const int r = m.deg();
  UniPoly N;
  UniPoly fnp = UniPoly::constant(1);
  std::vector<UniPoly> fdp(r + 1);
  fdp[0] = UniPoly::constant(1);
  for (int i = 1; i <= r; ++i) fdp[i] = fdp[i - 1] * f.den();
  for (int i = 0; i <= r; ++i) {
    if (m.coeff(i) != 0) N += fnp * fdp[r - i] * m.coeff(i);
    fnp *= f.num();
  }
  return N;
}

int infinity_multiplicity(const RatMap& f, const Place& p, const UniPoly& N) {
  if (p.is_infinity()) return std::max(0, f.num().deg() - f.den().deg());
  return f.deg() * p.degree() - N.deg();
}

}  // namespace

int local_degree(const RatMap& f, const Place& p) {
  if (f.deg() < 1) throw PreconditionError("local degree of a constant map");
  if (p.is_infinity()) return local_degree(at_infinity(f), Place::rational(0));
  UniPoly W = wronskian(f);
  if (W.is_zero()) return 1;
  return 1 + valuation(W, p.minpoly());
}

Place image_place(const RatMap& f, const Place& p) {
  if (p.is_infinity()) return Place::of(f.eval(P1::infinity()));
  const UniPoly& g = p.minpoly();
  const int r = g.deg();
  UniPoly dm = f.den() % g;
  if (dm.is_zero()) return Place::infinity();
  UniPoly v = (f.num() * invmod(dm, g)) % g;
  // Minimal polynomial of v in Q[z]/g by linear dependence of powers.
  std::vector<std::vector<Q>> rows;  // reduced basis rows with pivot columns
  std::vector<int> pivots;
  std::vector<std::vector<Q>> combos;  // expression of each row in powers of v
  UniPoly pw = UniPoly::constant(1);
  for (int k = 0; k <= r; ++k) {
    std::vector<Q> row(r);
    for (int i = 0; i < r; ++i) row[i] = pw.coeff(i);
    std::vector<Q> comb(r + 1);
    comb[k] = 1;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      Q c = row[pivots[t]];
      if (c == 0) continue;
      for (int i = 0; i < r; ++i) row[i] -= c * rows[t][i];
      for (int i = 0; i <= r; ++i) comb[i] -= c * combos[t][i];
    }
    int piv = -1;
    for (int i = 0; i < r; ++i)
      if (row[i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Place::from_minpoly(UniPoly(comb));
    Q inv = 1 / row[piv];
    for (auto& x : row) x *= inv;
    for (auto& x : comb) x *= inv;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      Q c = rows[t][piv];
      if (c == 0) continue;
      for (int i = 0; i < r; ++i) rows[t][i] -= c * row[i];
      for (int i = 0; i <= r; ++i) combos[t][i] -= c * comb[i];
    }
    rows.push_back(row);
    combos.push_back(comb);
    pivots.push_back(piv);
    pw = (pw * v) % g;
  }
  throw TheoremViolation("minimal polynomial search overflowed");
}

std::vector<std::pair<Place, int>> preimage_places(const RatMap& f, const Place& p) {
  if (f.deg() < 1) throw PreconditionError("preimage under a constant map");
  UniPoly N = fiber_norm(f, p);
  std::vector<std::pair<Place, int>> out;
  if (N.deg() >= 1)
    for (const auto& [g, e] : factor_univariate(N).factors) out.emplace_back(Place::from_minpoly(g), e);
  int ei = infinity_multiplicity(f, p, N);
  if (ei > 0) out.emplace_back(Place::infinity(), ei);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> fiber_partition(const RatMap& f, const Place& p) {
  if (f.deg() < 1) throw PreconditionError("fiber of a constant map");
  UniPoly N = fiber_norm(f, p);
  const int r = p.degree();
  std::map<int, int> prof;
  if (N.deg() >= 1)
    for (const auto& [s, e] : squarefree_decomposition(N))
      if (s.deg() > 0) prof[e] += s.deg() / r;
  int ei = infinity_multiplicity(f, p, N);
  if (ei > 0) prof[ei] += 1;
  return {prof.begin(), prof.end()};
}

std::vector<Place> critical_points(const RatMap& f) {
  if (f.deg() < 1) return {};
  std::vector<Place> out = places_of(wronskian(f));
  if (local_degree(f, Place::infinity()) > 1) out.push_back(Place::infinity());
  return out;
}

std::vector<Place> critical_values(const RatMap& f) {
  std::vector<Place> out;
  for (const auto& c : critical_points(f)) out.push_back(image_place(f, c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int geometric_count(const std::vector<Place>& ps) {
  int n = 0;
  for (const auto& p : ps) n += p.degree();
  return n;
}

}  // namespace rdyn
