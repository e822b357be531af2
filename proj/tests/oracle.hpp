#pragma once

// Coefficient-space brute force for invariant curves of (A, A), A a
// polynomial: solve C(A(x), A(y)) = C(x, y) Q(x, y) for the coefficients of
// C and Q directly. Shares no code with the search beyond the Groebner
// solver.

#include <map>
#include <vector>

#include "rdyn/rdyn.hpp"

namespace oracle {

using namespace rdyn;

// Irreducible curves of exact bidegree (d1, d2) invariant under (A, A).
inline std::vector<BiPoly> invariant_curves(const UniPoly& A, int d1, int d2) {
  const int a = A.deg();
  const int nc = (d1 + 1) * (d2 + 1);
  const int qd1 = (a - 1) * d1, qd2 = (a - 1) * d2;
  const int nq = (qd1 + 1) * (qd2 + 1);
  const int nv = nc + nq;
  auto cidx = [&](int i, int j) { return i * (d2 + 1) + j; };
  auto qidx = [&](int i, int j) { return nc + i * (qd2 + 1) + j; };

  std::vector<UniPoly> Ap(static_cast<std::size_t>(std::max(d1, d2)) + 1);
  Ap[0] = UniPoly::constant(1);
  for (std::size_t k = 1; k < Ap.size(); ++k) Ap[k] = Ap[k - 1] * A;

  std::vector<BiPoly> out;
  // deg_x C = d1 forces a lex-leading monomial x^d1 y^lead; one chart each.
  for (int lead = d2; lead >= 0; --lead) {
    const int ql = (a - 1) * lead;
    Q qlc = 1;
    for (int k = 0; k < d1 + lead; ++k) qlc *= A.lead();
    auto cvar = [&](int i, int j) {
      if (i == d1 && j > lead) return MPoly(nv);
      return MPoly::var(nv, cidx(i, j));
    };
    auto qvar = [&](int s, int t) {
      if (s == qd1 && t > ql) return MPoly(nv);
      return MPoly::var(nv, qidx(s, t));
    };
    std::map<std::pair<int, int>, MPoly> diff;
    auto add = [&](int i, int j, const MPoly& p) {
      auto it = diff.find({i, j});
      if (it == diff.end())
        diff.emplace(std::make_pair(i, j), p);
      else
        it->second = it->second + p;
    };
    for (int i = 0; i <= d1; ++i)
      for (int j = 0; j <= d2; ++j) {
        const MPoly c = cvar(i, j);
        if (c.is_zero()) continue;
        for (int s = 0; s <= Ap[i].deg(); ++s)
          for (int t = 0; t <= Ap[j].deg(); ++t) {
            const Q k = Ap[i].coeff(s) * Ap[j].coeff(t);
            if (k != 0) add(s, t, c.scaled(k));
          }
        for (int s = 0; s <= qd1; ++s)
          for (int t = 0; t <= qd2; ++t) {
            const MPoly q = qvar(s, t);
            if (!q.is_zero()) add(i + s, j + t, (c * q).scaled(-1));
          }
      }
    std::vector<MPoly> eqs;
    for (auto& [ij, e] : diff)
      if (!e.is_zero()) eqs.push_back(e);
    for (int j = lead + 1; j <= d2; ++j) eqs.push_back(MPoly::var(nv, cidx(d1, j)));
    for (int t = ql + 1; t <= qd2; ++t) eqs.push_back(MPoly::var(nv, qidx(qd1, t)));
    eqs.push_back(MPoly::var(nv, cidx(d1, lead)) - MPoly::constant(nv, 1));
    eqs.push_back(MPoly::var(nv, qidx(qd1, ql)) - MPoly::constant(nv, qlc));
    for (const auto& s : solve_rational(eqs)) {
      std::map<std::pair<int, int>, Q> terms;
      for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d2; ++j) terms[{i, j}] = s[static_cast<std::size_t>(cidx(i, j))];
      BiPoly F = BiPoly::from_terms(terms);
      if (F.deg_x() == d1 && F.deg_y() == d2 && is_irreducible(F)) out.push_back(F.primitive());
    }
  }
  return out;
}

}  // namespace oracle
