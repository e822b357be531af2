#include "rdyn/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linalg.hpp"
#include "rdyn/classify.hpp"
#include "rdyn/errors.hpp"
#include "rdyn/series.hpp"

namespace rdyn {

namespace {

// w with num(w(x) - w(y)) proportional to G, read off the span of the
// y-coefficients of G.
std::optional<RatMap> from_difference(const BiPoly& G) {
  const int D = G.deg_x();
  if (D < 1) return std::nullopt;
  std::map<int, std::vector<Q>> rows;
  for (const auto& [ij, c] : G.terms()) {
    auto& row = rows[ij.second];
    row.resize(D + 1);
    row[D - ij.first] = c;  // descending x-degree
  }
  linalg::Matrix M;
  for (auto& [j, row] : rows) M.push_back(row);
  auto piv = linalg::rref(M);
  if (piv.size() != 2) return std::nullopt;
  auto to_poly = [&](const std::vector<Q>& r) {
    std::vector<Q> c(D + 1);
    for (int i = 0; i <= D; ++i) c[D - i] = r[i];
    return UniPoly(c);
  };
  RatMap w(to_poly(M[0]), to_poly(M[1]));
  if (w.deg() != D) return std::nullopt;
  if (difference_poly(w).primitive() != G.primitive()) return std::nullopt;
  return w;
}

// Largest b with b^n | a, using trial division and a perfect-power test
// on the cofactor.
Z nth_power_part(Z a, int n) {
  a = abs(a);
  Z b = 1;
  for (unsigned long p = 2; p < 10000 && a > 1; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
      a /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / n; ++i) b *= p;
  }
  Z r;
  if (a > 1 && mpz_root(r.get_mpz_t(), a.get_mpz_t(), n)) b *= r;
  return b;
}

// Class representative of X o mu for polynomials: centered, with the
// leading coefficient reduced to its n-th-power-free part.
RatMap normal_left_factor(const RatMap& X) {
  if (!X.is_polynomial() || X.deg() < 2) return X;
  const int n = X.deg();
  Q s = X.num().coeff(n - 1) / (Q(n) * X.num().lead());
  RatMap c = compose(X, RatMap::mobius(1, -s, 0, 1));
  const Q l = c.num().lead();
  Q a = Q(nth_power_part(l.get_den(), n), nth_power_part(l.get_num(), n));
  a.canonicalize();
  if (n % 2 == 1 && l < 0) a = -a;
  RatMap best = compose(c, RatMap::mobius(a, 0, 0, 1));
  if (n % 2 == 0) best = std::min(best, compose(c, RatMap::mobius(-a, 0, 0, 1)));
  return best;
}

bool lead_positive(const RatMap& U) { return U.num().lead() > 0; }

}  // namespace

CommonRightFactor max_common_right_factor(const RatMap& f, const RatMap& g) {
  if (f.deg() < 1 || g.deg() < 1) throw PreconditionError("max_common_right_factor needs nonconstant maps");
  BiPoly G = gcd(difference_poly(f), difference_poly(g));
  if (G.deg_x() <= 1) return {RatMap::identity(), f, g};
  auto w = from_difference(G);
  if (!w) throw TheoremViolation("gcd of difference polynomials is not a difference polynomial");
  auto f1 = right_divide(f, *w), g1 = right_divide(g, *w);
  if (!f1 || !g1) throw TheoremViolation("common right factor does not divide");
  return {*w, *f1, *g1};
}

std::vector<RatMap> left_divide(const RatMap& F, const RatMap& X) {
  if (X.deg() < 1) return {};
  return ratmap_roots(X, F);
}

std::optional<RatMap> right_divide(const RatMap& F, const RatMap& W) {
  if (W.deg() < 1 || F.deg() % W.deg() != 0) return std::nullopt;
  const int m = F.deg() / W.deg();
  std::vector<UniPoly> B(m + 1);
  for (int i = 0; i <= m; ++i) B[i] = W.num().pow(i) * W.den().pow(m - i);
  std::vector<UniPoly> cols;
  for (int i = 0; i <= m; ++i) cols.push_back(B[i] * F.den());
  for (int i = 0; i <= m; ++i) cols.push_back(-(B[i] * F.num()));
  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.deg() + 1);
  linalg::Matrix M(rows, std::vector<Q>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int r = 0; r <= cols[j].deg(); ++r) M[r][j] = cols[j].coeff(r);
  for (const auto& v : linalg::nullspace(M, static_cast<int>(cols.size()))) {
    UniPoly P(std::vector<Q>(v.begin(), v.begin() + m + 1));
    UniPoly Qd(std::vector<Q>(v.begin() + m + 1, v.end()));
    if (Qd.is_zero() || P.is_zero()) continue;
    RatMap X(P, Qd);
    if (compose(X, W) == F) return X;
  }
  return std::nullopt;
}

std::vector<RatMap> all_right_factors(const RatMap& F, int k) {
  if (k < 1 || F.deg() < 1 || F.deg() % k != 0) throw PreconditionError("degree must divide deg F");
  if (k == 1) return {RatMap::identity()};
  const BiPoly diag = BiPoly::x() - BiPoly::y();
  auto fac = factor_bivariate(difference_poly(F));
  std::vector<BiPoly> others;
  bool has_diag = false;
  for (const auto& [p, e] : fac.factors) {
    if (p == diag.primitive()) {
      has_diag = true;
      continue;
    }
    for (int i = 0; i < e; ++i) others.push_back(p);
  }
  if (!has_diag) throw TheoremViolation("x - y does not divide the difference polynomial");
  if (others.size() > 16) throw Inconclusive("right-factor subset enumeration exceeds 2^16");
  std::vector<RatMap> out;
  const std::size_t r = others.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
    int dx = 1, dy = 1;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) {
        dx += others[i].deg_x();
        dy += others[i].deg_y();
      }
    if (dx != k || dy != k) continue;
    BiPoly G = diag;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) G = G * others[i];
    auto w = from_difference(G);
    if (!w || !right_divide(F, *w)) continue;
    out.push_back(*w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool mu_equivalent(const RatMap& X1, const RatMap& X2) {
  if (X1.deg() != X2.deg()) return false;
  if (X1.deg() < 1) return X1 == X2;
  for (const auto& m : ratmap_roots(X2, X1))
    if (m.deg() == 1) return true;
  return false;
}

std::vector<RatMap> all_left_factors(const RatMap& F, int n) {
  if (n < 1 || F.deg() < 1 || F.deg() % n != 0) throw PreconditionError("degree must divide deg F");
  std::vector<RatMap> out;
  for (const auto& w : all_right_factors(F, F.deg() / n)) {
    auto X = right_divide(F, w);
    if (!X) continue;
    RatMap rep = X->deg() == 1 ? RatMap::identity() : normal_left_factor(*X);
    bool dup = false;
    for (const auto& o : out) dup = dup || mu_equivalent(o, rep);
    if (!dup) out.push_back(rep);
  }
  return out;
}

RatMap elementary_transform(const RatMap& A, const Decomposition& split) {
  if (compose(split.outer, split.inner) != A) throw PreconditionError("split does not compose to A");
  return compose(split.inner, split.outer);
}

EquivalenceWalk equivalence_walk(const RatMap& A, int depth) {
  if (A.deg() < 2) throw PreconditionError("map of degree at least 2 required");
  EquivalenceWalk W;
  W.representatives.push_back(A);
  auto index_of = [&](const RatMap& f) {
    auto it = std::find(W.representatives.begin(), W.representatives.end(), f);
    return it == W.representatives.end() ? -1 : int(it - W.representatives.begin());
  };
  std::vector<int> frontier{0};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<int> next;
    for (int idx : frontier) {
      const RatMap B = W.representatives[idx];
      for (int n = 2; n <= B.deg(); ++n) {
        if (B.deg() % n != 0) continue;
        for (const auto& V : all_left_factors(B, n)) {
          auto Us = left_divide(B, V);
          if (Us.empty()) continue;
          // The quotients differ by the stabilizer of V, so their
          // transforms are conjugate; keep one.
          int hit = -1;
          const RatMap* keep = nullptr;
          for (const auto& U : Us) {
            int j = index_of(compose(U, V));
            if (j >= 0) {
              hit = j;
              keep = &U;
              break;
            }
          }
          if (hit < 0) {
            keep = &Us.front();
            for (const auto& U : Us)
              if (lead_positive(U) && (!lead_positive(*keep) || U < *keep)) keep = &U;
            W.representatives.push_back(compose(*keep, V));
            hit = int(W.representatives.size()) - 1;
            next.push_back(hit);
          }
          if (hit != idx) W.edges.push_back({idx, hit, {V, *keep}});
        }
      }
    }
    frontier = std::move(next);
  }
  return W;
}

ChainAssembly assemble_chain(const std::vector<Decomposition>& path) {
  if (path.empty()) throw PreconditionError("chain of length at least 1 required");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (compose(path[i].inner, path[i].outer) != compose(path[i + 1].outer, path[i + 1].inner))
      throw PreconditionError("invalid elementary transformation chain at step " + std::to_string(i + 1));
  ChainAssembly r;
  r.s = static_cast<int>(path.size());
  r.U = RatMap::identity();
  r.V = RatMap::identity();
  for (const auto& step : path) {
    r.U = compose(step.inner, r.U);
    r.V = compose(r.V, step.outer);
  }
  const RatMap A = compose(path.front().outer, path.front().inner);
  const RatMap As = compose(path.back().inner, path.back().outer);
  if (compose(r.V, r.U) != iterate(A, r.s) || compose(r.U, r.V) != iterate(As, r.s))
    throw TheoremViolation("assembled chain fails V o U = A^s or U o V = A_s^s");
  return r;
}

bool verify_semiconjugacy(const RatMap& A, const RatMap& X, const RatMap& B) {
  return compose(A, X) == compose(X, B);
}

SemiconjugacyCompletion complete_semiconjugacy(const RatMap& A, const RatMap& X, const RatMap& B) {
  if (!verify_semiconjugacy(A, X, B)) throw PreconditionError("A o X != X o B");
  if (X.deg() < 1) throw PreconditionError("X must be nonconstant");
  SemiconjugacyCompletion out;
  if (X.deg() == 1) {
    out.Y = compose(B, X.inverse());
    out.d = 1;
    return out;
  }
  if (classify(A).tag != SpecialTag::NonSpecialNonGL)
    throw PreconditionError("A must be neither special nor a generalized Lattes map");
  RatMap Xi = X, Bi = B;
  for (int step = 0; Xi.deg() > 1; ++step) {
    if (step > X.deg()) throw TheoremViolation("semiconjugacy descent did not terminate");
    auto crf = max_common_right_factor(Bi, Xi);
    if (crf.w.deg() == 1)
      throw TheoremViolation("primitive semiconjugacy for a map that is not generalized Lattes");
    out.chain.push_back({crf.f1, crf.w});
    Xi = crf.g1;
    Bi = compose(crf.w, crf.f1);
  }
  auto l1 = assemble_chain(out.chain);
  out.d = l1.s;
  out.Y = compose(l1.V, Xi.inverse());
  if (compose(out.Y, X) != iterate(B, out.d) || compose(X, out.Y) != iterate(A, out.d))
    throw TheoremViolation("completed semiconjugacy fails Y o X = B^d or X o Y = A^d");
  return out;
}

Normalized normalize_left_factor(const RatMap& A, const RatMap& X, const RatMap& R, int d) {
  if (d < 1 || compose(X, R) != iterate(A, d)) throw PreconditionError("X o R != A^d");
  RatMap AN = RatMap::identity();
  for (int N = 1; N <= d; ++N) {
    AN = compose(A, AN);
    const RatMap tail = iterate(A, d - N);
    for (const auto& Rp : left_divide(AN, X))
      if (compose(Rp, tail) == R) return {N, Rp};
  }
  throw TheoremViolation("no consistent factorization up to N = d");
}

bool diagram_commutes(const Diagram& D) {
  if (D.columns.size() != D.rungs.size() + 1) return false;
  for (std::size_t d = 1; d < D.columns.size(); ++d)
    if (compose(D.columns[d - 1], D.rungs[d - 1]) != compose(D.base, D.columns[d])) return false;
  return true;
}

Diagram good_diagram_chain(const RatMap& A, const RatMap& W0, int N) {
  if (A.deg() < 2) throw PreconditionError("map of degree at least 2 required");
  if (N < 1 || W0.deg() < 1) throw PreconditionError("N >= 1 and nonconstant W0 required");
  Diagram D;
  D.base = A;
  D.columns.push_back(W0);
  auto seeds = left_divide(iterate(A, N), W0);
  if (!seeds.empty()) {
    // Descent along A^(N-d) = W_d o H_d, H_(d-1) = h_d o H_d.
    D.seeded = true;
    RatMap H = seeds.front();
    for (int d = 1; d <= N; ++d) {
      auto crf = max_common_right_factor(iterate(A, N - d), H);
      D.columns.push_back(crf.f1);
      D.rungs.push_back(crf.g1);
      H = crf.w;
    }
  } else {
    for (int d = 1; d <= N; ++d) {
      const RatMap& Wp = D.columns.back();
      std::optional<RatMap> h;
      for (const auto& c : left_divide(compose(A, Wp), Wp))
        if (max_common_right_factor(c, Wp).w.deg() == 1) {
          h = c;
          break;
        }
      if (!h) throw Inconclusive("diagram chain cannot extend at level " + std::to_string(d));
      D.rungs.push_back(*h);
      D.columns.push_back(Wp);
    }
  }
  if (!diagram_commutes(D)) throw TheoremViolation("constructed diagram does not commute");
  D.good = true;
  for (int d = 1; d <= N && D.good; ++d)
    D.good = is_good_solution(D.columns[d - 1], D.rungs[d - 1], A, D.columns[d]);
  return D;
}

std::optional<Periodicity> detect_periodicity(const Diagram& D) {
  const int N = static_cast<int>(D.columns.size()) - 1;
  auto witness = [&](int i, int j) -> std::optional<RatMap> {
    const RatMap& a = D.columns[i];
    const RatMap& b = D.columns[j];
    if (a.deg() != b.deg()) return std::nullopt;
    for (const auto& m : ratmap_roots(a, b))
      if (m.deg() == 1) return m;
    return std::nullopt;
  };
  for (int N0 = 0; N0 < N; ++N0) {
    for (int r = 1; r <= N - N0; ++r) {
      Periodicity p{N0, r, {}};
      bool ok = true;
      for (int j = N0; j + r <= N && ok; ++j) {
        auto a = witness(j, j + r);
        if (a)
          p.alphas.push_back(*a);
        else
          ok = false;
      }
      if (ok) return p;
    }
  }
  return std::nullopt;
}

Z bound_kappa(int m) {
  if (m < 1) throw PreconditionError("m >= 1 required");
  static const std::map<int, int> A4{{12, 1}, {6, 3}, {4, 4}, {3, 1}, {1, 1}};
  static const std::map<int, int> S4{{24, 1}, {12, 9}, {8, 4}, {6, 7}, {4, 4}, {3, 3}, {2, 1}, {1, 1}};
  static const std::map<int, int> A5{{60, 1}, {30, 15}, {20, 10}, {15, 5}, {12, 6}, {10, 10}, {6, 6}, {5, 5}, {1, 1}};
  int k = 3;  // cyclic and dihedral series
  for (const auto* t : {&A4, &S4, &A5}) {
    auto it = t->find(m);
    if (it != t->end()) k = std::max(k, it->second);
  }
  return k;
}

Z bound_C(int m) {
  if (m < 2) throw PreconditionError("m >= 2 required");
  Z r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, 2UL * m * m * m - 2);
  return 10 * r;
}

Z bound_psi(int m, int n) {
  if (m < 2 || n < 1) throw PreconditionError("m >= 2 and n >= 1 required");
  Z lg = 0;
  if (n > 2) {
    const Z target = 84 * Z(n - 2);
    Z p = 1;
    while (p < target) {
      p *= m;
      ++lg;
    }
  }
  return lg + bound_C(m) * bound_kappa(m) + 1;
}

Z bound_phi(int m, int n) { return bound_psi(m, n) * Z(n - 1) + 1; }

bool theorem_m2_gate(int n, int m, int g) {
  if (n < 1 || m < 1) throw PreconditionError("n, m >= 1 required");
  return Z(84) * g > Z(m) - 84 * Z(n) + 168;
}

GoodSolutionReport good_solution_report(const RatMap& f, const RatMap& p, const RatMap& g,
                                        const RatMap& q) {
  if (compose(f, p) != compose(g, q)) throw PreconditionError("f o p != g o q");
  GoodSolutionReport r;
  r.irreducible = is_irreducible(separated_poly(f, g));
  r.no_common_right = max_common_right_factor(p, q).w.deg() == 1;
  r.degrees_match = f.deg() == q.deg() && g.deg() == p.deg();
  int count = int(r.irreducible) + int(r.no_common_right) + int(r.degrees_match);
  if (count == 2) throw TheoremViolation("good solution satisfies only two of the three conditions");
  return r;
}

bool is_good_solution(const RatMap& f, const RatMap& p, const RatMap& g, const RatMap& q) {
  return good_solution_report(f, p, g, q).good();
}

}  // namespace rdyn
