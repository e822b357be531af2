#pragma once

#include <optional>
#include <vector>

#include "rdyn/poly.hpp"
#include "rdyn/ratmap.hpp"

namespace rdyn {

// outer o inner.
struct Decomposition {
  RatMap outer;
  RatMap inner;
};

struct CommonRightFactor {
  RatMap w, f1, g1;  // f = f1 o w, g = g1 o w
};

// Largest common compositional right factor, from the gcd of the
// difference polynomials of f and g.
CommonRightFactor max_common_right_factor(const RatMap& f, const RatMap& g);

// All R with X o R = F.
std::vector<RatMap> left_divide(const RatMap& F, const RatMap& X);
// X with X o W = F, if any.
std::optional<RatMap> right_divide(const RatMap& F, const RatMap& W);

// Right factors of F of degree k, one per class w ~ mu o w, found by
// assembling subsets of the factors of the difference polynomial.
std::vector<RatMap> all_right_factors(const RatMap& F, int k);
// Degree-n left factors of F, one per class X ~ X o mu.
std::vector<RatMap> all_left_factors(const RatMap& F, int n);

// X1 == X2 o mu for some Mobius mu.
bool mu_equivalent(const RatMap& X1, const RatMap& X2);

RatMap elementary_transform(const RatMap& A, const Decomposition& split);

struct WalkEdge {
  int from, to;
  Decomposition split;  // reps[from] = outer o inner, reps[to] = inner o outer
};
struct EquivalenceWalk {
  std::vector<RatMap> representatives;
  std::vector<WalkEdge> edges;
};
EquivalenceWalk equivalence_walk(const RatMap& A, int depth);

struct ChainAssembly {
  RatMap U, V;
  int s = 0;
};
// path[i] = (V_{i+1}, U_{i+1}) with A = V_1 o U_1.
ChainAssembly assemble_chain(const std::vector<Decomposition>& path);

bool verify_semiconjugacy(const RatMap& A, const RatMap& X, const RatMap& B);

struct SemiconjugacyCompletion {
  RatMap Y;
  int d = 0;
  std::vector<Decomposition> chain;  // elementary transformations from B
};
// Y with Y o X = B^d and X o Y = A^d. Requires A o X = X o B and A not a
// generalized Lattes map (unless deg X = 1).
SemiconjugacyCompletion complete_semiconjugacy(const RatMap& A, const RatMap& X, const RatMap& B);

struct Normalized {
  int N = 0;
  RatMap R;
};
// Least N with A^N = X o R' and R = R' o A^(d-N).
Normalized normalize_left_factor(const RatMap& A, const RatMap& X, const RatMap& R, int d);

// W[d-1] o h[d-1] = A o W[d]; h[i] is the rung between columns i and i+1.
struct Diagram {
  RatMap base;
  std::vector<RatMap> columns;
  std::vector<RatMap> rungs;
  bool seeded = false;  // built from a relation W0 o R = A^N
  bool good = false;
};
Diagram good_diagram_chain(const RatMap& A, const RatMap& W0, int N);
bool diagram_commutes(const Diagram& D);

struct Periodicity {
  int N0 = 0;
  int r = 0;
  std::vector<RatMap> alphas;  // W[j + r] = W[j] o alphas[j - N0]
};
std::optional<Periodicity> detect_periodicity(const Diagram& D);

// Deliberately loose explicit bounds.
Z bound_kappa(int m);
Z bound_C(int m);
Z bound_psi(int m, int n);
Z bound_phi(int m, int n);
bool theorem_m2_gate(int n, int m, int g);

struct GoodSolutionReport {
  bool irreducible = false;     // f(x) - g(y) irreducible
  bool no_common_right = false; // p, q share no right factor
  bool degrees_match = false;   // deg f = deg q and deg g = deg p
  bool good() const { return int(irreducible) + int(no_common_right) + int(degrees_match) >= 2; }
};
// For f o p = g o q. Throws TheoremViolation if exactly two conditions hold.
GoodSolutionReport good_solution_report(const RatMap& f, const RatMap& p, const RatMap& g,
                                        const RatMap& q);
bool is_good_solution(const RatMap& f, const RatMap& p, const RatMap& g, const RatMap& q);

}  // namespace rdyn
