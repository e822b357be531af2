#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdyn/curves.hpp"
#include "rdyn/ratmap.hpp"

namespace rdyn {

struct SearchConfig {
  int d1 = 1, d2 = 1;  // bidegree: degree in x, degree in y
  int iterate_cap = 2;
  bool include_lines = false;
  bool dedup_by_symmetry = false;
};

enum class Completeness { Complete, CompleteUpToCap, Inconclusive };
std::string completeness_name(Completeness c);

struct CurveCertificate {
  BiCurve curve;
  RatMap X1, X2, B;  // A1 o X1 = X1 o B, A2 o X2 = X2 o B, curve = (X1, X2)(P1)
  int period = 1;
  std::vector<IdentityCheck> identities;
};

// x = at (vertical) or y = at (horizontal), at a fixed point.
struct Line {
  bool vertical = true;
  P1 at;
  friend bool operator==(const Line& a, const Line& b) { return a.vertical == b.vertical && a.at == b.at; }
  std::string str() const;
};

struct SearchReport {
  std::vector<CurveCertificate> curves;
  std::vector<Line> lines;
  Completeness completeness = Completeness::CompleteUpToCap;
  int cap = 0;
  std::vector<std::string> notes;
  std::vector<BiCurve> curve_list() const;
};

std::vector<Line> fixed_lines(const RatMap& A1, const RatMap& A2);

SearchReport find_invariant_curves(const RatMap& A1, const RatMap& A2, const SearchConfig& cfg);
SearchReport find_periodic_curves(const RatMap& A1, const RatMap& A2, const SearchConfig& cfg, int period_cap);

struct ComponentOrbit {
  BiCurve component;
  std::optional<int> tail, period;
};
struct PreperiodicReport {
  int n = 0;  // Y_i o A_i^n = B o Y_i
  RatMap B;
  std::vector<ComponentOrbit> components;
};
PreperiodicReport find_preperiodic_components(const RatMap& A1, const RatMap& A2, const RatMap& Y1,
                                              const RatMap& Y2, int n_cap = 4, int orbit_cap = 4);

struct ThetaReduction {
  RatMap B1, B2, X1, X2;  // A_i o X_i = X_i o B_i
};
ThetaReduction reduce_via_theta(const RatMap& A1, const RatMap& A2);
// Push curves found for (B1, B2) forward to (A1, A2).
std::vector<BiCurve> push_forward(const ThetaReduction& r, const std::vector<BiCurve>& curves);

// Curves (U1, U2)(P1) with U_i commuting with A and left factors of A^N.
SearchReport commuting_route(const RatMap& A, const SearchConfig& cfg);
// Maps of degree k commuting with A that are left factors of A^N.
std::vector<RatMap> commuting_left_factors(const RatMap& A, int k, int N);

}  // namespace rdyn
