#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdyn/orbifold.hpp"

namespace rdyn {

enum class Witness { None, Rational, ExtensionNeeded };

// mu o A o mu^{-1} == sign-form of degree n (z^{+-n} or +-T_n). mu is set
// only for Rational witnesses.
struct Conjugacy {
  Witness status = Witness::None;
  std::optional<RatMap> mu;
  int n = 0;
  int sign = 1;
};

Conjugacy detect_power_conjugacy(const RatMap& A);
Conjugacy detect_chebyshev_conjugacy(const RatMap& A);

// The covering orbifold of a Lattes map.
std::optional<Orbifold> is_lattes(const RatMap& A);

// The maximal orbifold O with A: O -> O minimal holomorphic, restricted to
// good orbifolds. Trivial means A is not a generalized Lattes map. Throws
// NotDefined for maps conjugate to z^{+-n} or +-T_n.
Orbifold maximal_orbifold(const RatMap& A);

// Galois covering with o2_of(theta) == o for signatures {n,n}, {2,2,n},
// {2,3,3}, {2,3,4}, {2,3,5} at rational places.
RatMap theta(const Orbifold& o);

// Mobius mu with mu(a_i) = b_i.
RatMap mobius_3pt(const P1& a1, const P1& a2, const P1& a3, const P1& b1, const P1& b2,
                  const P1& b3);

// All Mobius mu over Q with mu o B1 == B2 o mu, sorted.
std::vector<RatMap> conjugators(const RatMap& B1, const RatMap& B2);
// G1: B o mu == B.  G2: mu^{-1} o B o mu == B.
std::vector<RatMap> mobius_left_stabilizer(const RatMap& B);
std::vector<RatMap> mobius_commutant(const RatMap& B);

enum class SpecialTag { PowerConjugate, ChebyshevConjugate, Lattes, GeneralizedLattes, NonSpecialNonGL };

struct SpecialClass {
  SpecialTag tag = SpecialTag::NonSpecialNonGL;
  int n = 0;
  int sign = 1;
  bool over_extension = false;
  std::optional<RatMap> mu;
  std::optional<Orbifold> orbifold;
};

SpecialClass classify(const RatMap& A);
std::string tag_name(SpecialTag t);

// Postcritical places, or nullopt once more than `cap` geometric points
// appear.
std::optional<std::vector<Place>> postcritical_set(const RatMap& A, int cap);

}  // namespace rdyn
