#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rdyn/place.hpp"

namespace rdyn {

// Ramification function on the sphere: nu(p) >= 2 on finitely many places,
// 1 elsewhere. Places are irreducible, so distinct places never overlap.
class Orbifold {
 public:
  Orbifold() = default;
  Orbifold(std::initializer_list<std::pair<const Place, int>> ram);

  int nu(const Place& p) const;
  void set(const Place& p, int v);  // v == 1 clears
  const std::map<Place, int>& ram() const { return ram_; }
  std::vector<Place> support() const;
  bool is_trivial() const { return ram_.empty(); }
  // Sorted nu values, one per geometric point.
  std::vector<int> signature() const;
  // Not one singular point, and not two with distinct nu.
  bool is_good() const;

  friend bool operator==(const Orbifold& a, const Orbifold& b) { return a.ram_ == b.ram_; }
  friend bool operator!=(const Orbifold& a, const Orbifold& b) { return !(a == b); }
  friend bool operator<(const Orbifold& a, const Orbifold& b) { return a.ram_ < b.ram_; }

  // "{0:2, inf:2}".
  std::string str() const;

 private:
  std::map<Place, int> ram_;
};

Q chi(const Orbifold& o);
bool preceq(const Orbifold& a, const Orbifold& b);
Orbifold lcm_join(const Orbifold& a, const Orbifold& b);

Orbifold o2_of(const RatMap& f);
Orbifold o1_of(const RatMap& f);
Orbifold pullback(const RatMap& f, const Orbifold& o);

bool is_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2);
bool is_covering(const RatMap& f, const Orbifold& o1, const Orbifold& o2);
bool is_min_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2);

// chi(o1) == deg f * chi(o2); throws PreconditionError unless f is a covering.
bool rh_identity_check(const RatMap& f, const Orbifold& o1, const Orbifold& o2);
// chi(o1) <= deg f * chi(o2) with equality exactly for coverings; throws
// PreconditionError unless f is holomorphic.
bool chi_inequality_check(const RatMap& f, const Orbifold& o1, const Orbifold& o2);
// (g o f)^* o == f^*(g^* o).
bool functoriality_check(const RatMap& f, const RatMap& g, const Orbifold& o);
// c(o2) is contained in the critical values of A.
bool toch_predicate(const RatMap& A, const Orbifold& o1, const Orbifold& o2);

}  // namespace rdyn
