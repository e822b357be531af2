#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rdyn/ratmap.hpp"

namespace rdyn {

// A closed point of P^1 over Q: infinity, or a monic irreducible minpoly.
class Place {
 public:
  Place() : inf_(true) {}
  static Place infinity() { return Place(); }
  static Place rational(const Q& a);
  static Place of(const P1& p);
  // g must be irreducible over Q; it is made monic.
  static Place from_minpoly(const UniPoly& g);

  bool is_infinity() const { return inf_; }
  bool is_rational() const { return inf_ || g_.deg() == 1; }
  int degree() const { return inf_ ? 1 : g_.deg(); }
  const UniPoly& minpoly() const { return g_; }
  P1 point() const;  // rational places only

  friend bool operator==(const Place& a, const Place& b) {
    return a.inf_ == b.inf_ && a.g_ == b.g_;
  }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  // Finite places by minpoly, infinity last.
  friend bool operator<(const Place& a, const Place& b);

  // "inf", a rational number, or "root(minpoly)".
  std::string str() const;

 private:
  bool inf_;
  UniPoly g_;
};

// Places dividing p (its distinct irreducible factors).
std::vector<Place> places_of(const UniPoly& p);

// Local degree of f at every geometric point of p.
int local_degree(const RatMap& f, const Place& p);
// The place f(p).
Place image_place(const RatMap& f, const Place& p);
// Places over p with their local degrees, sorted.
std::vector<std::pair<Place, int>> preimage_places(const RatMap& f, const Place& p);
// Multiplicity profile over one geometric point of p:
// sorted (multiplicity, number of points).
std::vector<std::pair<int, int>> fiber_partition(const RatMap& f, const Place& p);

std::vector<Place> critical_points(const RatMap& f);
std::vector<Place> critical_values(const RatMap& f);

// Number of geometric points in a set of places.
int geometric_count(const std::vector<Place>& ps);

}  // namespace rdyn
