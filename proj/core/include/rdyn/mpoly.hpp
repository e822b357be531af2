#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdyn/poly.hpp"

namespace rdyn {

// Sparse polynomial over Q in a fixed number of variables, terms kept in
// decreasing graded reverse lexicographic order.
class MPoly {
 public:
  using Mono = std::vector<int>;
  using Term = std::pair<Mono, Q>;

  explicit MPoly(int nvars = 0) : n_(nvars) {}
  static MPoly constant(int nvars, const Q& c);
  static MPoly var(int nvars, int i);
  static MPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  const Mono& lead_mono() const { return t_.front().first; }
  const Q& lead_coeff() const { return t_.front().second; }
  int total_degree() const;

  MPoly monic() const;
  MPoly scaled(const Q& s) const;
  MPoly mul_term(const Mono& m, const Q& c) const;
  Q eval(const std::vector<Q>& at) const;
  // Substitute x_i := value.
  MPoly substitute(int i, const Q& value) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

  std::string str() const;

  // true if a > b in grevlex.
  static bool greater(const Mono& a, const Mono& b);

 private:
  int n_;
  std::vector<Term> t_;
};


// Reduced Groebner basis (grevlex), monic, sorted.
std::vector<MPoly> groebner(std::vector<MPoly> F);
MPoly normal_form(const MPoly& p, const std::vector<MPoly>& G);

// All rational solutions of a zero-dimensional system, sorted. Throws
// Inconclusive if the system has infinitely many complex solutions.
std::vector<std::vector<Q>> solve_rational(const std::vector<MPoly>& F);

}  // namespace rdyn
