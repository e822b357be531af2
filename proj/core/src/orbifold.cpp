#include "rdyn/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rdyn/errors.hpp"

namespace rdyn {

Orbifold::Orbifold(std::initializer_list<std::pair<const Place, int>> ram) {
  for (const auto& [p, v] : ram) set(p, v);
}

int Orbifold::nu(const Place& p) const {
  auto it = ram_.find(p);
  return it == ram_.end() ? 1 : it->second;
}

void Orbifold::set(const Place& p, int v) {
  if (v < 1) throw PreconditionError("ramification value must be positive");
  if (v == 1)
    ram_.erase(p);
  else
    ram_[p] = v;
}

std::vector<Place> Orbifold::support() const {
  std::vector<Place> s;
  for (const auto& [p, v] : ram_) s.push_back(p);
  return s;
}

std::vector<int> Orbifold::signature() const {
  std::vector<int> s;
  for (const auto& [p, v] : ram_)
    for (int k = 0; k < p.degree(); ++k) s.push_back(v);
  std::sort(s.begin(), s.end());
  return s;
}

bool Orbifold::is_good() const {
  auto s = signature();
  if (s.size() == 1) return false;
  if (s.size() == 2 && s[0] != s[1]) return false;
  return true;
}

std::string Orbifold::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, v] : ram_) {
    out += (first ? "" : ", ") + p.str() + ":" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

Q chi(const Orbifold& o) {
  Q c = 2;
  for (const auto& [p, v] : o.ram()) c += Q(p.degree()) * (Q(1, v) - 1);
  return c;
}

bool preceq(const Orbifold& a, const Orbifold& b) {
  for (const auto& [p, v] : a.ram())
    if (b.nu(p) % v != 0) return false;
  return true;
}

Orbifold lcm_join(const Orbifold& a, const Orbifold& b) {
  Orbifold r = a;
  for (const auto& [p, v] : b.ram()) r.set(p, std::lcm(r.nu(p), v));
  return r;
}

Orbifold o2_of(const RatMap& f) {
  if (f.deg() < 2) throw PreconditionError("map of degree at least 2 required");
  Orbifold o;
  for (const auto& q : critical_values(f)) {
    int l = 1;
    for (const auto& [m, c] : fiber_partition(f, q)) {
      (void)c;
      l = std::lcm(l, m);
    }
    o.set(q, l);
  }
  return o;
}

Orbifold o1_of(const RatMap& f) {
  Orbifold o2 = o2_of(f);
  Orbifold o;
  for (const auto& [q, v] : o2.ram())
    for (const auto& [p, e] : preimage_places(f, q)) o.set(p, v / e);
  return o;
}

Orbifold pullback(const RatMap& f, const Orbifold& o) {
  Orbifold r;
  for (const auto& [q, v] : o.ram())
    for (const auto& [p, e] : preimage_places(f, q)) r.set(p, v / std::gcd(e, v));
  return r;
}

namespace {

// Places where the pointwise conditions can fail.
std::set<Place> check_set(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  std::set<Place> s;
  for (const auto& [p, v] : o1.ram()) s.insert(p);
  for (const auto& [q, v] : o2.ram())
    for (const auto& [p, e] : preimage_places(f, q)) s.insert(p);
  for (const auto& c : critical_points(f)) s.insert(c);
  return s;
}

}  // namespace

bool is_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  for (const auto& p : check_set(f, o1, o2))
    if ((o1.nu(p) * local_degree(f, p)) % o2.nu(image_place(f, p)) != 0) return false;
  return true;
}

bool is_covering(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  for (const auto& p : check_set(f, o1, o2))
    if (o1.nu(p) * local_degree(f, p) != o2.nu(image_place(f, p))) return false;
  return true;
}

bool is_min_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  return o1 == pullback(f, o2);
}

bool rh_identity_check(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  if (!is_covering(f, o1, o2)) throw PreconditionError("map is not a covering of orbifolds");
  return chi(o1) == Q(f.deg()) * chi(o2);
}

bool chi_inequality_check(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  if (!is_holomorphic(f, o1, o2)) throw PreconditionError("map is not holomorphic between orbifolds");
  Q lhs = chi(o1), rhs = Q(f.deg()) * chi(o2);
  return lhs <= rhs && ((lhs == rhs) == is_covering(f, o1, o2));
}

bool functoriality_check(const RatMap& f, const RatMap& g, const Orbifold& o) {
  return pullback(compose(g, f), o) == pullback(f, pullback(g, o));
}

bool toch_predicate(const RatMap& A, const Orbifold& o1, const Orbifold& o2) {
  if (A.deg() < 5) throw PreconditionError("degree at least 5 required");
  if (o1.is_trivial() || o2.is_trivial()) throw PreconditionError("nontrivial orbifolds required");
  if (chi(o1) < 0) throw PreconditionError("nonnegative Euler characteristic required");
  if (!is_min_holomorphic(A, o1, o2)) throw PreconditionError("map is not minimal holomorphic");
  Orbifold oa = o2_of(A);
  for (const auto& [p, v] : o2.ram())
    if (oa.nu(p) == 1) return false;
  return true;
}

}  // namespace rdyn
