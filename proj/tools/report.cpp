#include "report.hpp"

namespace rdyn::cli {

Json to_json(const Q& q) { return q.get_str(); }

Json to_json(const UniPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const RatMap& f) {
  return Json{{"text", f.str()}, {"degree", f.deg()}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const P1& p) { return p.str(); }

Json to_json(const Place& p) {
  Json j{{"text", p.str()}, {"degree", p.degree()}};
  if (!p.is_infinity()) j["minpoly"] = to_json(p.minpoly());
  return j;
}

Json to_json(const Orbifold& o) {
  Json places = Json::array();
  for (const auto& [p, v] : o.ram()) places.push_back(Json{{"place", to_json(p)}, {"nu", v}});
  Json sig = Json::array();
  for (int v : o.signature()) sig.push_back(v);
  return Json{{"text", o.str()}, {"signature", sig}, {"chi", to_json(chi(o))}, {"places", places}};
}

Json to_json(const BiPoly& F) {
  Json terms = Json::array();
  for (const auto& [ij, c] : F.terms()) terms.push_back(Json::array({ij.first, ij.second, c.get_str()}));
  return terms;
}

Json to_json(const BiCurve& C) {
  return Json{{"text", C.str()}, {"bidegree", Json::array({C.d1(), C.d2()})}, {"terms", to_json(C.poly())}};
}

Json to_json(const IdentityCheck& c, const std::string& theorem) {
  return Json{{"identity", c.name}, {"holds", c.holds}, {"theorem", theorem}};
}

Json to_json(const CurveCertificate& c, const std::string& theorem) {
  Json ids = Json::array();
  for (const auto& i : c.identities) ids.push_back(to_json(i, theorem));
  return Json{{"curve", to_json(c.curve)}, {"X1", to_json(c.X1)}, {"X2", to_json(c.X2)},
              {"B", to_json(c.B)},         {"period", c.period},     {"identities", ids}};
}

Json to_json(const Line& l) {
  return Json{{"text", l.str()}, {"vertical", l.vertical}, {"at", to_json(l.at)}};
}

Json to_json(const SearchReport& r, const std::string& theorem) {
  Json curves = Json::array();
  for (const auto& c : r.curves) curves.push_back(to_json(c, theorem));
  Json lines = Json::array();
  for (const auto& l : r.lines) lines.push_back(to_json(l));
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  return Json{{"theorem", theorem},
              {"completeness", completeness_name(r.completeness)},
              {"cap", r.cap},
              {"curves", curves},
              {"lines", lines},
              {"notes", notes}};
}

namespace {

UniPoly poly_from_json(const Json& a) {
  std::vector<Q> c;
  for (const auto& e : a) c.emplace_back(e.get<std::string>());
  for (auto& q : c) q.canonicalize();
  return UniPoly(std::move(c));
}

}  // namespace

RatMap map_from_json(const Json& j) { return RatMap(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

BiPoly bipoly_from_json(const Json& j) {
  const Json& t = j.is_object() ? j.at("terms") : j;
  std::map<std::pair<int, int>, Q> terms;
  for (const auto& e : t) {
    Q c(e.at(2).get<std::string>());
    c.canonicalize();
    terms[{e.at(0).get<int>(), e.at(1).get<int>()}] += c;
  }
  return BiPoly::from_terms(terms);
}

}  // namespace rdyn::cli
