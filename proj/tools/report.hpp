#pragma once

#include <json.hpp>
#include <string>

#include "rdyn/rdyn.hpp"

namespace rdyn::cli {

using Json = nlohmann::ordered_json;

// Rationals are strings ("-3/4"); maps are coefficient arrays, lowest first.
Json to_json(const Q& q);
Json to_json(const UniPoly& p);
Json to_json(const RatMap& f);
Json to_json(const P1& p);
Json to_json(const Place& p);
Json to_json(const Orbifold& o);
// Terms as [i, j, "c"] for c x^i y^j.
Json to_json(const BiPoly& F);
Json to_json(const BiCurve& C);
Json to_json(const IdentityCheck& c, const std::string& theorem);
Json to_json(const CurveCertificate& c, const std::string& theorem);
Json to_json(const Line& l);
Json to_json(const SearchReport& r, const std::string& theorem);

// Inverse of to_json for maps and curves.
RatMap map_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);

}  // namespace rdyn::cli
