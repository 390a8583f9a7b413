#pragma once

#include <json.hpp>

#include "dbsc/coords.hpp"
#include "dbsc/counting.hpp"
#include "dbsc/diagram.hpp"
#include "dbsc/dt.hpp"

namespace dbsc {

// Deterministic key order everywhere; integers carried as decimal strings.
using Json = nlohmann::ordered_json;

Json toJson(const Polynomial& p);
Polynomial polynomialFromJson(const Json& j);

Json toJson(const RationalFunction& f);
RationalFunction rationalFunctionFromJson(const Json& j);

Json toJson(const Seed& s);
Seed seedFromJson(const Json& j);

Json toJson(const Triangulation& t);

Json toJson(const CountResult& r);

Json dtScriptToJson(const DtScript& ds);

Json cartanToJson(const CartanData& c);
// {"C":[[...]],"D":[...],"corank":l}; all invariants enforced at load.
CartanData cartanFromJson(const Json& j);

Json assignmentToJson(const CoordAssignment& a);
CoordAssignment assignmentFromJson(const Json& j);

}  // namespace dbsc
