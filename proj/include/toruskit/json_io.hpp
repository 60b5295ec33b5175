#pragma once

#include <json.hpp>

#include <string>

#include "toruskit/fan.hpp"
#include "toruskit/heights.hpp"
#include "toruskit/laurent.hpp"
#include "toruskit/polytope.hpp"
#include "toruskit/sections.hpp"
#include "toruskit/subdivide.hpp"

namespace toruskit {

// Insertion-ordered documents keep artifact output byte-stable.
using Json = nlohmann::ordered_json;

// Wraps the library parser; malformed text raises ParseError.
Json parse_document(const std::string& text);

// Required-field access; raises ParseError when absent.
const Json& json_field(const Json& j, const std::string& key);

// Readers validate shape and 64-bit integer range, raising ParseError.
Int int_from_json(const Json& j, const std::string& what);
Rat rat_from_json(const Json& j);
IVec ivec_from_json(const Json& j, const std::string& what);
LaurentPolynomial laurent_from_json(const Json& j);
LatticePolytope polytope_from_json(const Json& j);
Fan fan_from_json(const Json& j);
TorusInvariantDivisor divisor_from_json(const Json& j);
RationalTorusPoint point_from_json(const Json& j);
PlaceSet place_set_from_json(const Json& j);

// Writers; integers outside the 64-bit range raise ParseError.
Json json_of(const Int& x);
Json json_of(const IVec& v);
Json json_of(const Rat& q);
Json json_of(const LogReal& x);
Json json_of(const LatticePolytope& p);
Json json_of(const Fan& fan);
Json json_of(const TorusInvariantDivisor& d);
Json json_of(const Subdivision& s);
Json json_of(const KodairaReport& r);
Json json_of(const RationalTorusPoint& P);

}  // namespace toruskit
