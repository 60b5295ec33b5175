#include "toruskit/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "toruskit/errors.hpp"

namespace toruskit {

const Json& json_field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::ParseError, "missing field '" + key + "'");
  return j.at(key);
}

namespace {

int64_t checked_i64(const Int& x, const std::string& what) {
  if (x < std::numeric_limits<int64_t>::min() ||
      x > std::numeric_limits<int64_t>::max())
    fail(Errc::ParseError, what + " exceeds the 64-bit schema range");
  return x.convert_to<int64_t>();
}

}  // namespace

Json parse_document(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "input is not valid JSON");
  return j;
}

Int int_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    fail(Errc::ParseError, what + " must be an integer");
  return Int(j.get<int64_t>());
}

Rat rat_from_json(const Json& j) {
  Int n = int_from_json(json_field(j, "num"), "numerator");
  Int d = int_from_json(json_field(j, "den"), "denominator");
  if (d <= 0) fail(Errc::ParseError, "denominator must be positive");
  return Rat(n) / Rat(d);
}

IVec ivec_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(Errc::ParseError, what + " must be an array");
  IVec v;
  for (const auto& x : j) v.push_back(int_from_json(x, what + " entry"));
  return v;
}

LaurentPolynomial laurent_from_json(const Json& j) {
  Int rank = int_from_json(json_field(j, "rank"), "rank");
  if (rank < 1) fail(Errc::ParseError, "rank must be at least one");
  size_t mu = rank.convert_to<size_t>();
  const Json& terms = json_field(j, "terms");
  if (!terms.is_array()) fail(Errc::ParseError, "terms must be an array");
  std::vector<Term> parsed;
  for (const auto& t : terms) {
    IVec e = ivec_from_json(json_field(t, "exp"), "exponent");
    if (e.size() != mu)
      fail(Errc::ParseError, "exponent length does not match the rank");
    parsed.push_back({std::move(e), rat_from_json(t)});
  }
  return LaurentPolynomial(mu, std::move(parsed));
}

LatticePolytope polytope_from_json(const Json& j) {
  Int rank = int_from_json(json_field(j, "rank"), "rank");
  if (rank < 1) fail(Errc::ParseError, "rank must be at least one");
  size_t mu = rank.convert_to<size_t>();
  const Json& pts = json_field(j, "points");
  if (!pts.is_array() || pts.empty())
    fail(Errc::ParseError, "points must be a nonempty array");
  std::vector<IVec> points;
  for (const auto& p : pts) {
    IVec v = ivec_from_json(p, "point");
    if (v.size() != mu)
      fail(Errc::ParseError, "point length does not match the rank");
    points.push_back(std::move(v));
  }
  return LatticePolytope::hull(std::move(points), mu);
}

Fan fan_from_json(const Json& j) {
  Int rank = int_from_json(json_field(j, "rank"), "rank");
  if (rank < 1) fail(Errc::ParseError, "rank must be at least one");
  size_t mu = rank.convert_to<size_t>();
  const Json& cones = json_field(j, "cones");
  if (!cones.is_array()) fail(Errc::ParseError, "cones must be an array");
  std::vector<RationalCone> maximal;
  for (const auto& c : cones) {
    const Json& rays = json_field(c, "rays");
    if (!rays.is_array()) fail(Errc::ParseError, "rays must be an array");
    std::vector<IVec> gens;
    for (const auto& r : rays) {
      IVec v = ivec_from_json(r, "ray");
      if (v.size() != mu)
        fail(Errc::ParseError, "ray length does not match the rank");
      gens.push_back(std::move(v));
    }
    maximal.push_back(RationalCone::from_generators(std::move(gens), mu));
  }
  return make_fan(mu, std::move(maximal));
}

TorusInvariantDivisor divisor_from_json(const Json& j) {
  Fan fan = fan_from_json(json_field(j, "fan"));
  const Json& coeffs = json_field(j, "coeffs");
  if (!coeffs.is_array()) fail(Errc::ParseError, "coeffs must be an array");
  std::vector<std::pair<IVec, Int>> parsed;
  for (const auto& c : coeffs)
    parsed.emplace_back(ivec_from_json(json_field(c, "ray"), "ray"),
                        int_from_json(json_field(c, "a"), "coefficient"));
  std::sort(parsed.begin(), parsed.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  if (parsed.size() != fan.rays.size())
    fail(Errc::ParseError, "divisor coefficients must cover the fan rays exactly");
  for (size_t i = 0; i < parsed.size(); ++i)
    if (parsed[i].first != fan.rays[i])
      fail(Errc::ParseError, "divisor coefficients must cover the fan rays exactly");
  return TorusInvariantDivisor{std::move(fan), std::move(parsed)};
}

RationalTorusPoint point_from_json(const Json& j) {
  const Json& coords = json_field(j, "coords");
  if (!coords.is_array() || coords.empty())
    fail(Errc::ParseError, "coords must be a nonempty array");
  QVec v;
  for (const auto& c : coords) v.push_back(rat_from_json(c));
  return make_point(std::move(v));
}

PlaceSet place_set_from_json(const Json& j) {
  const Json& primes = json_field(j, "primes");
  if (!primes.is_array()) fail(Errc::ParseError, "primes must be an array");
  std::vector<Int> ps;
  for (const auto& p : primes) ps.push_back(int_from_json(p, "prime"));
  return make_place_set(std::move(ps));
}

Json json_of(const Int& x) { return checked_i64(x, "integer"); }

Json json_of(const IVec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(json_of(x));
  return arr;
}

Json json_of(const Rat& q) {
  return Json{{"num", checked_i64(num(q), "numerator")},
              {"den", checked_i64(Int(den(q)), "denominator")}};
}

Json json_of(const LogReal& x) {
  Json terms = Json::array();
  for (const auto& [p, r] : x.terms()) {
    Json t = Json{{"p", checked_i64(p, "prime")}};
    t.update(json_of(r));
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}, {"approx", x.to_double()}};
}

Json json_of(const LatticePolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(json_of(v));
  Json points = Json::array();
  for (const auto& v : p.lattice_points()) points.push_back(json_of(v));
  Json faces = Json::array();
  for (const auto& f : p.faces()) {
    Json idx = Json::array();
    for (size_t i : f.vertex_indices) idx.push_back(i);
    faces.push_back(Json{{"dim", f.dim},
                         {"vertices", std::move(idx)},
                         {"functional", json_of(f.functional)},
                         {"offset", json_of(f.offset)}});
  }
  return Json{{"rank", p.rank()},
              {"dim", p.dim()},
              {"vertices", std::move(vertices)},
              {"lattice_points", std::move(points)},
              {"faces", std::move(faces)}};
}

Json json_of(const Fan& fan) {
  Json cones = Json::array();
  for (const auto& c : fan.maximal) {
    Json rays = Json::array();
    for (const auto& g : c.generators()) rays.push_back(json_of(g));
    cones.push_back(Json{{"rays", std::move(rays)}});
  }
  return Json{{"rank", fan.rank}, {"cones", std::move(cones)}};
}

Json json_of(const TorusInvariantDivisor& d) {
  Json coeffs = Json::array();
  for (const auto& [ray, a] : d.coeffs)
    coeffs.push_back(Json{{"ray", json_of(ray)}, {"a", json_of(a)}});
  return Json{{"fan", json_of(d.fan)}, {"coeffs", std::move(coeffs)}};
}

Json json_of(const Subdivision& s) {
  Json inserted = Json::array();
  for (const auto& r : s.inserted) inserted.push_back(json_of(r));
  return Json{{"source", json_of(s.source)},
              {"target", json_of(s.target)},
              {"inserted", std::move(inserted)}};
}

Json json_of(const KodairaReport& r) {
  Json samples = Json::array();
  for (const auto& [m, h] : r.samples)
    samples.push_back(Json{{"m", json_of(m)}, {"h0", json_of(h)}});
  return Json{{"finite", r.finite},   {"kappa", r.kappa},
              {"m0", json_of(r.m0)},  {"big", r.big},
              {"m_max", r.m_max},     {"samples", std::move(samples)},
              {"methods", r.methods}};
}

Json json_of(const RationalTorusPoint& P) {
  Json coords = Json::array();
  for (const auto& c : P.coords) coords.push_back(json_of(c));
  return Json{{"coords", std::move(coords)}};
}

}  // namespace toruskit
