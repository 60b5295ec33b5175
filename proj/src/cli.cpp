#include "toruskit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toruskit/caps.hpp"
#include "toruskit/cone.hpp"
#include "toruskit/errors.hpp"
#include "toruskit/heights.hpp"
#include "toruskit/sections.hpp"
#include "toruskit/subdivide.hpp"

namespace toruskit {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Place place_from_json(const Json& j) {
  Int p = int_from_json(j, "place");
  if (p == 0) return Place::infinite_place();
  make_place_set({p});
  return Place::at(p);
}

Json cmd_newton(const Json& in, const Caps&) {
  auto f = laurent_from_json(in);
  return Json{{"polytope", json_of(newton_polytope(f))}};
}

Json cmd_ueno(const Json& in, const Caps&) {
  auto f = laurent_from_json(in);
  auto basis = ueno_stabilizer(f);
  Json rows = Json::array();
  for (const auto& b : basis) rows.push_back(json_of(b));
  return Json{{"rank", basis.size()},
              {"basis", std::move(rows)},
              {"trivial", basis.empty()}};
}

Json cmd_saturate(const Json& in, const Caps& caps) {
  auto p = polytope_from_json(in);
  return Json{{"multiple", json_of(smallest_good_multiple(p, caps))}};
}

Json cmd_fan(const Json& in, const Caps&) {
  auto p = polytope_from_json(in);
  Json orbits = Json::array();
  for (const auto& o : orbit_table(p)) {
    Json chars = Json::array();
    for (const auto& c : o.character_basis) chars.push_back(json_of(c));
    orbits.push_back(Json{{"face", o.face_index},
                          {"dim", o.orbit_dim},
                          {"characters", std::move(chars)}});
  }
  return Json{{"fan", json_of(completion_fan(p))}, {"orbits", std::move(orbits)}};
}

Json cmd_ample(const Json& in, const Caps&) {
  auto f = laurent_from_json(in);
  auto closure = divisor_closure(f, completion_fan(newton_polytope(f)));
  Json cartier = Json::array();
  for (const auto& m : closure.cartier_points) cartier.push_back(json_of(m));
  return Json{{"divisor", json_of(closure.divisor)},
              {"cartier_points", std::move(cartier)},
              {"ample", is_ample(closure.divisor)},
              {"orbit_avoidance", orbit_avoidance(f)}};
}

Json cmd_resolve(const Json& in, const Caps& caps) {
  auto s = resolve_to_smooth(fan_from_json(in), caps);
  bool complete = is_complete(s.target);
  Json out{{"subdivision", json_of(s)},
           {"smooth", is_smooth(s.target)},
           {"complete", complete}};
  out["log_canonical_sum_zero"] =
      complete ? Json(log_canonical_boundary(s.target).sum_is_zero)
               : Json(nullptr);
  return out;
}

Json cmd_kappa(const Json& in, const Caps& caps) {
  return json_of(d_dimension(divisor_from_json(in), caps));
}

Json cmd_logkappa(const Json& in, const Caps&) {
  auto f = laurent_from_json(in);
  Json out = json_of(log_kodaira_dimension(f));
  out["stabilizer_rank"] = ueno_stabilizer(f).size();
  return out;
}

Json cmd_project(const Json& in, const Caps&) {
  auto p = polytope_from_json(json_field(in, "polytope"));
  Int idx = int_from_json(json_field(in, "face"), "face index");
  if (idx < 0 || idx >= Int(p.faces().size()))
    fail(Errc::ParseError, "face index out of range");
  auto proj = equivariant_projection(p, p.faces()[idx.convert_to<size_t>()]);
  Json basis = Json::array();
  for (const auto& b : proj.basis) basis.push_back(json_of(b));
  Json rows = Json::array();
  for (const auto& r : proj.map.matrix.a) rows.push_back(json_of(r));
  return Json{{"face", json_of(idx)},
              {"basis", std::move(basis)},
              {"matrix", std::move(rows)},
              {"domain_rank", proj.map.domain_rank()},
              {"codomain_rank", proj.map.codomain_rank()}};
}

Json cmd_height(const Json& in, const Caps&) {
  auto P = point_from_json(json_field(in, "point"));
  auto p = polytope_from_json(json_field(in, "polytope"));
  return Json{{"height", json_of(height(P, p))}};
}

Json cmd_weil(const Json& in, const Caps&) {
  auto f = laurent_from_json(json_field(in, "f"));
  auto P = point_from_json(json_field(in, "point"));
  auto lv = weil_function(f, P, place_from_json(json_field(in, "place")));
  return Json{{"place", json_of(lv.place.prime)}, {"value", json_of(lv.value)}};
}

Json cmd_distance(const Json& in, const Caps&) {
  auto P = point_from_json(json_field(in, "point"));
  auto lv = boundary_distance(P, place_from_json(json_field(in, "place")));
  return Json{{"place", json_of(lv.place.prime)}, {"value", json_of(lv.value)}};
}

Json cmd_enumerate(const Json& in, const Caps& caps) {
  auto f = laurent_from_json(json_field(in, "f"));
  auto S = place_set_from_json(json_field(in, "places"));
  Rat bound = rat_from_json(json_field(in, "bound"));
  auto pts = enumerate_integral_points(f, S, bound, caps);
  Json arr = Json::array();
  for (const auto& P : pts) arr.push_back(json_of(P));
  return Json{{"count", pts.size()}, {"points", std::move(arr)}};
}

Json cmd_families(const Json& in, const Caps&) {
  const Json& pts = json_field(in, "points");
  if (!pts.is_array()) fail(Errc::ParseError, "points must be an array");
  std::vector<RationalTorusPoint> points;
  for (const auto& p : pts) points.push_back(point_from_json(p));
  Json arr = Json::array();
  for (const auto& fam : detect_coset_families(points)) {
    Json members = Json::array();
    for (size_t m : fam.members) members.push_back(m);
    arr.push_back(Json{{"character", json_of(fam.character)},
                       {"value", json_of(fam.value)},
                       {"members", std::move(members)}});
  }
  return Json{{"count", arr.size()}, {"families", std::move(arr)}};
}

using Command = Json (*)(const Json&, const Caps&);

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table = {
      {"newton", cmd_newton},       {"ueno", cmd_ueno},
      {"saturate", cmd_saturate},   {"fan", cmd_fan},
      {"ample", cmd_ample},         {"resolve", cmd_resolve},
      {"kappa", cmd_kappa},         {"logkappa", cmd_logkappa},
      {"project", cmd_project},     {"height", cmd_height},
      {"weil", cmd_weil},           {"distance", cmd_distance},
      {"enumerate", cmd_enumerate}, {"families", cmd_families},
  };
  return table;
}

int emit(const Json& doc, const std::string& path) {
  std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) fail(Errc::ParseError, "cannot write output file " + path);
  return 0;
}

int emit_error(const std::string& code, const std::string& message) {
  Json err{{"schema", "toruskit/error/1"}, {"code", code}, {"message", message}};
  std::cout << err.dump(2) << "\n";
  return 2;
}

}  // namespace

Json run_job(const JobSpec& job) {
  auto it = command_table().find(job.command);
  if (it == command_table().end())
    fail(Errc::ParseError, "unknown command '" + job.command + "'");
  if (job.input_path.empty() == job.inline_json.empty())
    fail(Errc::ParseError, "provide exactly one input source (--in or --json)");
  Caps caps;
  if (const char* env = std::getenv("TORUSKIT_CAPS")) caps.apply_overrides(env);
  for (const auto& [key, value] : job.options)
    caps.apply_overrides(key + "=" + value);
  caps.validate();
  Json input = parse_document(
      job.input_path.empty() ? job.inline_json : read_file(job.input_path));
  Json doc{{"schema", "toruskit/" + job.command + "/1"}};
  doc.update(it->second(input, caps));
  return doc;
}

int run_cli(int argc, const char* const* argv) {
  JobSpec job;
  std::vector<std::string> raw_options;
  CLI::App app{"exact toric geometry and heights over Q, one JSON job per run"};
  app.add_option("command", job.command, "subcommand to run")->required();
  app.add_option("--in", job.input_path, "path to the input JSON document");
  app.add_option("--json", job.inline_json, "inline input JSON document");
  app.add_option("--out", job.output_path,
                 "output path for the artifact (default: stdout)");
  app.add_option("--opt", raw_options, "cap override key=value (repeatable)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("ParseError", e.what());
  }
  try {
    for (const auto& o : raw_options) {
      size_t eq = o.find('=');
      if (eq == std::string::npos)
        fail(Errc::ParseError, "option missing '=': " + o);
      job.options[o.substr(0, eq)] = o.substr(eq + 1);
    }
    return emit(run_job(job), job.output_path);
  } catch (const DomainError& e) {
    return emit_error(e.code_name(), e.what());
  } catch (const std::exception& e) {
    return emit_error("ParseError", std::string("internal error: ") + e.what());
  }
}

}  // namespace toruskit
