#include "cubic/io.hpp"

#include <fstream>
#include <sstream>

#include "cubic/error.hpp"

namespace cubic {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("coefficient must be a string \"p/q\" or an integer");
}

}  // namespace

QPoly poly_from_json(const Json& j) {
  const Json& vars_json = field(j, "vars");
  if (!vars_json.is_array() || vars_json.empty()) throw InputError("'vars' must be a nonempty array");
  std::vector<std::string> vars;
  for (const auto& v : vars_json) {
    if (!v.is_string()) throw InputError("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  QPoly f(vars);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  for (const auto& t : terms) {
    const Json& exp_json = field(t, "exp");
    if (!exp_json.is_array() || exp_json.size() != vars.size())
      throw InputError("term exponent length does not match the variables");
    Exponent e;
    for (const auto& x : exp_json) {
      if (!x.is_number_integer() || x.get<long>() < 0) throw InputError("exponents must be non-negative integers");
      e.push_back(x.get<int>());
    }
    f.add_term(e, rational_from_json(field(t, "coeff")));
  }
  return f;
}

Json poly_to_json(const QPoly& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"exp", it->first}, {"coeff", to_string(it->second)}});
  return {{"vars", f.vars()}, {"terms", terms}};
}

ProjLine line_from_json(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.size() != 2) throw InputError("'points' must hold exactly two points");
  std::vector<ProjPoint> points;
  for (const auto& p : pts) {
    if (!p.is_array()) throw InputError("a point must be an array of coordinates");
    std::vector<Rational> coords;
    for (const auto& c : p) coords.push_back(rational_from_json(c));
    points.emplace_back(std::move(coords));
  }
  if (points[0].dimension() != points[1].dimension()) throw InputError("line points have different lengths");
  return {points[0], points[1]};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

QPoly load_poly(const std::string& path) {
  try {
    return poly_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw InputError("invalid polynomial file " + path + ": " + e.what());
  }
}

CubicForm load_cubic(const std::string& path) { return CubicForm(load_poly(path)); }

ProjLine load_line(const std::string& path) {
  try {
    return line_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw InputError("invalid line file " + path + ": " + e.what());
  }
}

ProjPoint parse_point(std::string_view csv) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    coords.push_back(parse_rational(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ProjPoint(std::move(coords));
}

Json census_report(const SurfaceModel& model, const std::optional<std::map<std::size_t, LineType>>& line_types) {
  const auto& roots = enumerate_roots();
  const auto& lines = enumerate_lines();
  const auto census = root_census(model);

  Json sizes = Json::array();
  Json root_orbits = Json::array();
  for (const auto& o : census.orbits) {
    sizes.push_back(o.roots.size());
    Json entry{{"size", o.roots.size()},
               {"representative", roots[o.roots.front()].vector().to_string()},
               {"effective", o.contained_in_re}};
    if (o.summand) entry["summand"] = *o.summand;
    if (o.maximal_root) entry["maximal_root"] = roots[*o.maximal_root].vector().to_string();
    root_orbits.push_back(entry);
  }

  Json line_json = Json::array();
  for (const auto& o : line_orbits(model))
    line_json.push_back({{"rep", lines[o.representative].vector().to_string()},
                         {"multiplicity", o.multiplicity},
                         {"through", o.through}});

  Json report{{"config", model.config.label()},
              {"orbit_count", census.orbits.size()},
              {"orbit_sizes", sizes},
              {"root_orbits", root_orbits},
              {"monodromy_order", census.subgroup_order},
              {"line_orbits", line_json}};
  if (line_types) {
    const auto counts = skew_hilbert_count(model, *line_types);
    report["skew_counts"] = {{"I", counts.type_i},
                             {"II", counts.type_ii},
                             {"III", counts.type_iii},
                             {"IV", counts.type_iv},
                             {"total", counts.total()}};
  } else {
    report["skew_counts"] = nullptr;
  }
  return report;
}

}  // namespace cubic
