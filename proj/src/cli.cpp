#include "cubic/cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "cubic/error.hpp"
#include "cubic/hilbert.hpp"
#include "cubic/io.hpp"
#include "cubic/lattice.hpp"
#include "cubic/singular_surface.hpp"
#include "cubic/surface_geometry.hpp"
#include "cubic/weyl.hpp"

namespace cubic::cli {

namespace {

struct Output {
  Json json;
  std::string text;
};

using Handler = std::function<Output()>;

std::string line_label(std::size_t i) { return enumerate_lines()[i].vector().to_string(); }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

Json sextuple_json(const Sextuple& s) {
  Json j = Json::array();
  for (auto i : s) j.push_back(line_label(i));
  return j;
}

std::string sextuple_text(const Sextuple& s) {
  std::vector<std::string> names;
  for (auto i : s) names.push_back(line_label(i));
  return "{" + join(names, ", ") + "}";
}

Output vector_listing(const std::vector<LatticeVector>& vectors, const char* key) {
  Output o;
  Json items = Json::array();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    items.push_back({{"index", i}, {"csv", vectors[i].to_csv()}, {"label", vectors[i].to_string()}});
    o.text += std::to_string(i) + "  " + vectors[i].to_csv() + "  " + vectors[i].to_string() + "\n";
  }
  o.json = {{"count", vectors.size()}, {key, items}};
  return o;
}

// "first:all", "second:all", "i:first", "i:second", comma separated; later
// items override earlier ones.
std::map<std::size_t, LineType> parse_line_types(const std::string& spec, const std::vector<LineOrbit>& orbits) {
  std::map<std::size_t, LineType> types;
  auto parse_type = [](const std::string& s) {
    if (s == "first") return LineType::first;
    if (s == "second") return LineType::second;
    throw InputError("line type must be 'first' or 'second', got '" + s + "'");
  };
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("line type item '" + item + "' must look like i:first or first:all");
    const std::string lhs = item.substr(0, colon);
    const std::string rhs = item.substr(colon + 1);
    if (rhs == "all") {
      const LineType t = parse_type(lhs);
      for (std::size_t i = 0; i < orbits.size(); ++i)
        if (!orbits[i].through.empty()) types[i] = t;
      continue;
    }
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(lhs, &used);
      if (used != lhs.size()) throw std::invalid_argument(lhs);
    } catch (const std::logic_error&) {
      throw InputError("invalid line orbit index '" + lhs + "'");
    }
    types[idx] = parse_type(rhs);
  }
  return types;
}

Output render_census(const Json& report) {
  Output o{report, {}};
  std::ostringstream t;
  t << "config " << report["config"].get<std::string>() << "\n";
  t << "orbits " << report["orbit_count"].get<std::size_t>() << "\n";
  std::vector<std::string> sizes;
  for (const auto& s : report["orbit_sizes"]) sizes.push_back(std::to_string(s.get<std::size_t>()));
  t << "sizes " << join(sizes, " ") << "\n";
  o.text = t.str();
  return o;
}

std::string ptr_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "n/a"; }

}  // namespace

Result run(const std::vector<std::string>& args) {
  Result result;
  std::ostringstream out, err;

  CLI::App app{"Lines, roots and singularities of cubic surfaces"};
  app.name("cubiclines");
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  Handler handler;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    return sub;
  };

  std::string config_text, root_csv, line_types_text, surface_path, line_path, point_csv, type_text;
  std::string a_text, b_text;
  int jet_bound = kDefaultJetBound;
  int max_degree = 6;
  bool all_embeddings = false;

  add("roots", "List the 72 roots")->callback([&] {
    handler = [] {
      std::vector<LatticeVector> v;
      for (const auto& r : enumerate_roots()) v.push_back(r.vector());
      return vector_listing(v, "roots");
    };
  });

  add("lines", "List the 27 line classes")->callback([&] {
    handler = [] {
      std::vector<LatticeVector> v;
      for (const auto& l : enumerate_lines()) v.push_back(l.vector());
      return vector_listing(v, "lines");
    };
  });

  add("double-sixes", "List the 36 double-sixes")->callback([&] {
    handler = [] {
      Output o;
      Json items = Json::array();
      for (const auto& d : double_sixes()) {
        const auto root = enumerate_roots()[d.root].vector().to_string();
        items.push_back({{"root", root}, {"first", sextuple_json(d.first)}, {"second", sextuple_json(d.second)}});
        o.text += root + ": " + sextuple_text(d.first) + " / " + sextuple_text(d.second) + "\n";
      }
      o.json = {{"count", items.size()}, {"double_sixes", items}};
      return o;
    };
  });

  add("tritangents", "List the 45 tritangent trios")->callback([&] {
    handler = [] {
      Output o;
      Json items = Json::array();
      for (const auto& t : tritangent_trios()) {
        std::vector<std::string> names{line_label(t[0]), line_label(t[1]), line_label(t[2])};
        items.push_back(names);
        o.text += join(names, ", ") + "\n";
      }
      o.json = {{"count", items.size()}, {"trios", items}};
      return o;
    };
  });

  auto* six = add("six-ways", "Decompositions of a root as a difference of skew lines");
  six->add_option("--root", root_csv, "Root as 7 comma-separated integers")->required();
  six->callback([&] {
    handler = [&] {
      Output o;
      Json pairs = Json::array();
      for (const auto& [l1, l2] : six_ways(parse_lattice_vector(root_csv))) {
        pairs.push_back({l1.vector().to_string(), l2.vector().to_string()});
        o.text += l1.vector().to_string() + "  " + l2.vector().to_string() + "\n";
      }
      o.json = {{"root", root_csv}, {"count", pairs.size()}, {"pairs", pairs}};
      return o;
    };
  });

  add("weyl-order", "Order of W(E6) by closure")->callback([&] {
    handler = [] {
      const auto order = generate_weyl().size();
      return Output{{{"order", order}}, std::to_string(order) + "\n"};
    };
  });

  auto* orbits = add("orbits", "Root orbits under the monodromy group of a configuration");
  orbits->add_option("--config", config_text, "Singularity configuration, e.g. 2A1+A2")->required();
  orbits->add_flag("--all-embeddings", all_embeddings, "Report every conjugacy class of embeddings");
  orbits->callback([&] {
    handler = [&] {
      const auto config = SingularityConfig::parse(config_text);
      if (!all_embeddings) return render_census(census_report(make_surface_model(config)));
      Output o;
      Json classes = Json::array();
      const auto first = make_surface_model(config);
      for (std::size_t c = 0; c < first.class_count; ++c) {
        const auto report = census_report(make_surface_model(config, c));
        o.text += "class " + std::to_string(c) + "\n" + render_census(report).text;
        classes.push_back(report);
      }
      o.json = {{"config", config.label()}, {"classes", classes}};
      return o;
    };
  });

  add("table1", "Root orbit counts for all 21 configurations")->callback([&] {
    handler = [] {
      Output o;
      const auto counts = table1();
      Json rows = Json::array();
      for (const auto& row : table1_rows()) {
        const auto n = counts.at(row.config);
        rows.push_back({{"config", row.config.label()}, {"type", row.roman}, {"count", n}});
        o.text += row.config.label() + "\t" + row.roman + "\t" + std::to_string(n) + "\n";
      }
      o.json = rows;
      return o;
    };
  });

  auto* lorb = add("line-orbits", "Orbits of the 27 lines for a configuration");
  lorb->add_option("--config", config_text, "Singularity configuration")->required();
  lorb->callback([&] {
    handler = [&] {
      const auto model = make_surface_model(SingularityConfig::parse(config_text));
      Output o;
      Json items = Json::array();
      const auto orbits_list = line_orbits(model);
      for (std::size_t i = 0; i < orbits_list.size(); ++i) {
        const auto& l = orbits_list[i];
        items.push_back({{"index", i},
                         {"rep", line_label(l.representative)},
                         {"multiplicity", l.multiplicity},
                         {"through", l.through}});
        std::vector<std::string> through;
        for (auto s : l.through) through.push_back(std::to_string(s));
        o.text += std::to_string(i) + "  " + line_label(l.representative) + "  x" + std::to_string(l.multiplicity) +
                  "  through {" + join(through, ",") + "}\n";
      }
      o.json = {{"config", model.config.label()}, {"orbit_count", items.size()}, {"line_orbits", items}};
      return o;
    };
  });

  auto* skew = add("skew-count", "Reduced counts of skew-line degenerations by type");
  skew->add_option("--config", config_text, "Singularity configuration")->required();
  skew->add_option("--line-types", line_types_text, "first:all, second:all or i:first,j:second");
  skew->callback([&] {
    handler = [&] {
      const auto model = make_surface_model(SingularityConfig::parse(config_text));
      const auto types = parse_line_types(line_types_text, line_orbits(model));
      const auto c = skew_hilbert_count(model, types);
      Output o;
      o.json = {{"config", model.config.label()},
                {"I", c.type_i},
                {"II", c.type_ii},
                {"III", c.type_iii},
                {"IV", c.type_iv},
                {"total", c.total()}};
      o.text = "I " + std::to_string(c.type_i) + "\nII " + std::to_string(c.type_ii) + "\nIII " +
               std::to_string(c.type_iii) + "\nIV " + std::to_string(c.type_iv) + "\ntotal " +
               std::to_string(c.total()) + "\n";
      return o;
    };
  });

  auto* cl = add("classify-line", "Type of a line on a cubic surface");
  cl->add_option("--surface", surface_path, "Cubic form JSON file")->required();
  cl->add_option("--line", line_path, "Line JSON file")->required();
  cl->callback([&] {
    handler = [&] {
      const auto f = load_cubic(surface_path);
      const auto line = load_line(line_path);
      const auto kind = classify_line(f, line);
      const auto d = dual_map_data(f, line);
      const auto locus = singular_points_on_line(f, line);
      Json points = Json::array();
      std::vector<std::string> point_text;
      for (const auto& p : locus.rational_points) {
        points.push_back({{"point", p.point.to_string()}, {"multiplicity", p.multiplicity}});
        point_text.push_back(p.point.to_string());
      }
      Output o;
      o.json = {{"type", to_string(kind)},
                {"q0", d.q0().to_string()},
                {"q1", d.q1().to_string()},
                {"singular_gcd", locus.gcd.to_string()},
                {"singular_points", points}};
      o.text = to_string(kind) + "\n";
      if (!point_text.empty()) o.text += "singular points " + join(point_text, " ") + "\n";
      return o;
    };
  });

  auto* sing = add("singularity", "Classify a singular point of a cubic surface");
  sing->add_option("--surface", surface_path, "Cubic form JSON file")->required();
  sing->add_option("--point", point_csv, "Point as comma-separated rationals")->required();
  sing->add_option("--jet-bound", jet_bound, "Jet order for the Milnor number")->check(CLI::PositiveNumber);
  sing->callback([&] {
    handler = [&] {
      const auto r = classify_singular_point(load_cubic(surface_path), parse_point(point_csv), jet_bound);
      Output o;
      o.json = {{"multiplicity", r.multiplicity},
                {"hessian_corank", r.hessian_corank},
                {"milnor_number", r.milnor_number ? Json(*r.milnor_number) : Json(nullptr)},
                {"cubic_part_pattern", to_string(r.cubic_part_pattern)},
                {"ade_label", r.ade_label ? Json(*r.ade_label) : Json(nullptr)},
                {"cone_vertex_candidate", r.cone_vertex_candidate}};
      o.text = (r.ade_label ? *r.ade_label : std::string("unclassified")) + "\nmultiplicity " +
               std::to_string(r.multiplicity) + "\ncorank " + std::to_string(r.hessian_corank) + "\nmilnor " +
               ptr_text(r.milnor_number) + "\ncubic part " + to_string(r.cubic_part_pattern) + "\n";
      if (r.cone_vertex_candidate) o.text += "cone vertex candidate\n";
      return o;
    };
  });

  auto* cone = add("cone", "Decide whether a cubic is a cone with the given vertex");
  cone->add_option("--surface", surface_path, "Cubic form JSON file")->required();
  cone->add_option("--point", point_csv, "Vertex as comma-separated rationals")->required();
  cone->callback([&] {
    handler = [&] {
      const auto k = detect_cone(load_cubic(surface_path), parse_point(point_csv));
      return Output{{{"result", to_string(k)}}, to_string(k) + "\n"};
    };
  });

  auto* eck = add("eckardt", "Decide whether a point of a cubic threefold is an Eckardt point");
  eck->add_option("--surface", surface_path, "Cubic threefold JSON file")->required();
  eck->add_option("--point", point_csv, "Point as comma-separated rationals")->required();
  eck->callback([&] {
    handler = [&] {
      const bool e = eckardt_check(load_cubic(surface_path), parse_point(point_csv));
      return Output{{{"eckardt", e}}, std::string(e ? "true" : "false") + "\n"};
    };
  });

  auto* quad = add("quadric", "Tangent hyperplane and quadric along the normal-form line");
  quad->add_option("--a", a_text, "Rational a")->required();
  quad->add_option("--b", b_text, "Rational b")->required();
  quad->callback([&] {
    handler = [&] {
      const auto t = tangent_quadric(parse_rational(a_text), parse_rational(b_text));
      const bool ok = verify_tangent(threefold_normal_form(), t.hyperplane, t.quadric, ProjLine::coordinate_line(5, 0, 1));
      Output o;
      o.json = {{"hyperplane", t.hyperplane.to_string()}, {"quadric", t.quadric.to_string()}, {"tangent", ok}};
      o.text = "H: " + t.hyperplane.to_string() + " = 0\nQ: " + t.quadric.to_string() + " = 0\ntangent " +
               (ok ? "true" : "false") + "\n";
      return o;
    };
  });

  auto* hp = add("hilbert-poly", "Hilbert function of a double-line scheme type");
  hp->add_option("--type", type_text, "I, II, III or IV")->required();
  hp->add_option("--max-degree", max_degree, "Largest degree to evaluate")->check(CLI::Range(1, 40));
  hp->callback([&] {
    handler = [&] {
      const auto type = parse_scheme_type(type_text);
      const auto gens = type_ideal(type);
      Json values = Json::array();
      std::vector<long> h;
      Output o;
      for (int n = 0; n <= max_degree; ++n) {
        h.push_back(hilbert_function(gens, n));
        values.push_back({{"n", n}, {"h", h.back()}});
        o.text += std::to_string(n) + "  " + std::to_string(h.back()) + "\n";
      }
      // Fit a line through the last two values and test it back to n = 1.
      const long slope = h[static_cast<std::size_t>(max_degree)] - h[static_cast<std::size_t>(max_degree) - 1];
      const long intercept = h[static_cast<std::size_t>(max_degree)] - slope * max_degree;
      bool linear = max_degree >= 2;
      for (int n = 1; n <= max_degree; ++n)
        if (h[static_cast<std::size_t>(n)] != slope * n + intercept) linear = false;
      Json poly = linear ? Json{{"slope", slope}, {"intercept", intercept}} : Json(nullptr);
      if (linear) o.text += "polynomial " + std::to_string(slope) + "n+" + std::to_string(intercept) + "\n";
      o.json = {{"type", to_string(type)}, {"values", values}, {"polynomial", poly}};
      return o;
    };
  });

  auto* conj = add("conjugate", "Conjugate point of a point on a line under the dual map");
  conj->add_option("--surface", surface_path, "Cubic form JSON file")->required();
  conj->add_option("--line", line_path, "Line JSON file")->required();
  conj->add_option("--point", point_csv, "Point on the line")->required();
  conj->callback([&] {
    handler = [&] {
      const auto q = conjugate_point(load_cubic(surface_path), load_line(line_path), parse_point(point_csv));
      return Output{{{"conjugate", q.to_string()}}, q.to_string() + "\n"};
    };
  });

  // Reject unknown verbs before any computation.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--format") {
      ++i;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      result.exit_code = kExitInputError;
      result.err = "error: unknown command '" + a + "'\n";
      return result;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kExitOk : kExitInputError;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    const Output o = handler();
    if (format == "json")
      out << o.json.dump(2) << "\n";
    else
      out << o.text;
    result.exit_code = kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    result.exit_code = kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    result.exit_code = kExitInvariant;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace cubic::cli
