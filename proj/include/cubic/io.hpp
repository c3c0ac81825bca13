#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cubic/projective.hpp"
#include "cubic/qpoly.hpp"
#include "cubic/singular_surface.hpp"
#include "cubic/surface_geometry.hpp"

namespace cubic {

using Json = nlohmann::json;

// {"vars": [...], "terms": [{"exp": [...], "coeff": "p/q"}, ...]}
QPoly poly_from_json(const Json& j);
Json poly_to_json(const QPoly& f);

// {"points": [["0","0","1","0"], ["0","0","0","1"]]}
ProjLine line_from_json(const Json& j);

Json read_json_file(const std::string& path);
CubicForm load_cubic(const std::string& path);
QPoly load_poly(const std::string& path);
ProjLine load_line(const std::string& path);

// "1,-1/2,0,0"
ProjPoint parse_point(std::string_view csv);

// Summary of the lattice model: root orbits, line orbits and, when line
// types are supplied, the skew-line counts.
Json census_report(const SurfaceModel& model,
                   const std::optional<std::map<std::size_t, LineType>>& line_types = std::nullopt);

}  // namespace cubic
