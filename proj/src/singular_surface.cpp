#include "cubic/singular_surface.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cubic/error.hpp"

namespace cubic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_count(std::string_view digits, std::string_view token) {
  if (digits.empty() || digits.size() > 3) throw InputError("malformed summand '" + std::string(token) + "'");
  int v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

AdeSummand parse_summand(std::string_view token, int& multiplicity) {
  std::size_t i = 0;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
  multiplicity = i == 0 ? 1 : parse_count(token.substr(0, i), token);
  if (multiplicity < 1) throw InputError("multiplicity must be positive in '" + std::string(token) + "'");
  if (i >= token.size()) throw InputError("missing type letter in '" + std::string(token) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[i++])));
  if (i < token.size() && token[i] == '_') ++i;
  const std::string_view digits = token.substr(i);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("malformed summand '" + std::string(token) + "'");
  if (letter != 'A' && letter != 'D' && letter != 'E')
    throw InputError(std::string("unknown ADE type letter '") + letter + "'");
  return make_summand(letter, parse_count(digits, token));
}

// line_reflection_table()[a][l] = index of s_a(line l).
const std::vector<std::array<std::uint8_t, kLineCount>>& line_reflection_table() {
  static const auto table = [] {
    const auto& roots = enumerate_roots();
    const auto& lines = enumerate_lines();
    std::vector<std::array<std::uint8_t, kLineCount>> t(kRootCount);
    for (std::size_t a = 0; a < kRootCount; ++a)
      for (std::size_t l = 0; l < kLineCount; ++l) {
        const auto img = line_index(reflect(roots[a], lines[l].vector()));
        if (!img) throw InvariantViolation("reflection sends a line class to a non-line");
        t[a][l] = static_cast<std::uint8_t>(*img);
      }
    return t;
  }();
  return table;
}

}  // namespace

SingularityConfig::SingularityConfig(std::vector<AdeSummand> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
  if (total_rank() > 6) throw InputError("total rank " + std::to_string(total_rank()) + " exceeds 6");
}

SingularityConfig SingularityConfig::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "smooth" || text == "0" || text == "\xE2\x88\x85") return {};
  std::vector<AdeSummand> summands;
  while (true) {
    const auto plus = text.find('+');
    const std::string_view token = trim(text.substr(0, plus));
    if (token.empty()) throw InputError("empty summand in configuration");
    int multiplicity = 1;
    const AdeSummand s = parse_summand(token, multiplicity);
    if (multiplicity > 6) throw InputError("total rank exceeds 6");
    for (int k = 0; k < multiplicity; ++k) summands.push_back(s);
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return SingularityConfig(std::move(summands));
}

int SingularityConfig::total_rank() const {
  int r = 0;
  for (const auto& s : summands_) r += s.rank;
  return r;
}

std::string SingularityConfig::label() const {
  if (summands_.empty()) return "\xE2\x88\x85";
  std::ostringstream os;
  for (std::size_t i = 0; i < summands_.size();) {
    std::size_t j = i;
    while (j < summands_.size() && summands_[j] == summands_[i]) ++j;
    if (i > 0) os << "+";
    if (j - i > 1) os << (j - i);
    os << summands_[i].label();
    i = j;
  }
  return os.str();
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = [] {
    const std::vector<std::tuple<const char*, const char*, int>> raw = {
        {"", "I", 72},         {"A1", "II", 51},     {"2A1", "IV", 36},     {"A2", "III", 31},
        {"3A1", "VIII", 25},   {"A1+A2", "VI", 22},  {"A3", "V", 17},       {"4A1", "XVI", 17},
        {"2A1+A2", "XIII", 15}, {"A1+A3", "X", 12},  {"2A2", "IX", 14},     {"A4", "VII", 9},
        {"D4", "XII", 7},      {"A1+2A2", "XVII", 9}, {"A1+A4", "XIV", 6},  {"A5", "XI", 5},
        {"D5", "XV", 3},       {"2A1+A3", "XVIII", 8}, {"A1+A5", "XIX", 3}, {"3A2", "XXI", 5},
        {"E6", "XX", 1},
    };
    std::vector<Table1Row> out;
    for (const auto& [label, roman, count] : raw) out.push_back({SingularityConfig::parse(label), roman, count});
    return out;
  }();
  return rows;
}

std::optional<Table1Row> table1_row(const SingularityConfig& config) {
  for (const auto& row : table1_rows())
    if (row.config == config) return row;
  return std::nullopt;
}

SurfaceModel make_surface_model(const SingularityConfig& config, std::optional<std::size_t> class_index) {
  const auto classes = embed_subsystems(config.summands());
  std::size_t chosen = 0;
  std::size_t geometric = 0;
  if (classes.size() > 1) {
    // Several W(E6)-classes: the one reproducing the reference count is the
    // one realized by surfaces.
    if (const auto row = table1_row(config)) {
      const auto match = std::find_if(classes.begin(), classes.end(), [&](const EmbeddingClass& c) {
        return c.orbit_count == static_cast<std::size_t>(row->published);
      });
      if (match != classes.end()) geometric = static_cast<std::size_t>(match - classes.begin());
    }
  }
  chosen = class_index.value_or(geometric);
  if (chosen >= classes.size()) throw InputError("embedding class index out of range");

  SurfaceModel model;
  model.config = config;
  model.embedding = classes[chosen].representative;
  model.embedding_class = chosen;
  model.class_count = classes.size();
  model.geometric = chosen == geometric;
  for (std::size_t i = 0; i < model.embedding.simple_roots.size(); ++i) {
    model.positive_roots.push_back(positive_roots(model.embedding, i));
    model.maximal_roots.push_back(maximal_root(model.embedding, i));
  }
  return model;
}

OrbitDecomposition root_census(const SurfaceModel& model) { return orbit_decomposition(model.embedding); }

std::map<SingularityConfig, std::size_t> table1() {
  std::map<SingularityConfig, std::size_t> out;
  for (const auto& row : table1_rows()) out[row.config] = root_census(make_surface_model(row.config)).orbits.size();
  return out;
}

std::vector<LineOrbit> line_orbits(const SurfaceModel& model) {
  const auto& table = line_reflection_table();
  const auto& lines = enumerate_lines();
  const auto& roots = enumerate_roots();
  const auto simple = model.embedding.all_simple_roots();

  std::vector<std::size_t> parent(kLineCount);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto a : simple)
    for (std::size_t l = 0; l < kLineCount; ++l) {
      const auto x = find(l);
      const auto y = find(table[a][l]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t l = 0; l < kLineCount; ++l) groups[find(l)].push_back(l);

  std::vector<LineOrbit> out;
  for (auto& [rep, members] : groups) {
    LineOrbit o;
    o.members = std::move(members);
    o.multiplicity = o.members.size();
    std::vector<std::size_t> dominant;
    for (auto l : o.members) {
      const bool nonneg = std::all_of(simple.begin(), simple.end(), [&](std::size_t a) {
        return pairing(lines[l].vector(), roots[a].vector()) >= 0;
      });
      if (nonneg) dominant.push_back(l);
    }
    if (dominant.size() != 1)
      throw InvariantViolation("line orbit has " + std::to_string(dominant.size()) +
                               " non-negative representatives, expected exactly one");
    o.representative = dominant.front();
    for (std::size_t i = 0; i < model.positive_roots.size(); ++i) {
      const bool meets = std::any_of(model.positive_roots[i].begin(), model.positive_roots[i].end(), [&](std::size_t a) {
        return pairing(lines[o.representative].vector(), roots[a].vector()) > 0;
      });
      if (meets) o.through.push_back(i);
    }
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(),
            [](const LineOrbit& a, const LineOrbit& b) { return a.representative < b.representative; });
  return out;
}

Incidence incidence(const SurfaceModel& /*model*/, const LineOrbit& l1, const LineOrbit& l2) {
  if (l1.representative == l2.representative) throw InputError("incidence needs two distinct line orbits");
  for (auto i : l1.through)
    if (std::find(l2.through.begin(), l2.through.end(), i) != l2.through.end())
      return {IncidenceKind::incident_at_singularity, i};
  const auto& lines = enumerate_lines();
  if (pairing(lines[l1.representative].vector(), lines[l2.representative].vector()) > 0)
    return {IncidenceKind::incident_at_smooth_point, std::nullopt};
  return {IncidenceKind::skew, std::nullopt};
}

std::size_t monodromy_group_order(const SurfaceModel& model) {
  return subgroup_order(model.embedding.reflections());
}

SkewCountReport skew_hilbert_count(const SurfaceModel& model, const std::map<std::size_t, LineType>& line_types) {
  const auto orbits = line_orbits(model);
  for (const auto& [index, type] : line_types) {
    if (index >= orbits.size()) throw InputError("line orbit index " + std::to_string(index) + " out of range");
    if (orbits[index].through.empty())
      throw InputError("line orbit " + std::to_string(index) + " passes through no singularity and has no type");
  }
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (!orbits[i].through.empty() && !line_types.contains(i)) missing.push_back(i);
  if (!missing.empty()) {
    std::ostringstream os;
    os << "missing line type for orbits";
    for (auto i : missing) os << " " << i;
    throw InputError(os.str());
  }

  SkewCountReport report;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      const auto inc = incidence(model, orbits[i], orbits[j]);
      if (inc.kind == IncidenceKind::skew) ++report.type_i;
      if (inc.kind == IncidenceKind::incident_at_singularity) ++report.type_iii;
    }
  for (const auto& [index, type] : line_types) {
    if (type == LineType::first)
      ++report.type_ii;
    else
      report.type_iv += static_cast<long>(orbits[index].through.size());
  }
  return report;
}

std::string to_string(LineType t) { return t == LineType::first ? "first" : "second"; }

std::string to_string(IncidenceKind k) {
  switch (k) {
    case IncidenceKind::skew:
      return "skew";
    case IncidenceKind::incident_at_smooth_point:
      return "incident_at_smooth_point";
    case IncidenceKind::incident_at_singularity:
      return "incident_at_singularity";
  }
  return "?";
}

}  // namespace cubic
