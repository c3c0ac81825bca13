#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubic/ade.hpp"
#include "cubic/weyl.hpp"

namespace cubic {

// ADE singularity configuration of a cubic surface, e.g. "2A1+A2".
class SingularityConfig {
public:
  SingularityConfig() = default;
  explicit SingularityConfig(std::vector<AdeSummand> summands);

  // Grammar: empty (or "smooth" / "∅" / "0") or  [k]X<n> ('+' [k]X<n>)*.
  static SingularityConfig parse(std::string_view text);

  const std::vector<AdeSummand>& summands() const { return summands_; }
  bool smooth() const { return summands_.empty(); }
  int total_rank() const;
  // Canonical label: summands sorted, equal ones merged as "kXn"; "∅" if smooth.
  std::string label() const;

  auto operator<=>(const SingularityConfig&) const = default;

private:
  std::vector<AdeSummand> summands_;
};

struct Table1Row {
  SingularityConfig config;
  std::string roman;  // type numeral I..XXI
  int published = 0;  // root count listed in the reference table
};

// The 21 rows of the reference census, in its reading order.
const std::vector<Table1Row>& table1_rows();
std::optional<Table1Row> table1_row(const SingularityConfig& config);

// Lattice model of a cubic surface with the given singularities.
struct SurfaceModel {
  SingularityConfig config;
  SubsystemEmbedding embedding;
  std::vector<std::vector<std::size_t>> positive_roots;  // per summand
  std::vector<std::size_t> maximal_roots;                // per summand
  std::size_t embedding_class = 0;
  std::size_t class_count = 1;
  bool geometric = true;
};

// Builds the model on the chosen conjugacy class (default: the geometric one,
// i.e. the only class, or the one reproducing the reference count).
SurfaceModel make_surface_model(const SingularityConfig& config,
                                std::optional<std::size_t> class_index = std::nullopt);

OrbitDecomposition root_census(const SurfaceModel& model);

// Orbit count per reference row, computed from the census.
std::map<SingularityConfig, std::size_t> table1();

struct LineOrbit {
  std::vector<std::size_t> members;  // line indices
  std::size_t representative = 0;    // pairs >= 0 with every positive root
  std::size_t multiplicity = 0;
  std::vector<std::size_t> through;  // summand (singularity) indices
};

// Orbits of the 27 line classes under W(R_e), ordered by representative.
std::vector<LineOrbit> line_orbits(const SurfaceModel& model);

enum class IncidenceKind { skew, incident_at_smooth_point, incident_at_singularity };

struct Incidence {
  IncidenceKind kind = IncidenceKind::skew;
  std::optional<std::size_t> singularity;
  bool operator==(const Incidence&) const = default;
};

Incidence incidence(const SurfaceModel& model, const LineOrbit& l1, const LineOrbit& l2);

std::size_t monodromy_group_order(const SurfaceModel& model);

enum class LineType { first, second };

struct SkewCountReport {
  bool infinite_sym2e = false;
  long type_i = 0;
  long type_ii = 0;
  long type_iii = 0;
  long type_iv = 0;

  static SkewCountReport infinite() { return {true, 0, 0, 0, 0}; }
  long total() const { return type_i + type_ii + type_iii + type_iv; }
};

// Reduced counts of skew-line Hilbert scheme points by type. `line_types` is
// keyed by index into line_orbits(model) and must cover exactly the orbits
// passing through a singularity.
SkewCountReport skew_hilbert_count(const SurfaceModel& model, const std::map<std::size_t, LineType>& line_types);

std::string to_string(LineType t);
std::string to_string(IncidenceKind k);

}  // namespace cubic
