#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubic/binary_form.hpp"
#include "cubic/projective.hpp"
#include "cubic/qpoly.hpp"

namespace cubic {

// Nonzero cubic form in 4 (surface in P^3) or 5 (threefold in P^4) variables.
class CubicForm {
public:
  explicit CubicForm(QPoly poly);

  const QPoly& poly() const { return poly_; }
  std::size_t nvars() const { return poly_.nvars(); }
  bool is_surface() const { return nvars() == 4; }

private:
  QPoly poly_;
};

bool line_on_surface(const CubicForm& f, const ProjLine& line);

// Coefficients of the normal coordinates in F(frame * y), restricted to
// first order along the line. For a surface these are (Q0, Q1); a threefold
// has three components.
struct DualMapData {
  std::vector<BinaryForm> components;

  const BinaryForm& q0() const { return components.at(0); }
  const BinaryForm& q1() const { return components.at(1); }
};

// Uses the frame (p, q, greedy standard vectors) of the line.
DualMapData dual_map_data(const CubicForm& f, const ProjLine& line);
// Uses an explicit invertible frame whose first two columns span the line.
DualMapData dual_map_data(const CubicForm& f, const ProjLine& line, const QMatrix& frame);

enum class LineKind { first, second, smooth_along };

std::string to_string(LineKind k);

// Surface only. Second: Q0, Q1 dependent; first: independent with a common
// root; smooth_along: coprime. Throws for Q0 = Q1 = 0.
LineKind classify_dual_map(const DualMapData& d);
LineKind classify_line(const CubicForm& f, const ProjLine& line);

struct LinePoint {
  ProjPoint point;
  int multiplicity = 1;
};

struct SingularLocus {
  BinaryForm gcd;                       // monic gcd(Q0, Q1)
  std::vector<LinePoint> rational_points;  // rational roots, ambient coordinates
};

SingularLocus singular_points_on_line(const CubicForm& f, const ProjLine& line);

enum class CubicPattern { distinct3, double_line, triple_line, not_applicable };

std::string to_string(CubicPattern p);

struct SingularityReport {
  int multiplicity = 0;
  int hessian_corank = 0;
  std::optional<int> milnor_number;  // empty when the singularity is not isolated
  CubicPattern cubic_part_pattern = CubicPattern::not_applicable;
  std::optional<std::string> ade_label;
  bool cone_vertex_candidate = false;
};

inline constexpr int kDefaultJetBound = 12;

// The local equation at p (p moved to the origin of an affine chart, in
// variables z1..z(n-1)).
QPoly local_equation(const CubicForm& f, const ProjPoint& p);

SingularityReport classify_singular_point(const CubicForm& f, const ProjPoint& p, int jet_bound = kDefaultJetBound);

// dim Q[[z]]/(df/dz) for f vanishing at the origin, via jets: stops at the
// first k with m^k inside J + m^(k+1). Throws if k would exceed jet_bound.
int milnor_number(const QPoly& f, int jet_bound = kDefaultJetBound);

enum class ConeKind { not_cone, cone_over_smooth_cubic, cone_over_singular_cubic };

std::string to_string(ConeKind k);

ConeKind detect_cone(const CubicForm& f, const ProjPoint& vertex);

// True iff infinitely many lines of the threefold pass through p, i.e. the
// tangent hyperplane section is a cone over a smooth cubic with vertex p.
bool eckardt_check(const CubicForm& y, const ProjPoint& p);

struct TangentQuadric {
  QPoly hyperplane;  // H_v
  QPoly quadric;     // Q_v, determined modulo H_v
};

// Normal form x2*x0^2 + x3*x0*x1 + x4*x1^2 along L = {x2 = x3 = x4 = 0}.
CubicForm threefold_normal_form();

// The hyperplane spanned by L and the normal-direction line
// l[1,0,0,a,-b] + m[0,1,-a,b,0], and the quadric swept by its rescalings.
TangentQuadric tangent_quadric(const Rational& a, const Rational& b);

// Every 3x3 minor of the stacked gradients of F, G, H vanishes identically on L.
bool verify_tangent(const CubicForm& f, const QPoly& g, const QPoly& h, const ProjLine& line);

ProjPoint conjugate_point(const CubicForm& f, const ProjLine& line, const ProjPoint& p);

// Lines must meet in exactly one point; true iff F is singular there.
bool type_iii_exists(const CubicForm& f, const ProjLine& l1, const ProjLine& l2);

std::vector<QPoly> gradient(const QPoly& f);

}  // namespace cubic
