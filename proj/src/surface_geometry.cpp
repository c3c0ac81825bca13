#include "cubic/surface_geometry.hpp"

#include <algorithm>
#include <map>

#include "cubic/error.hpp"
#include "cubic/hilbert.hpp"
#include "cubic/sparse_echelon.hpp"

namespace cubic {

namespace {

std::vector<Rational> evaluate_all(const std::vector<QPoly>& polys, std::span<const Rational> x) {
  std::vector<Rational> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.evaluate(x));
  return out;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
}

void require_same_space(const CubicForm& f, const ProjLine& line) {
  if (f.nvars() != line.dimension()) throw InputError("line and cubic live in different projective spaces");
}

void require_on_surface(const CubicForm& f, const ProjLine& line) {
  if (!line_on_surface(f, line)) throw InputError("line is not contained in the cubic");
}

// Scales to primitive integer coefficients with a positive lex-leading term.
QPoly primitive(QPoly p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
  Integer num = 0;
  for (const auto& [e, c] : p.terms()) num = gcd(num, Rational(c * den).get_num());
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(p.terms().rbegin()->second) < 0) scale = -scale;
  return p * scale;
}

QPoly det3(const std::array<std::array<QPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

BinaryForm binary_partial(const BinaryForm& f, std::size_t var) {
  if (f.degree() == 0) return BinaryForm::zero(0);
  return BinaryForm::from_qpoly(f.to_qpoly().derivative(var), f.degree() - 1);
}

// gcd of a list of forms, skipping zero forms; empty optional if all zero.
std::optional<BinaryForm> gcd_all(const std::vector<BinaryForm>& forms) {
  std::optional<BinaryForm> g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    g = g ? gcd_binary(*g, f) : gcd_binary(f, BinaryForm::zero(f.degree()));
  }
  return g;
}

std::vector<Exponent> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  for (int d = 0; d <= degree; ++d) {
    auto part = monomials_of_degree(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Span of the truncations to degree <= k of all x^a * g, |a| <= k.
SparseEchelon truncated_jacobian_span(const std::vector<QPoly>& partials, int k,
                                      const std::map<Exponent, std::size_t>& column) {
  SparseEchelon span;
  if (partials.empty()) return span;
  const std::size_t nv = partials.front().nvars();
  for (const auto& g : partials) {
    if (g.is_zero()) continue;
    for (const auto& a : monomials_up_to(nv, k)) {
      SparseRow row;
      int deg_a = 0;
      for (int x : a) deg_a += x;
      for (const auto& [e, c] : g.terms()) {
        int deg = deg_a;
        for (int x : e) deg += x;
        if (deg > k) continue;
        Exponent prod = e;
        for (std::size_t i = 0; i < nv; ++i) prod[i] += a[i];
        row.emplace(column.at(prod), c);
      }
      if (!row.empty()) span.insert(std::move(row));
    }
  }
  return span;
}

std::map<Exponent, std::size_t> column_index(const std::vector<Exponent>& monos) {
  std::map<Exponent, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], i);
  return col;
}

}  // namespace

CubicForm::CubicForm(QPoly poly) : poly_(std::move(poly)) {
  if (poly_.nvars() != 4 && poly_.nvars() != 5) throw InputError("cubic form needs 4 or 5 variables");
  if (poly_.is_zero()) throw InputError("cubic form is zero");
  if (!poly_.is_homogeneous() || poly_.degree() != 3) throw InputError("cubic form must be homogeneous of degree 3");
}

std::vector<QPoly> gradient(const QPoly& f) {
  std::vector<QPoly> g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

bool line_on_surface(const CubicForm& f, const ProjLine& line) {
  require_same_space(f, line);
  return line.restrict(f.poly()).is_zero();
}

DualMapData dual_map_data(const CubicForm& f, const ProjLine& line) {
  return dual_map_data(f, line, complete_to_basis({line.p().coords(), line.q().coords()}, f.nvars()));
}

DualMapData dual_map_data(const CubicForm& f, const ProjLine& line, const QMatrix& frame) {
  require_same_space(f, line);
  require_on_surface(f, line);
  if (frame.rows() != f.nvars() || !frame.square()) throw InputError("frame dimension mismatch");
  if (from_columns({line.p().coords(), line.q().coords(), frame.column(0), frame.column(1)}).rank() != 2)
    throw InputError("first two frame columns must span the line");
  const QPoly g = substitute_linear(f.poly(), frame);
  DualMapData d;
  const std::size_t n = f.nvars();
  for (std::size_t k = 2; k < n; ++k) {
    BinaryForm q = BinaryForm::zero(2);
    std::vector<Rational> coeffs(3);
    for (const auto& [e, c] : g.terms()) {
      if (e[k] != 1) continue;
      bool pure = true;
      for (std::size_t j = 2; j < n && pure; ++j)
        if (j != k && e[j] != 0) pure = false;
      if (pure) coeffs[static_cast<std::size_t>(e[1])] = c;
    }
    d.components.emplace_back(std::move(coeffs));
  }
  return d;
}

std::string to_string(LineKind k) {
  switch (k) {
    case LineKind::first:
      return "first";
    case LineKind::second:
      return "second";
    case LineKind::smooth_along:
      return "smooth_along";
  }
  return "?";
}

LineKind classify_dual_map(const DualMapData& d) {
  if (d.components.size() != 2) throw InputError("line classification needs a surface in P^3");
  const auto& q0 = d.q0();
  const auto& q1 = d.q1();
  if (q0.is_zero() && q1.is_zero()) throw InputError("surface singular along line (non-normal)");
  if (span_dimension({q0, q1}) < 2) return LineKind::second;
  if (sgn(resultant_binary(q0, q1)) == 0) return LineKind::first;
  return LineKind::smooth_along;
}

LineKind classify_line(const CubicForm& f, const ProjLine& line) { return classify_dual_map(dual_map_data(f, line)); }

SingularLocus singular_points_on_line(const CubicForm& f, const ProjLine& line) {
  const auto d = dual_map_data(f, line);
  if (d.components.size() != 2) throw InputError("singular points on a line need a surface in P^3");
  const auto g = gcd_all(d.components);
  if (!g) throw InputError("surface singular along line (non-normal)");
  SingularLocus locus{*g, {}};
  if (g->degree() == 0) return locus;
  for (const auto& r : rational_roots(*g))
    locus.rational_points.push_back({line.point_at(r.x0, r.x1), r.multiplicity});
  return locus;
}

std::string to_string(CubicPattern p) {
  switch (p) {
    case CubicPattern::distinct3:
      return "distinct3";
    case CubicPattern::double_line:
      return "double_line";
    case CubicPattern::triple_line:
      return "triple_line";
    case CubicPattern::not_applicable:
      return "n/a";
  }
  return "?";
}

QPoly local_equation(const CubicForm& f, const ProjPoint& p) {
  if (p.dimension() != f.nvars()) throw InputError("point and cubic live in different projective spaces");
  const std::size_t n = f.nvars();
  const QPoly g = substitute_linear(f.poly(), complete_to_basis({p.coords()}, n));
  std::vector<std::string> local;
  for (std::size_t i = 1; i < n; ++i) local.push_back("z" + std::to_string(i));
  std::vector<QPoly> images{QPoly::constant(local, 1)};
  for (std::size_t i = 0; i + 1 < n; ++i) images.push_back(QPoly::variable(local, i));
  return g.compose(images);
}

int milnor_number(const QPoly& f, int jet_bound) {
  if (sgn(f.coefficient(Exponent(f.nvars(), 0))) != 0) throw InputError("local equation must vanish at the origin");
  const auto partials = gradient(f);
  const std::size_t nv = f.nvars();
  for (int k = 0; k <= jet_bound; ++k) {
    const auto monos = monomials_up_to(nv, k);
    const auto column = column_index(monos);
    const SparseEchelon span = truncated_jacobian_span(partials, k, column);
    bool stable = true;
    for (const auto& m : monomials_of_degree(nv, k))
      if (!span.contains(SparseRow{{column.at(m), Rational(1)}})) {
        stable = false;
        break;
      }
    if (!stable) continue;
    // m^k lies in the Jacobian ideal, so the local algebra is Q[z]/(J + m^k).
    if (k == 0) return 0;
    const auto lower = monomials_up_to(nv, k - 1);
    const auto lower_column = column_index(lower);
    const SparseEchelon lower_span = truncated_jacobian_span(partials, k - 1, lower_column);
    return static_cast<int>(lower.size() - lower_span.rank());
  }
  throw InputError("increase jet bound or singularity non-isolated");
}

SingularityReport classify_singular_point(const CubicForm& f, const ProjPoint& p, int jet_bound) {
  if (p.dimension() != f.nvars()) throw InputError("point and cubic live in different projective spaces");
  if (sgn(f.poly().evaluate(p.coords())) != 0 || !all_zero(evaluate_all(gradient(f.poly()), p.coords())))
    throw InputError("not a singular point");

  const QPoly local = local_equation(f, p);
  const std::size_t nv = local.nvars();
  SingularityReport report;
  report.multiplicity = local.order();

  QMatrix hessian(nv, nv);
  const QPoly quadratic = local.homogeneous_part(2);
  for (const auto& [e, c] : quadratic.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < nv; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      hessian(idx[0], idx[0]) = 2 * c;
    } else {
      hessian(idx[0], idx[1]) = c;
      hessian(idx[1], idx[0]) = c;
    }
  }
  report.hessian_corank = static_cast<int>(nv - hessian.rank());
  report.cone_vertex_candidate = report.multiplicity >= 3;

  try {
    report.milnor_number = milnor_number(local, jet_bound);
  } catch (const InputError&) {
    report.milnor_number.reset();
  }

  if (report.hessian_corank == 2) {
    const auto kernel = hessian.kernel();
    QMatrix restriction = from_columns(kernel);
    const QPoly cubic_on_kernel = restrict_linear(local.homogeneous_part(3), restriction, {"s", "t"});
    if (!cubic_on_kernel.is_zero()) {
      const BinaryForm c = BinaryForm::from_qpoly(cubic_on_kernel, 3);
      const auto g = gcd_all({binary_partial(c, 0), binary_partial(c, 1)});
      const std::size_t repeated = g ? g->degree() : 2;
      report.cubic_part_pattern = repeated == 0   ? CubicPattern::distinct3
                                  : repeated == 1 ? CubicPattern::double_line
                                                  : CubicPattern::triple_line;
    }
  }

  if (report.multiplicity == 2 && report.milnor_number) {
    const int mu = *report.milnor_number;
    if (report.hessian_corank == 0) {
      report.ade_label = "A1";
    } else if (report.hessian_corank == 1) {
      report.ade_label = "A" + std::to_string(mu);
    } else if (report.hessian_corank == 2) {
      if (report.cubic_part_pattern == CubicPattern::distinct3 && mu == 4)
        report.ade_label = "D4";
      else if (report.cubic_part_pattern == CubicPattern::double_line && mu >= 5)
        report.ade_label = "D" + std::to_string(mu);
      else if (report.cubic_part_pattern == CubicPattern::triple_line && mu >= 6 && mu <= 8)
        report.ade_label = "E" + std::to_string(mu);
    }
  }
  return report;
}

std::string to_string(ConeKind k) {
  switch (k) {
    case ConeKind::not_cone:
      return "not_cone";
    case ConeKind::cone_over_smooth_cubic:
      return "cone_over_smooth_cubic";
    case ConeKind::cone_over_singular_cubic:
      return "cone_over_singular_cubic";
  }
  return "?";
}

ConeKind detect_cone(const CubicForm& f, const ProjPoint& vertex) {
  if (vertex.dimension() != f.nvars()) throw InputError("vertex and cubic live in different projective spaces");
  const std::size_t n = f.nvars();
  for (const auto& first : gradient(f.poly()))
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(first.derivative(j).evaluate(vertex.coords())) != 0) return ConeKind::not_cone;

  const QPoly g = substitute_linear(f.poly(), complete_to_basis({vertex.coords()}, n));
  if (g.degree_in(0) > 0) throw InvariantViolation("vanishing second partials but cubic depends on the vertex direction");
  const auto base_vars = indexed_vars("w", n - 1);
  std::vector<QPoly> images{QPoly(base_vars)};
  for (std::size_t i = 0; i + 1 < n; ++i) images.push_back(QPoly::variable(base_vars, i));
  const QPoly base = g.compose(images);

  // The base is smooth iff its partials (n-1 quadrics in n-1 variables) cut
  // out nothing projectively, i.e. form a regular sequence; then the quotient
  // vanishes in degree n.
  const auto partials = gradient(base);
  const long h = hilbert_function(partials, static_cast<int>(n), n - 1);
  return h == 0 ? ConeKind::cone_over_smooth_cubic : ConeKind::cone_over_singular_cubic;
}

bool eckardt_check(const CubicForm& y, const ProjPoint& p) {
  if (y.nvars() != 5) throw InputError("Eckardt check needs a cubic threefold in P^4");
  if (p.dimension() != 5) throw InputError("point must lie in P^4");
  if (sgn(y.poly().evaluate(p.coords())) != 0) throw InputError("point is not on the threefold");
  const auto grad = evaluate_all(gradient(y.poly()), p.coords());
  if (all_zero(grad)) throw InputError("threefold is singular at the point");

  QMatrix normal(1, 5);
  for (std::size_t i = 0; i < 5; ++i) normal(0, i) = grad[i];
  std::vector<std::vector<Rational>> frame{p.coords()};
  for (const auto& v : normal.kernel()) {
    frame.push_back(v);
    if (from_columns(frame).rank() != frame.size()) frame.pop_back();
  }
  const QPoly section = restrict_linear(y.poly(), from_columns(frame), indexed_vars("y", 4));
  if (section.is_zero()) return false;
  return detect_cone(CubicForm(section), ProjPoint({1, 0, 0, 0})) == ConeKind::cone_over_smooth_cubic;
}

CubicForm threefold_normal_form() {
  const auto vars = indexed_vars("x", 5);
  QPoly f(vars);
  f.add_term({2, 0, 1, 0, 0}, 1);
  f.add_term({1, 1, 0, 1, 0}, 1);
  f.add_term({0, 2, 0, 0, 1}, 1);
  return CubicForm(f);
}

TangentQuadric tangent_quadric(const Rational& a, const Rational& b) {
  if (sgn(a) == 0 && sgn(b) == 0) throw InputError("tangent direction (a, b) must be nonzero");
  const auto vars = indexed_vars("x", 5);
  // Normal-direction line l*u0 + m*u1 and the normal parts d0, d1 of u0, u1.
  const std::vector<Rational> u0{1, 0, 0, a, -b};
  const std::vector<Rational> u1{0, 1, -a, b, 0};

  QMatrix span(4, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    span(0, i) = i == 0 ? 1 : 0;
    span(1, i) = i == 1 ? 1 : 0;
    span(2, i) = u0[i];
    span(3, i) = u1[i];
  }
  const auto normals = span.kernel();
  if (normals.size() != 1) throw InvariantViolation("L and L_v do not span a hyperplane");
  TangentQuadric out;
  out.hyperplane = primitive(QPoly::linear_form(vars, normals.front()));

  // Rescaling the normal part by s sweeps points with (x2, x3, x4) = s * w,
  // w = x0 * d0 + x1 * d1; eliminating s leaves the 2x2 minors of
  // [(x2, x3, x4); w].
  const QPoly x0 = QPoly::variable(vars, 0);
  const QPoly x1 = QPoly::variable(vars, 1);
  std::array<QPoly, 3> normal_coords, w;
  for (std::size_t j = 0; j < 3; ++j) {
    normal_coords[j] = QPoly::variable(vars, j + 2);
    w[j] = x0 * QPoly::constant(vars, u0[j + 2]) + x1 * QPoly::constant(vars, u1[j + 2]);
  }

  QMatrix hyperplane_param(5, 4);
  {
    QMatrix row(1, 5);
    for (std::size_t i = 0; i < 5; ++i) row(0, i) = normals.front()[i];
    hyperplane_param = from_columns(row.kernel());
  }
  for (auto [j, k] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
    const QPoly minor = normal_coords[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(k)] -
                        normal_coords[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(j)];
    if (restrict_linear(minor, hyperplane_param, indexed_vars("y", 4)).is_zero()) continue;
    out.quadric = primitive(minor);
    return out;
  }
  throw InvariantViolation("swept quadric vanishes identically on its hyperplane");
}

bool verify_tangent(const CubicForm& f, const QPoly& g, const QPoly& h, const ProjLine& line) {
  require_same_space(f, line);
  if (g.nvars() != f.nvars() || h.nvars() != f.nvars()) throw InputError("F, G, H must share variables");
  if (!line.restrict(f.poly()).is_zero() || !line.restrict(g).is_zero() || !line.restrict(h).is_zero())
    throw InputError("line is not contained in all three hypersurfaces");
  const std::size_t n = f.nvars();
  std::array<std::vector<QPoly>, 3> rows;
  std::size_t r = 0;
  for (const QPoly* poly : {&f.poly(), &g, &h}) {
    for (const auto& d : gradient(*poly)) rows[r].push_back(line.restrict(d));
    ++r;
  }
  for (std::size_t c0 = 0; c0 < n; ++c0)
    for (std::size_t c1 = c0 + 1; c1 < n; ++c1)
      for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
        std::array<std::array<QPoly, 3>, 3> m;
        for (std::size_t i = 0; i < 3; ++i) m[i] = {rows[i][c0], rows[i][c1], rows[i][c2]};
        if (!det3(m).is_zero()) return false;
      }
  return true;
}

ProjPoint conjugate_point(const CubicForm& f, const ProjLine& line, const ProjPoint& p) {
  const auto [s0, t0] = line.line_coordinates(p);
  const auto d = dual_map_data(f, line);
  const auto g = gcd_all(d.components);
  if (!g) throw InputError("dual-map data degenerate: cubic singular along the line");
  if (g->degree() == 2) throw InputError("dual-map data degenerate: dual map is constant along the line");

  std::vector<BinaryForm> reduced;
  for (const auto& c : d.components)
    reduced.push_back(c.is_zero() ? BinaryForm::zero(2 - g->degree()) : exact_divide(c, *g));
  if (g->degree() == 1 || span_dimension(reduced) >= 3) return p;  // injective dual map

  // Two independent components A, B; the fibre through p is the zero set of
  // A * B(p) - B * A(p), which has the root p.
  std::vector<BinaryForm> basis;
  for (const auto& c : reduced) {
    basis.push_back(c);
    if (span_dimension(basis) != basis.size()) basis.pop_back();
  }
  const auto& A = basis.at(0);
  const auto& B = basis.at(1);
  const Rational a_p = A.evaluate(s0, t0);
  const Rational b_p = B.evaluate(s0, t0);
  std::vector<Rational> fibre(3);
  for (std::size_t i = 0; i < 3; ++i) fibre[i] = A[i] * b_p - B[i] * a_p;
  const BinaryForm other = exact_divide(BinaryForm(fibre), BinaryForm({t0, -s0}));
  return line.point_at(other[1], -other[0]);
}

bool type_iii_exists(const CubicForm& f, const ProjLine& l1, const ProjLine& l2) {
  require_same_space(f, l1);
  require_same_space(f, l2);
  require_on_surface(f, l1);
  require_on_surface(f, l2);
  const QMatrix m = from_columns({l1.p().coords(), l1.q().coords(), l2.p().coords(), l2.q().coords()});
  if (m.rank() != 3) throw InputError("lines must be incident");
  const auto k = m.kernel().front();
  const ProjPoint meet = l1.point_at(k[0], k[1]);
  return all_zero(evaluate_all(gradient(f.poly()), meet.coords()));
}

}  // namespace cubic
