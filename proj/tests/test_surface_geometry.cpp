#include <doctest.h>

#include <random>

#include "cubic/error.hpp"
#include "cubic/surface_geometry.hpp"
#include "support.hpp"

using namespace cubic;
using testing::poly;

namespace {

CubicForm three_a2() { return CubicForm(poly(4, {{{1, 1, 1, 0}, 1}, {{0, 0, 0, 3}, -1}})); }
CubicForm a4_a1() { return CubicForm(poly(4, {{{1, 1, 1, 0}, 1}, {{0, 0, 1, 2}, 1}, {{0, 2, 0, 1}, 1}})); }
CubicForm fermat(std::size_t n) {
  QPoly f(indexed_vars("x", n));
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 3;
    f.add_term(e, 1);
  }
  return CubicForm(f);
}

ProjPoint pt(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return ProjPoint(v);
}

ProjLine line(std::initializer_list<int> p, std::initializer_list<int> q) { return {pt(p), pt(q)}; }

// {x_a = x_b = 0} in P^3 as the span of the other two coordinate points.
ProjLine coordinate_complement(std::size_t a, std::size_t b) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != a && i != b) rest.push_back(i);
  return ProjLine::coordinate_line(4, rest[0], rest[1]);
}

BinaryForm bf(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return BinaryForm(v);
}

// Random invertible frame whose first two columns span the line.
QMatrix random_frame(std::mt19937& rng, const ProjLine& l) {
  const std::size_t n = l.dimension();
  while (true) {
    std::vector<std::vector<Rational>> cols;
    for (int k = 0; k < 2; ++k) {
      const auto s = testing::random_rational(rng), t = testing::random_rational(rng);
      std::vector<Rational> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = s * l.p()[i] + t * l.q()[i];
      cols.push_back(c);
    }
    for (std::size_t k = 2; k < n; ++k) {
      std::vector<Rational> c(n);
      for (auto& x : c) x = testing::random_rational(rng);
      cols.push_back(c);
    }
    const auto m = from_columns(cols);
    if (sgn(m.determinant()) != 0) return m;
  }
}

// Oracle for tangency failure: the gradient matrix at one rational point of
// L has a nonzero 3x3 minor.
bool some_minor_nonzero_at(const std::vector<QPoly>& polys, const std::vector<Rational>& x) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : polys) {
    std::vector<Rational> r;
    for (const auto& d : gradient(f)) r.push_back(d.evaluate(x));
    rows.push_back(r);
  }
  const std::size_t n = x.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        QMatrix m{{rows[0][a], rows[0][b], rows[0][c]}, {rows[1][a], rows[1][b], rows[1][c]},
                  {rows[2][a], rows[2][b], rows[2][c]}};
        if (sgn(m.determinant()) != 0) return true;
      }
  return false;
}

// Two polynomials proportional modulo a linear form: restrict both to the
// hyperplane and compare.
bool proportional_on(const QPoly& f, const QPoly& g, const QPoly& hyperplane) {
  std::vector<Rational> normal;
  for (std::size_t i = 0; i < hyperplane.nvars(); ++i) {
    Exponent e(hyperplane.nvars(), 0);
    e[i] = 1;
    normal.push_back(hyperplane.coefficient(e));
  }
  QMatrix row(1, normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) row(0, i) = normal[i];
  const auto param = from_columns(row.kernel());
  const auto vars = indexed_vars("y", param.cols());
  const auto rf = restrict_linear(f, param, vars);
  const auto rg = restrict_linear(g, param, vars);
  if (rf.is_zero() || rg.is_zero()) return false;
  const auto& [e0, c0] = *rf.terms().begin();
  const Rational ratio = rg.coefficient(e0) / c0;
  return rg == rf * ratio;
}

}  // namespace

TEST_SUITE("surface_geometry") {
  TEST_CASE("cubic form validation") {
    CHECK_THROWS_AS(CubicForm(poly(4, {{{1, 1, 0, 0}, 1}})), InputError);
    CHECK_THROWS_AS(CubicForm(poly(4, {{{3, 0, 0, 0}, 1}, {{1, 0, 0, 0}, 1}})), InputError);
    CHECK_THROWS_AS(CubicForm(QPoly(indexed_vars("x", 4))), InputError);
    CHECK_THROWS_AS(CubicForm(poly(3, {{{3, 0, 0}, 1}})), InputError);
    CHECK(fermat(5).nvars() == 5);
  }

  TEST_CASE("projective points and lines") {
    CHECK(pt({2, 4, 0, -2}) == pt({1, 2, 0, -1}));
    CHECK(pt({0, 3, 1, 0}).to_string() == "[0,1,1/3,0]");
    CHECK_THROWS_AS(pt({0, 0, 0, 0}), InputError);
    CHECK_THROWS_AS(line({1, 0, 0, 0}, {2, 0, 0, 0}), InputError);
    const auto l = line({1, 0, 0, 0}, {0, 1, 0, 0});
    CHECK(l.contains(pt({3, 5, 0, 0})));
    CHECK_FALSE(l.contains(pt({1, 0, 1, 0})));
    CHECK(l.point_at(1, -1) == pt({1, -1, 0, 0}));
    CHECK_THROWS_AS(l.line_coordinates(pt({0, 0, 1, 0})), InputError);
  }

  TEST_CASE("line_on_surface") {
    CHECK(line_on_surface(three_a2(), coordinate_complement(0, 3)));
    CHECK_FALSE(line_on_surface(fermat(4), line({1, 0, 0, 0}, {0, 1, 0, 0})));
    // Both spanning points on the Fermat surface, the line is not.
    const auto f = fermat(4);
    const auto p = pt({1, -1, 0, 0}), q = pt({1, 0, -1, 0});
    CHECK(sgn(f.poly().evaluate(p.coords())) == 0);
    CHECK(sgn(f.poly().evaluate(q.coords())) == 0);
    CHECK_FALSE(line_on_surface(f, ProjLine(p, q)));
    CHECK(line_on_surface(f, line({1, -1, 0, 0}, {0, 0, 1, -1})));
  }

  TEST_CASE("dual map data") {
    const auto d = dual_map_data(three_a2(), coordinate_complement(2, 3));
    CHECK(d.q0() == bf({0, 1, 0}));
    CHECK(d.q1() == bf({0, 0, 0}));
    const auto d2 = dual_map_data(a4_a1(), coordinate_complement(2, 3));
    CHECK(d2.q0() == bf({0, 1, 0}));
    CHECK(d2.q1() == bf({0, 0, 1}));
    const auto d3 = dual_map_data(fermat(4), line({1, -1, 0, 0}, {0, 0, 1, -1}));
    CHECK(sgn(resultant_binary(d3.q0(), d3.q1())) != 0);
    CHECK_THROWS_AS(dual_map_data(fermat(4), line({1, 0, 0, 0}, {0, 1, 0, 0})), InputError);
  }

  TEST_CASE("classify_line examples") {
    CHECK(classify_line(a4_a1(), coordinate_complement(2, 3)) == LineKind::first);
    CHECK(classify_line(a4_a1(), coordinate_complement(1, 2)) == LineKind::second);
    for (auto [a, b] : {std::pair{0, 3}, std::pair{1, 3}, std::pair{2, 3}})
      CHECK(classify_line(three_a2(), coordinate_complement(a, b)) == LineKind::second);
    CHECK(classify_line(fermat(4), line({1, -1, 0, 0}, {0, 0, 1, -1})) == LineKind::smooth_along);
    // Singular along the whole line: x2^2 (...) + x3^2 (...) + x2 x3 (...).
    const CubicForm non_normal(poly(4, {{{1, 0, 2, 0}, 1}, {{0, 1, 0, 2}, 1}, {{0, 0, 1, 2}, 1}}));
    CHECK_THROWS_WITH_AS(classify_line(non_normal, coordinate_complement(2, 3)),
                         "surface singular along line (non-normal)", InputError);
    CHECK_THROWS_AS(classify_line(fermat(5), ProjLine::coordinate_line(5, 0, 1)), InputError);
  }

  TEST_CASE("classify_line is invariant under the normalizing frame") {
    std::mt19937 rng(8675309);
    const std::vector<std::pair<CubicForm, ProjLine>> cases{
        {a4_a1(), coordinate_complement(2, 3)},
        {a4_a1(), coordinate_complement(1, 2)},
        {three_a2(), coordinate_complement(0, 3)},
        {fermat(4), line({1, -1, 0, 0}, {0, 0, 1, -1})},
    };
    for (const auto& [f, l] : cases) {
      const auto reference = classify_line(f, l);
      for (int trial = 0; trial < 10; ++trial)
        CHECK(classify_dual_map(dual_map_data(f, l, random_frame(rng, l))) == reference);
    }
  }

  TEST_CASE("singular points on lines") {
    const auto s = singular_points_on_line(three_a2(), coordinate_complement(2, 3));
    CHECK(s.gcd == bf({0, 1, 0}));
    REQUIRE(s.rational_points.size() == 2);
    CHECK(s.rational_points[0].point == pt({1, 0, 0, 0}));
    CHECK(s.rational_points[1].point == pt({0, 1, 0, 0}));

    const auto t = singular_points_on_line(a4_a1(), coordinate_complement(2, 3));
    CHECK(t.gcd == bf({0, 1}));
    REQUIRE(t.rational_points.size() == 1);
    CHECK(t.rational_points[0].point == pt({1, 0, 0, 0}));

    CHECK(singular_points_on_line(fermat(4), line({1, -1, 0, 0}, {0, 0, 1, -1})).gcd.degree() == 0);

    // smooth_along iff the gcd is constant.
    const std::vector<std::pair<CubicForm, ProjLine>> cases{
        {a4_a1(), coordinate_complement(2, 3)},
        {a4_a1(), coordinate_complement(1, 2)},
        {three_a2(), coordinate_complement(1, 3)},
        {fermat(4), line({1, 0, -1, 0}, {0, 1, 0, -1})},
    };
    for (const auto& [f, l] : cases)
      CHECK((classify_line(f, l) == LineKind::smooth_along) == (singular_points_on_line(f, l).gcd.degree() == 0));
  }

  TEST_CASE("the 3A2 surface") {
    for (auto [a, b] : {std::pair{0, 3}, std::pair{1, 3}, std::pair{2, 3}}) {
      const auto l = coordinate_complement(a, b);
      CHECK(line_on_surface(three_a2(), l));
      CHECK(classify_line(three_a2(), l) == LineKind::second);
      const auto s = singular_points_on_line(three_a2(), l);
      CHECK(s.rational_points.size() == 2);
      for (const auto& p : s.rational_points) CHECK(classify_singular_point(three_a2(), p.point).ade_label == "A2");
    }
  }

  TEST_CASE("singular point classification") {
    const auto r = classify_singular_point(three_a2(), pt({1, 0, 0, 0}));
    CHECK(r.multiplicity == 2);
    CHECK(r.milnor_number == 2);
    CHECK(r.hessian_corank == 1);
    CHECK(r.ade_label == "A2");

    const auto a1 = classify_singular_point(a4_a1(), pt({0, 0, 1, 0}));
    CHECK(a1.milnor_number == 1);
    CHECK(a1.hessian_corank == 0);
    CHECK(a1.ade_label == "A1");

    const auto a4 = classify_singular_point(a4_a1(), pt({1, 0, 0, 0}));
    CHECK(a4.milnor_number == 4);
    CHECK(a4.hessian_corank == 1);
    CHECK(a4.ade_label == "A4");

    CHECK_THROWS_WITH_AS(classify_singular_point(a4_a1(), pt({0, 1, 0, 0})), "not a singular point", InputError);
    CHECK_THROWS_AS(classify_singular_point(a4_a1(), pt({1, 1, 1, 1})), InputError);
  }

  TEST_CASE("D and E types and cone vertices") {
    // x0 x3^2 + x1^3 + x2^3: local z3^2 + z1^3 + z2^3, a D4 point.
    const CubicForm d4(poly(4, {{{1, 0, 0, 2}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 3, 0}, 1}}));
    const auto rd4 = classify_singular_point(d4, pt({1, 0, 0, 0}));
    CHECK(rd4.hessian_corank == 2);
    CHECK(rd4.cubic_part_pattern == CubicPattern::distinct3);
    CHECK(rd4.ade_label == "D4");

    // D5 needs a quartic term, so it is checked on a local equation.
    QPoly d5 = poly(3, {{{0, 0, 2}, 1}, {{2, 1, 0}, 1}, {{0, 4, 0}, 1}}, "z");
    CHECK(milnor_number(d5) == 5);

    // x0 x3^2 + x1^2 x3 + x2^3: local z3^2 + z1^2 z3 + z2^3, an E6 point.
    const CubicForm e6(poly(4, {{{1, 0, 0, 2}, 1}, {{0, 2, 0, 1}, 1}, {{0, 0, 3, 0}, 1}}));
    const auto re6 = classify_singular_point(e6, pt({1, 0, 0, 0}));
    CHECK(re6.hessian_corank == 2);
    CHECK(re6.cubic_part_pattern == CubicPattern::triple_line);
    CHECK(re6.milnor_number == 6);
    CHECK(re6.ade_label == "E6");

    const CubicForm plane_fermat(poly(4, {{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 3, 0}, 1}}));
    const auto cone = classify_singular_point(plane_fermat, pt({0, 0, 0, 1}));
    CHECK(cone.multiplicity == 3);
    CHECK(cone.cone_vertex_candidate);
    CHECK_FALSE(cone.ade_label);
  }

  TEST_CASE("milnor numbers") {
    CHECK(milnor_number(poly(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}, "z")) == 1);
    for (int n = 1; n <= 6; ++n) {
      QPoly f = poly(3, {{{0, 2, 0}, 1}, {{0, 0, 2}, 1}}, "z");
      f.add_term({n + 1, 0, 0}, 1);
      // Oracle: the local algebra has basis 1, x, ..., x^(n-1).
      CHECK(milnor_number(f) == n);
    }
    CHECK(milnor_number(poly(3, {{{0, 1, 1}, 1}, {{3, 0, 0}, -1}}, "z")) == 2);
    CHECK(milnor_number(poly(2, {{{4, 0}, 1}, {{0, 4}, 1}}, "z")) == 9);
    const auto non_isolated = poly(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}}, "z");
    CHECK_THROWS_WITH_AS(milnor_number(non_isolated), "increase jet bound or singularity non-isolated", InputError);
    CHECK_THROWS_AS(milnor_number(poly(2, {{{7, 0}, 1}, {{0, 2}, 1}}, "z"), 3), InputError);
    CHECK(milnor_number(poly(2, {{{7, 0}, 1}, {{0, 2}, 1}}, "z"), 12) == 6);
    CHECK_THROWS_AS(milnor_number(poly(2, {{{0, 0}, 1}, {{0, 2}, 1}}, "z")), InputError);
  }

  TEST_CASE("cone detection") {
    const CubicForm plane_fermat(poly(4, {{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 3, 0}, 1}}));
    CHECK(detect_cone(plane_fermat, pt({0, 0, 0, 1})) == ConeKind::cone_over_smooth_cubic);
    for (const auto& v : {pt({1, 0, 0, 0}), pt({0, 0, 0, 1}), pt({1, -1, 0, 0})})
      CHECK(detect_cone(fermat(4), v) == ConeKind::not_cone);
    const CubicForm singular_base(poly(4, {{{2, 1, 0, 0}, 1}, {{0, 2, 1, 0}, 1}, {{1, 1, 1, 0}, 1}}));
    CHECK(detect_cone(singular_base, pt({0, 0, 0, 1})) == ConeKind::cone_over_singular_cubic);
    // Vertex off the coordinate axes: substitute x3 -> x3 + x0 style shear.
    const CubicForm sheared(poly(4, {{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 3, 0}, 1}}));
    QMatrix m = QMatrix::identity(4);
    m(0, 3) = 1;  // x0 -> x0 + x3, so the vertex moves to [-1, 0, 0, 1]
    const CubicForm moved(substitute_linear(sheared.poly(), m));
    CHECK(detect_cone(moved, pt({-1, 0, 0, 1})) == ConeKind::cone_over_smooth_cubic);
    CHECK(detect_cone(moved, pt({0, 0, 0, 1})) == ConeKind::not_cone);
  }

  TEST_CASE("Eckardt points") {
    CHECK(eckardt_check(fermat(5), pt({1, -1, 0, 0, 0})));
    auto perturbed = fermat(5).poly();
    perturbed.add_term({1, 0, 1, 1, 0}, 1);
    CHECK_FALSE(eckardt_check(CubicForm(perturbed), pt({1, -1, 0, 0, 0})));
    CHECK_THROWS_AS(eckardt_check(fermat(5), pt({1, 0, 0, 0, 0})), InputError);
    // Singular point of the threefold.
    const CubicForm cone(poly(5, {{{3, 0, 0, 0, 0}, 1}, {{0, 3, 0, 0, 0}, 1}, {{0, 0, 3, 0, 0}, 1},
                                  {{0, 0, 0, 3, 0}, 1}}));
    CHECK_THROWS_AS(eckardt_check(cone, pt({0, 0, 0, 0, 1})), InputError);
    CHECK_THROWS_AS(eckardt_check(fermat(4), pt({1, -1, 0, 0})), InputError);
  }

  TEST_CASE("tangent quadric examples") {
    const auto t11 = tangent_quadric(1, 1);
    CHECK(t11.hyperplane == poly(5, {{{0, 0, 1, 0, 0}, 1}, {{0, 0, 0, 1, 0}, 1}, {{0, 0, 0, 0, 1}, 1}}));
    CHECK(t11.quadric == poly(5, {{{0, 1, 1, 0, 0}, 1}, {{0, 1, 0, 1, 0}, 1}, {{1, 0, 1, 0, 0}, 1}}));
    CHECK(tangent_quadric(1, 0).hyperplane == poly(5, {{{0, 0, 0, 0, 1}, 1}}));
    const auto t01 = tangent_quadric(0, 1);
    CHECK(t01.hyperplane == poly(5, {{{0, 0, 1, 0, 0}, 1}}));
    CHECK(t01.quadric == poly(5, {{{1, 0, 0, 1, 0}, 1}, {{0, 1, 0, 0, 1}, 1}}));
    CHECK_THROWS_AS(tangent_quadric(0, 0), InputError);
  }

  TEST_CASE("tangent quadric agrees with the closed formulas when ab != 0") {
    std::mt19937 rng(1729);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = testing::random_nonzero_rational(rng), b = testing::random_nonzero_rational(rng);
      const auto t = tangent_quadric(a, b);
      const auto vars = indexed_vars("x", 5);
      auto m = [&](int i, int j, const Rational& c) {
        Exponent e(5, 0);
        ++e[static_cast<std::size_t>(i)];
        ++e[static_cast<std::size_t>(j)];
        return QPoly::monomial(vars, e, c);
      };
      auto lin = [&](int i, const Rational& c) {
        Exponent e(5, 0);
        e[static_cast<std::size_t>(i)] = 1;
        return QPoly::monomial(vars, e, c);
      };
      const QPoly h = lin(4, a * a) + lin(2, b * b) + lin(3, a * b);
      const QPoly q1 = m(1, 2, b) + m(1, 3, a) + m(0, 2, a);
      const QPoly q2 = m(0, 4, a) + m(0, 3, b) + m(1, 4, b);
      const auto& [lead_exp, lead] = *t.hyperplane.terms().rbegin();
      CHECK(t.hyperplane * (h.coefficient(lead_exp) / lead) == h);
      CHECK(proportional_on(t.quadric, q1, h));
      CHECK(proportional_on(t.quadric, q2, h));
    }
  }

  TEST_CASE("verify_tangent") {
    const auto f0 = threefold_normal_form();
    const auto l = ProjLine::coordinate_line(5, 0, 1);
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 0}, std::pair{0, 1}}) {
      const auto t = tangent_quadric(a, b);
      CHECK(verify_tangent(f0, t.hyperplane, t.quadric, l));
    }
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = testing::random_rational(rng), b = testing::random_nonzero_rational(rng);
      const auto t = tangent_quadric(a, b);
      CHECK(verify_tangent(f0, t.hyperplane, t.quadric, l));
    }
    // A generic quadric through L is not tangent; confirmed by a pointwise minor.
    const auto t = tangent_quadric(1, 1);
    const auto generic = poly(5, {{{1, 0, 1, 0, 0}, 2}, {{0, 1, 0, 0, 1}, -3}, {{0, 0, 1, 1, 0}, 1}, {{1, 0, 0, 1, 0}, 5}});
    CHECK_FALSE(verify_tangent(f0, t.hyperplane, generic, l));
    CHECK(some_minor_nonzero_at({f0.poly(), t.hyperplane, generic}, {1, 2, 0, 0, 0}));
    const auto off_line = poly(5, {{{2, 0, 0, 0, 0}, 1}});
    CHECK_THROWS_AS(verify_tangent(f0, t.hyperplane, off_line, l), InputError);
  }

  TEST_CASE("conjugate points") {
    const CubicForm second(poly(5, {{{2, 0, 1, 0, 0}, 1}, {{0, 2, 0, 0, 1}, 1}}));
    const auto l = ProjLine::coordinate_line(5, 0, 1);
    CHECK(conjugate_point(second, l, pt({1, 1, 0, 0, 0})) == pt({1, -1, 0, 0, 0}));
    CHECK(conjugate_point(second, l, pt({1, 0, 0, 0, 0})) == pt({1, 0, 0, 0, 0}));
    // On the full normal form the dual map is injective.
    const auto f0 = threefold_normal_form();
    CHECK(conjugate_point(f0, l, pt({1, 3, 0, 0, 0})) == pt({1, 3, 0, 0, 0}));
    // First-type line on a surface.
    CHECK(conjugate_point(a4_a1(), coordinate_complement(2, 3), pt({1, 1, 0, 0})) == pt({1, 1, 0, 0}));
    CHECK_THROWS_AS(conjugate_point(second, l, pt({0, 0, 1, 0, 0})), InputError);
    const CubicForm flat(poly(5, {{{2, 0, 1, 0, 0}, 1}, {{1, 1, 1, 0, 0}, 1}}));
    CHECK_THROWS_AS(conjugate_point(flat, l, pt({1, 1, 0, 0, 0})), InputError);
  }

  TEST_CASE("conjugation is an involution on second-type lines") {
    const CubicForm second(poly(5, {{{2, 0, 1, 0, 0}, 1}, {{0, 2, 0, 0, 1}, 1}}));
    const auto l = ProjLine::coordinate_line(5, 0, 1);
    std::mt19937 rng(161803);
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = l.point_at(testing::random_nonzero_rational(rng), testing::random_nonzero_rational(rng));
      const auto q = conjugate_point(second, l, p);
      CHECK_FALSE(q == p);
      CHECK(conjugate_point(second, l, q) == p);
    }
    // Surface with (Q0, Q1) = (x0^2, x1^2): planes through the line are
    // tangent at [s, t] and [s, -t].
    const CubicForm s(poly(4, {{{2, 0, 1, 0}, 1}, {{0, 2, 0, 1}, 1}}));
    const auto lm = coordinate_complement(2, 3);
    CHECK(classify_line(s, lm) == LineKind::smooth_along);
    CHECK(conjugate_point(s, lm, pt({1, 2, 0, 0})) == pt({1, -2, 0, 0}));
  }

  TEST_CASE("type III existence") {
    CHECK(type_iii_exists(three_a2(), coordinate_complement(0, 3), coordinate_complement(1, 3)));
    const auto f = fermat(4);
    CHECK_FALSE(type_iii_exists(f, line({1, -1, 0, 0}, {0, 0, 1, -1}), line({1, 0, -1, 0}, {0, 1, 0, -1})));
    const CubicForm skew(poly(4, {{{2, 0, 1, 0}, 1}, {{1, 0, 1, 1}, 1}, {{0, 2, 0, 1}, 1}, {{0, 1, 1, 1}, 1}}));
    const auto l1 = coordinate_complement(0, 1), l2 = coordinate_complement(2, 3);
    REQUIRE(line_on_surface(skew, l1));
    REQUIRE(line_on_surface(skew, l2));
    CHECK_THROWS_WITH_AS(type_iii_exists(skew, l1, l2), "lines must be incident", InputError);
    CHECK_THROWS_AS(type_iii_exists(skew, l1, l1), InputError);
  }
}
