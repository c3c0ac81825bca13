#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubic/matrix.hpp"
#include "cubic/qpoly.hpp"
#include "cubic/rational.hpp"

namespace cubic {

// Point of P^n with rational coordinates, scaled so that the first nonzero
// coordinate is 1. Equality is therefore projective equality.
class ProjPoint {
public:
  explicit ProjPoint(std::vector<Rational> coords);

  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool operator==(const ProjPoint&) const = default;
  std::string to_string() const;

private:
  std::vector<Rational> coords_;
};

// Line through two distinct points.
class ProjLine {
public:
  ProjLine(ProjPoint p, ProjPoint q);
  // span(e_a, e_b) in P^(n-1); e.g. (4, 0, 1) is {x2 = x3 = 0} in P^3.
  static ProjLine coordinate_line(std::size_t n, std::size_t a, std::size_t b);

  const ProjPoint& p() const { return p_; }
  const ProjPoint& q() const { return q_; }
  std::size_t dimension() const { return p_.dimension(); }

  bool contains(const ProjPoint& x) const;
  // (s, t) with x = s p + t q up to scale; throws if x is off the line.
  std::pair<Rational, Rational> line_coordinates(const ProjPoint& x) const;
  ProjPoint point_at(const Rational& s, const Rational& t) const;

  // f restricted to the line, as a polynomial in the two variables (l, m)
  // via x = l p + m q.
  QPoly restrict(const QPoly& f) const;

private:
  ProjPoint p_;
  ProjPoint q_;
};

// Columns: the given vectors, completed to a basis of Q^n by standard basis
// vectors chosen greedily in index order.
QMatrix complete_to_basis(const std::vector<std::vector<Rational>>& leading, std::size_t n);

}  // namespace cubic
