#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cubic/matrix.hpp"
#include "cubic/rational.hpp"

namespace cubic {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed, named, ordered list of
// variables. Zero coefficients are never stored, so two polynomials over the
// same variables are equal iff their term maps are equal.
class QPoly {
public:
  using TermMap = std::map<Exponent, Rational>;

  QPoly() = default;
  explicit QPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static QPoly constant(std::vector<std::string> vars, const Rational& c);
  static QPoly variable(std::vector<std::string> vars, std::size_t index);
  static QPoly linear_form(std::vector<std::string> vars, std::span<const Rational> coeffs);
  static QPoly monomial(std::vector<std::string> vars, Exponent exp, const Rational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponent& exp, const Rational& coeff);
  Rational coefficient(const Exponent& exp) const;

  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  // Lowest total degree of a term; -1 for zero.
  int order() const;
  bool is_homogeneous() const;
  QPoly homogeneous_part(int d) const;
  QPoly truncated(int max_degree) const;
  // Degree in one variable.
  int degree_in(std::size_t var) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator*(QPoly lhs, const Rational& c) { return lhs *= c; }
  friend QPoly operator*(const Rational& c, QPoly rhs) { return rhs *= c; }
  QPoly pow(unsigned k) const;

  bool operator==(const QPoly& rhs) const { return vars_ == rhs.vars_ && terms_ == rhs.terms_; }

  QPoly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Replaces variable i by images[i]; all images share one variable list,
  // which becomes the variable list of the result.
  QPoly compose(std::span<const QPoly> images) const;

  std::string to_string() const;

private:
  void check_compatible(const QPoly& rhs) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> indexed_vars(const std::string& stem, std::size_t n);

// f(M x): each variable x_i is replaced by sum_j M(i,j) x_j.
// Throws InputError for a non-square/mismatched or singular M.
QPoly substitute_linear(const QPoly& f, const QMatrix& m);

// f(M y) for a possibly rectangular M (nvars(f) x new_vars.size()), with
// no invertibility requirement. Used for restrictions to linear subspaces.
QPoly restrict_linear(const QPoly& f, const QMatrix& m, std::vector<std::string> new_vars);

}  // namespace cubic
