#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cubic/qpoly.hpp"
#include "cubic/rational.hpp"

namespace cubic {

// Homogeneous form in two variables: coefficient i multiplies x0^(d-i) x1^i.
// The degree is part of the value; x1^2 as a quadric is {0, 0, 1}.
class BinaryForm {
public:
  BinaryForm() : coeffs_{Rational(0)} {}
  explicit BinaryForm(std::vector<Rational> coeffs);

  static BinaryForm zero(std::size_t degree) { return BinaryForm(std::vector<Rational>(degree + 1)); }
  // Extracts a binary form from a polynomial in exactly two variables; throws
  // if not homogeneous. The zero polynomial yields the zero form of `degree`.
  static BinaryForm from_qpoly(const QPoly& p, std::size_t degree);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  Rational evaluate(const Rational& x0, const Rational& x1) const;
  QPoly to_qpoly(std::vector<std::string> vars = {"x0", "x1"}) const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  bool operator==(const BinaryForm& rhs) const = default;

  std::string to_string() const;

private:
  std::vector<Rational> coeffs_;
};

// A rational projective root [x0 : x1] of a binary form, canonicalized so the
// first nonzero coordinate is 1, with its multiplicity.
struct BinaryRoot {
  Rational x0;
  Rational x1;
  int multiplicity = 1;
  bool operator==(const BinaryRoot&) const = default;
};

// Determinant of the Sylvester matrix, p-block rows first.
Rational resultant_binary(const BinaryForm& p, const BinaryForm& q);

// Monic gcd: the first nonzero coefficient is 1. A degree-0 result means no
// common projective root over the algebraic closure.
BinaryForm gcd_binary(const BinaryForm& p, const BinaryForm& q);

// Divides out a known factor; throws if the division is not exact.
BinaryForm exact_divide(const BinaryForm& p, const BinaryForm& divisor);

// Rational roots with multiplicity: [1:0] first, then [0:1], then the rest
// ordered by increasing x0/x1.
std::vector<BinaryRoot> rational_roots(const BinaryForm& p);

// Dimension of the Q-span of the given forms (all of equal degree).
std::size_t span_dimension(const std::vector<BinaryForm>& forms);

}  // namespace cubic
