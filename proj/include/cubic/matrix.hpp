#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "cubic/rational.hpp"

namespace cubic {

// Dense row-major matrix over Q. Only the handful of exact operations the
// symbolic layer needs: rank, determinant, inverse, kernel.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> row(std::size_t r) const;

  QMatrix transposed() const;
  QMatrix operator*(const QMatrix& rhs) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  bool operator==(const QMatrix& rhs) const = default;

  std::size_t rank() const;
  Rational determinant() const;
  // Empty when singular.
  std::optional<QMatrix> inverse() const;
  // Basis of {x : A x = 0}, one vector per free column of the reduced form.
  std::vector<std::vector<Rational>> kernel() const;

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> reduce();

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Matrix whose columns are the given vectors (all of equal length).
QMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

}  // namespace cubic
