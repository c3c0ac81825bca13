#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>

#include "cubic/rational.hpp"

namespace cubic {

using SparseRow = std::map<std::size_t, Rational>;

// Incrementally maintained row echelon basis of a subspace of Q^n, with rows
// stored sparsely and keyed by their leading (smallest) column. Multiplication
// matrices of polynomial ideals are very sparse, and dense elimination over mpq
// is the bottleneck otherwise.
class SparseEchelon {
public:
  // Reduces `row` against the basis; keeps it if it is independent.
  // Returns true when the rank grew.
  bool insert(SparseRow row);

  // True iff `row` lies in the span.
  bool contains(SparseRow row) const;

  std::size_t rank() const { return pivots_.size(); }

private:
  void reduce(SparseRow& row) const;

  std::unordered_map<std::size_t, SparseRow> pivots_;
};

}  // namespace cubic
