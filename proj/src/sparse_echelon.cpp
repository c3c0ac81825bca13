#include "cubic/sparse_echelon.hpp"

#include <utility>

namespace cubic {

void SparseEchelon::reduce(SparseRow& row) const {
  // Each pass either empties the lead or moves it strictly right, because
  // pivot rows are normalized with their lead at the pivot column.
  auto it = row.begin();
  while (it != row.end()) {
    auto found = pivots_.find(it->first);
    if (found == pivots_.end()) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    const std::size_t col = it->first;
    for (const auto& [c, v] : found->second) {
      Rational& slot = row[c];
      slot -= factor * v;
    }
    for (auto jt = row.begin(); jt != row.end();) {
      if (sgn(jt->second) == 0)
        jt = row.erase(jt);
      else
        ++jt;
    }
    it = row.upper_bound(col);
  }
}

bool SparseEchelon::insert(SparseRow row) {
  reduce(row);
  if (row.empty()) return false;
  const Rational inv = 1 / row.begin()->second;
  for (auto& [c, v] : row) v *= inv;
  const std::size_t lead = row.begin()->first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool SparseEchelon::contains(SparseRow row) const {
  reduce(row);
  return row.empty();
}

}  // namespace cubic
