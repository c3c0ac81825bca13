#include "cubic/hilbert.hpp"

#include <map>

#include "cubic/error.hpp"
#include "cubic/sparse_echelon.hpp"

namespace cubic {

namespace {

void fill_monomials(std::size_t var, int remaining, Exponent& current, std::vector<Exponent>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current[var] = k;
    fill_monomials(var + 1, remaining - k, current, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent current(nvars, 0);
  fill_monomials(0, degree, current, out);
  return out;
}

long hilbert_function(std::span<const QPoly> generators, int degree, std::size_t nvars) {
  if (degree < 0) throw InputError("negative degree");
  if (!generators.empty()) nvars = generators.front().nvars();
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw InputError("generators over different variables");
    if (!g.is_homogeneous()) throw InputError("inhomogeneous generator " + g.to_string());
  }

  const auto basis = monomials_of_degree(nvars, degree);
  std::map<Exponent, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  SparseEchelon span;
  for (const auto& g : generators) {
    if (g.is_zero() || g.degree() > degree) continue;
    for (const auto& m : monomials_of_degree(nvars, degree - g.degree())) {
      SparseRow row;
      for (const auto& [e, c] : g.terms()) {
        Exponent prod = e;
        for (std::size_t i = 0; i < nvars; ++i) prod[i] += m[i];
        row.emplace(column.at(prod), c);
      }
      span.insert(std::move(row));
    }
  }
  return static_cast<long>(basis.size()) - static_cast<long>(span.rank());
}

SchemeType parse_scheme_type(std::string_view text) {
  if (text == "I") return SchemeType::I;
  if (text == "II") return SchemeType::II;
  if (text == "III") return SchemeType::III;
  if (text == "IV") return SchemeType::IV;
  throw InputError("unknown scheme type '" + std::string(text) + "' (expected I, II, III or IV)");
}

std::string to_string(SchemeType t) {
  switch (t) {
    case SchemeType::I:
      return "I";
    case SchemeType::II:
      return "II";
    case SchemeType::III:
      return "III";
    case SchemeType::IV:
      return "IV";
  }
  return "?";
}

std::vector<QPoly> type_ideal(SchemeType t) {
  const auto vars = indexed_vars("x", 4);
  auto mono = [&](int i, int j) {
    Exponent e(4, 0);
    ++e[static_cast<std::size_t>(i)];
    ++e[static_cast<std::size_t>(j)];
    return QPoly::monomial(vars, e, 1);
  };
  switch (t) {
    case SchemeType::I:  // two skew lines
      return {mono(0, 2), mono(0, 3), mono(1, 2), mono(1, 3)};
    case SchemeType::II:
      return {mono(0, 0), mono(0, 1), mono(1, 1), mono(0, 2) + mono(1, 3)};
    case SchemeType::III:
      return {mono(0, 0), mono(0, 1), mono(0, 2), mono(1, 2)};
    case SchemeType::IV:
      return {mono(0, 0), mono(0, 1), mono(1, 1), mono(0, 2)};
  }
  return {};
}

}  // namespace cubic
