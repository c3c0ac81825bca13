#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubic/qpoly.hpp"

namespace cubic {

// All exponent vectors of total degree `degree` in `nvars` variables, in
// lexicographic order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

// dim_Q (Q[x]/I)_degree for the ideal generated by homogeneous `generators`,
// by exact rank of the span of monomial multiples in that degree. `nvars`
// is used when the generator list is empty. Zero generators are ignored.
long hilbert_function(std::span<const QPoly> generators, int degree, std::size_t nvars = 4);

// The four monomial-or-binomial ideals in Q[x0..x3] cutting out the scheme
// types of a pair of lines degenerating to a double structure.
enum class SchemeType { I, II, III, IV };

SchemeType parse_scheme_type(std::string_view text);
std::string to_string(SchemeType t);
std::vector<QPoly> type_ideal(SchemeType t);

}  // namespace cubic
