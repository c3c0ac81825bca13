#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cubic/qpoly.hpp"
#include "cubic/rational.hpp"

namespace testing {

using cubic::Exponent;
using cubic::QPoly;
using cubic::Rational;

inline QPoly poly(std::size_t nvars, std::initializer_list<std::pair<Exponent, Rational>> terms,
                  const std::string& stem = "x") {
  QPoly f(cubic::indexed_vars(stem, nvars));
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

// Small random rationals for property tests.
inline Rational random_rational(std::mt19937& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937& rng, int bound = 5) {
  Rational q;
  do q = random_rational(rng, bound);
  while (sgn(q) == 0);
  return q;
}

}  // namespace testing
