#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace cubic {

enum class AdeType { A, D, E };

// One irreducible simply-laced summand X_n.
struct AdeSummand {
  AdeType type = AdeType::A;
  int rank = 1;

  auto operator<=>(const AdeSummand&) const = default;
  std::string label() const;
  // Dynkin diagram edges on local node indices 0..rank-1.
  std::vector<std::pair<int, int>> dynkin_edges() const;
  // |W(X_n)|.
  long weyl_order() const;
};

// Throws InputError for ranks that do not name a root system (D_n needs
// n >= 4, E_n needs n in {6,7,8}).
AdeSummand make_summand(char letter, int rank);

}  // namespace cubic
