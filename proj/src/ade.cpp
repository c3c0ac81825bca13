#include "cubic/ade.hpp"

#include "cubic/error.hpp"

namespace cubic {

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::string AdeSummand::label() const {
  const char letter = type == AdeType::A ? 'A' : type == AdeType::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank);
}

std::vector<std::pair<int, int>> AdeSummand::dynkin_edges() const {
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case AdeType::A:
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case AdeType::D:
      // Path 0 - ... - (n-2), fork node n-1 on n-3.
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    case AdeType::E:
      // Path 0 - ... - (n-2), branch node n-1 on node 2.
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, rank - 1);
      break;
  }
  return edges;
}

long AdeSummand::weyl_order() const {
  switch (type) {
    case AdeType::A:
      return factorial(rank + 1);
    case AdeType::D:
      return (1L << (rank - 1)) * factorial(rank);
    case AdeType::E:
      return rank == 6 ? 51840L : rank == 7 ? 2903040L : 696729600L;
  }
  return 0;
}

AdeSummand make_summand(char letter, int rank) {
  if (rank < 1) throw InputError("summand rank must be positive");
  switch (letter) {
    case 'A':
      return {AdeType::A, rank};
    case 'D':
      if (rank < 4) throw InputError("D_n needs n >= 4");
      return {AdeType::D, rank};
    case 'E':
      if (rank < 6 || rank > 8) throw InputError("E_n needs n in 6..8");
      return {AdeType::E, rank};
    default:
      throw InputError(std::string("unknown ADE type letter '") + letter + "'");
  }
}

}  // namespace cubic
