#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubic {

inline constexpr std::size_t kLatticeRank = 7;
inline constexpr std::size_t kRootCount = 72;
inline constexpr std::size_t kLineCount = 27;

// Vector of I(1,6) in the basis e0..e6, where e0^2 = 1, ei^2 = -1 and the
// basis is orthogonal. Coordinates of every class we touch lie in [-3, 3].
struct LatticeVector {
  std::array<int, kLatticeRank> c{};

  static LatticeVector basis(std::size_t i);
  // Hyperplane class h = 3e0 - e1 - ... - e6.
  static LatticeVector hyperplane();

  LatticeVector& operator+=(const LatticeVector& v);
  LatticeVector& operator-=(const LatticeVector& v);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(int k, LatticeVector v);
  LatticeVector operator-() const { return -1 * *this; }

  auto operator<=>(const LatticeVector&) const = default;

  // "a0,a1,...,a6"
  std::string to_csv() const;
  // "2e0-e1-e2-..." style, for human readable output.
  std::string to_string() const;
};

LatticeVector parse_lattice_vector(std::string_view csv);

int pairing(const LatticeVector& u, const LatticeVector& v);

bool is_root(const LatticeVector& v);
bool is_line_class(const LatticeVector& v);

// alpha^2 = -2, alpha.h = 0.
class Root {
public:
  explicit Root(const LatticeVector& v);
  const LatticeVector& vector() const { return v_; }
  auto operator<=>(const Root&) const = default;

private:
  LatticeVector v_;
};

// beta^2 = -1, beta.h = 1.
class LineClass {
public:
  explicit LineClass(const LatticeVector& v);
  const LatticeVector& vector() const { return v_; }
  auto operator<=>(const LineClass&) const = default;

private:
  LatticeVector v_;
};

// All 72 roots / 27 line classes in lexicographic order of coordinates. The
// position in these lists is the canonical index used throughout.
const std::vector<Root>& enumerate_roots();
const std::vector<LineClass>& enumerate_lines();

std::optional<std::size_t> root_index(const LatticeVector& v);
std::optional<std::size_t> line_index(const LatticeVector& v);

// Picard-Lefschetz / Weyl reflection s_a(b) = b + <a,b> a.
LatticeVector reflect(const Root& axis, const LatticeVector& v);
// Checked variant; throws InputError if `axis` is not a root.
LatticeVector reflect(const LatticeVector& axis, const LatticeVector& v);

// Six mutually skew lines, as sorted line indices.
using Sextuple = std::array<std::size_t, 6>;

// All maximal sets of mutually skew lines, found by clique search on the
// skew graph. Sorted.
std::vector<Sextuple> skew_sextuples();

// Lines pairing to 1 with the root; these are six mutually skew lines.
Sextuple sextuple_of_root(const Root& alpha);

struct DoubleSix {
  Sextuple first;   // sextuple_of_root(alpha)
  Sextuple second;  // sextuple_of_root(-alpha)
  std::size_t root;  // index of alpha, the lexicographically larger of +-alpha
};

std::vector<DoubleSix> double_sixes();

// Unordered triples of line indices, mutually incident, summing to h.
std::vector<std::array<std::size_t, 3>> tritangent_trios();

// Ordered pairs (b1, b2) of skew lines with b1 - b2 = alpha.
// Throws InputError if alpha is not a root.
std::vector<std::pair<LineClass, LineClass>> six_ways(const LatticeVector& alpha);

struct SkewPairCounts {
  long ordered = 0;
  long unordered = 0;
};

SkewPairCounts skew_pair_counts();

}  // namespace cubic
