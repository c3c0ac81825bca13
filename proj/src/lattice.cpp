#include "cubic/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "cubic/error.hpp"

namespace cubic {

LatticeVector LatticeVector::basis(std::size_t i) {
  LatticeVector v;
  v.c.at(i) = 1;
  return v;
}

LatticeVector LatticeVector::hyperplane() { return {{3, -1, -1, -1, -1, -1, -1}}; }

LatticeVector& LatticeVector::operator+=(const LatticeVector& v) {
  for (std::size_t i = 0; i < kLatticeRank; ++i) c[i] += v.c[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& v) {
  for (std::size_t i = 0; i < kLatticeRank; ++i) c[i] -= v.c[i];
  return *this;
}

LatticeVector operator*(int k, LatticeVector v) {
  for (auto& x : v.c) x *= k;
  return v;
}

std::string LatticeVector::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < kLatticeRank; ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    const int k = c[i];
    if (k == 0) continue;
    if (k < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (std::abs(k) != 1) os << std::abs(k);
    os << "e" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

LatticeVector parse_lattice_vector(std::string_view csv) {
  LatticeVector v;
  std::size_t i = 0;
  while (true) {
    const auto comma = csv.find(',');
    std::string_view field = csv.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    if (i >= kLatticeRank) throw InputError("lattice vector needs exactly 7 coordinates");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
      throw InputError("malformed lattice coordinate '" + std::string(field) + "'");
    v.c[i++] = value;
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  if (i != kLatticeRank) throw InputError("lattice vector needs exactly 7 coordinates");
  return v;
}

int pairing(const LatticeVector& u, const LatticeVector& v) {
  int s = u.c[0] * v.c[0];
  for (std::size_t i = 1; i < kLatticeRank; ++i) s -= u.c[i] * v.c[i];
  return s;
}

bool is_root(const LatticeVector& v) {
  return pairing(v, v) == -2 && pairing(v, LatticeVector::hyperplane()) == 0;
}

bool is_line_class(const LatticeVector& v) {
  return pairing(v, v) == -1 && pairing(v, LatticeVector::hyperplane()) == 1;
}

Root::Root(const LatticeVector& v) : v_(v) {
  if (!is_root(v)) throw InputError("not a root: " + v.to_csv());
}

LineClass::LineClass(const LatticeVector& v) : v_(v) {
  if (!is_line_class(v)) throw InputError("not a line class: " + v.to_csv());
}

namespace {

// Lexicographic sweep of the box [-3,3]^7 keeping vectors that satisfy
// `keep`. Both roots and line classes have all |coordinates| <= 2, so the box
// is exhaustive.
template <typename Pred>
std::vector<LatticeVector> sweep_box(Pred keep) {
  std::vector<LatticeVector> out;
  LatticeVector v;
  v.c.fill(-3);
  while (true) {
    if (keep(v)) out.push_back(v);
    std::size_t i = kLatticeRank;
    while (i-- > 0) {
      if (v.c[i] < 3) {
        ++v.c[i];
        break;
      }
      v.c[i] = -3;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

template <typename T>
std::optional<std::size_t> index_in(const std::vector<T>& sorted, const LatticeVector& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v,
                             [](const T& a, const LatticeVector& b) { return a.vector() < b; });
  if (it == sorted.end() || it->vector() != v) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

void extend_cliques(std::vector<std::size_t>& current, std::size_t next, std::vector<Sextuple>& out) {
  const auto& lines = enumerate_lines();
  if (current.size() == 6) {
    Sextuple s;
    std::copy(current.begin(), current.end(), s.begin());
    out.push_back(s);
    return;
  }
  for (std::size_t j = next; j < lines.size(); ++j) {
    const bool skew_to_all = std::all_of(current.begin(), current.end(), [&](std::size_t i) {
      return pairing(lines[i].vector(), lines[j].vector()) == 0;
    });
    if (!skew_to_all) continue;
    current.push_back(j);
    extend_cliques(current, j + 1, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<Root>& enumerate_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> out;
    for (const auto& v : sweep_box(is_root)) out.emplace_back(v);
    return out;
  }();
  return roots;
}

const std::vector<LineClass>& enumerate_lines() {
  static const std::vector<LineClass> lines = [] {
    std::vector<LineClass> out;
    for (const auto& v : sweep_box(is_line_class)) out.emplace_back(v);
    return out;
  }();
  return lines;
}

std::optional<std::size_t> root_index(const LatticeVector& v) { return index_in(enumerate_roots(), v); }

std::optional<std::size_t> line_index(const LatticeVector& v) { return index_in(enumerate_lines(), v); }

LatticeVector reflect(const Root& axis, const LatticeVector& v) {
  return v + pairing(axis.vector(), v) * axis.vector();
}

LatticeVector reflect(const LatticeVector& axis, const LatticeVector& v) {
  if (!is_root(axis)) throw InputError("reflection axis must be a root");
  return reflect(Root(axis), v);
}

std::vector<Sextuple> skew_sextuples() {
  std::vector<Sextuple> out;
  std::vector<std::size_t> current;
  extend_cliques(current, 0, out);
  return out;
}

Sextuple sextuple_of_root(const Root& alpha) {
  const auto& lines = enumerate_lines();
  Sextuple s{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (pairing(lines[i].vector(), alpha.vector()) != 1) continue;
    if (n == s.size()) throw InvariantViolation("more than six lines pair to 1 with a root");
    s[n++] = i;
  }
  if (n != s.size()) throw InvariantViolation("fewer than six lines pair to 1 with a root");
  return s;
}

std::vector<DoubleSix> double_sixes() {
  const auto& roots = enumerate_roots();
  std::vector<DoubleSix> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Root neg(-roots[i].vector());
    if (roots[i] < neg) continue;
    out.push_back({sextuple_of_root(roots[i]), sextuple_of_root(neg), i});
  }
  return out;
}

std::vector<std::array<std::size_t, 3>> tritangent_trios() {
  const auto& lines = enumerate_lines();
  const LatticeVector h = LatticeVector::hyperplane();
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (pairing(lines[i].vector(), lines[j].vector()) != 1) continue;
      const auto third = line_index(h - lines[i].vector() - lines[j].vector());
      if (!third || *third <= j) continue;
      const auto& k = lines[*third].vector();
      if (pairing(lines[i].vector(), k) == 1 && pairing(lines[j].vector(), k) == 1)
        out.push_back({i, j, *third});
    }
  return out;
}

std::vector<std::pair<LineClass, LineClass>> six_ways(const LatticeVector& alpha) {
  if (!is_root(alpha)) throw InputError("not a root: " + alpha.to_csv());
  std::vector<std::pair<LineClass, LineClass>> out;
  for (const auto& b2 : enumerate_lines()) {
    const auto b1 = line_index(b2.vector() + alpha);
    if (!b1) continue;
    const auto& first = enumerate_lines()[*b1];
    if (pairing(first.vector(), b2.vector()) == 0) out.emplace_back(first, b2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SkewPairCounts skew_pair_counts() {
  const auto& lines = enumerate_lines();
  SkewPairCounts counts;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines.size(); ++j)
      if (i != j && pairing(lines[i].vector(), lines[j].vector()) == 0) ++counts.ordered;
  counts.unordered = counts.ordered / 2;
  return counts;
}

}  // namespace cubic
