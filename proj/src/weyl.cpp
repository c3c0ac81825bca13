#include "cubic/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "cubic/error.hpp"
#include "cubic/matrix.hpp"

namespace cubic {

namespace {

constexpr std::array<int, kLatticeRank> kGram = {1, -1, -1, -1, -1, -1, -1};

std::size_t require_root_index(const LatticeVector& v) {
  const auto idx = root_index(v);
  if (!idx) throw InvariantViolation("lattice map sends a root to a non-root: " + v.to_csv());
  return *idx;
}

LatticeVector multiply(const LatticeMatrix& m, const LatticeVector& v) {
  LatticeVector out;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < kLatticeRank; ++j) s += m[i][j] * v.c[j];
    out.c[i] = s;
  }
  return out;
}

// reflection_table()[a][r] = index of s_a(root r).
const std::vector<RootPerm>& reflection_table() {
  static const std::vector<RootPerm> table = [] {
    const auto& roots = enumerate_roots();
    std::vector<RootPerm> t(kRootCount);
    for (std::size_t a = 0; a < kRootCount; ++a)
      for (std::size_t r = 0; r < kRootCount; ++r)
        t[a][r] = static_cast<std::uint8_t>(require_root_index(reflect(roots[a], roots[r].vector())));
    return t;
  }();
  return table;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

RootSet reflection_closure(std::span<const std::size_t> simple) {
  const auto& table = reflection_table();
  RootSet seen;
  std::vector<std::size_t> stack(simple.begin(), simple.end());
  for (auto r : simple) seen.set(r);
  while (!stack.empty()) {
    const std::size_t r = stack.back();
    stack.pop_back();
    for (auto a : simple) {
      const std::size_t img = table[a][r];
      if (!seen.test(img)) {
        seen.set(img);
        stack.push_back(img);
      }
    }
  }
  return seen;
}

}  // namespace

GroupElement GroupElement::identity() {
  GroupElement g;
  for (std::size_t i = 0; i < kLatticeRank; ++i) g.matrix_[i][i] = 1;
  std::iota(g.perm_.begin(), g.perm_.end(), std::uint8_t{0});
  return g;
}

GroupElement GroupElement::reflection(const Root& alpha) {
  GroupElement g;
  const auto& a = alpha.vector().c;
  for (std::size_t i = 0; i < kLatticeRank; ++i)
    for (std::size_t j = 0; j < kLatticeRank; ++j) g.matrix_[i][j] = (i == j ? 1 : 0) + a[i] * kGram[j] * a[j];
  const auto idx = root_index(alpha.vector());
  g.perm_ = reflection_table()[*idx];
  return g;
}

GroupElement GroupElement::from_matrix(const LatticeMatrix& m) {
  for (std::size_t i = 0; i < kLatticeRank; ++i)
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < kLatticeRank; ++k) s += m[k][i] * kGram[k] * m[k][j];
      if (s != (i == j ? kGram[i] : 0)) throw InputError("matrix does not preserve the pairing");
    }
  const auto h = LatticeVector::hyperplane();
  if (multiply(m, h) != h) throw InputError("matrix does not fix the hyperplane class");
  GroupElement g;
  g.matrix_ = m;
  const auto& roots = enumerate_roots();
  for (std::size_t r = 0; r < kRootCount; ++r)
    g.perm_[r] = static_cast<std::uint8_t>(require_root_index(multiply(m, roots[r].vector())));
  return g;
}

LatticeVector GroupElement::apply(const LatticeVector& v) const { return multiply(matrix_, v); }

RootSet GroupElement::apply(const RootSet& s) const {
  RootSet out;
  for (std::size_t i = 0; i < kRootCount; ++i)
    if (s.test(i)) out.set(perm_[i]);
  return out;
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  GroupElement g;
  for (std::size_t i = 0; i < kLatticeRank; ++i)
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < kLatticeRank; ++k) s += matrix_[i][k] * rhs.matrix_[k][j];
      g.matrix_[i][j] = s;
    }
  for (std::size_t r = 0; r < kRootCount; ++r) g.perm_[r] = perm_[rhs.perm_[r]];
  return g;
}

GroupElement GroupElement::inverse() const {
  // M^T G M = G gives M^-1 = G M^T G.
  GroupElement g;
  for (std::size_t i = 0; i < kLatticeRank; ++i)
    for (std::size_t j = 0; j < kLatticeRank; ++j) g.matrix_[i][j] = kGram[i] * matrix_[j][i] * kGram[j];
  for (std::size_t r = 0; r < kRootCount; ++r) g.perm_[perm_[r]] = static_cast<std::uint8_t>(r);
  return g;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  const auto& p = g.root_perm();
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(p.data()), p.size()));
}

std::vector<Root> simple_roots_e6() {
  const std::array<LatticeVector, 6> vectors = {{
      {{0, 1, -1, 0, 0, 0, 0}},
      {{0, 0, 1, -1, 0, 0, 0}},
      {{0, 0, 0, 1, -1, 0, 0}},
      {{0, 0, 0, 0, 1, -1, 0}},
      {{0, 0, 0, 0, 0, 1, -1}},
      {{1, -1, -1, -1, 0, 0, 0}},
  }};
  return {vectors.begin(), vectors.end()};
}

std::vector<GroupElement> closure(std::span<const GroupElement> generators) {
  std::vector<GroupElement> elements{GroupElement::identity()};
  std::unordered_set<GroupElement, GroupElementHash> seen{elements.front()};
  for (std::size_t next = 0; next < elements.size(); ++next)
    for (const auto& s : generators) {
      GroupElement g = s * elements[next];
      if (seen.insert(g).second) elements.push_back(std::move(g));
    }
  return elements;
}

std::size_t subgroup_order(std::span<const GroupElement> generators) { return closure(generators).size(); }

const std::vector<GroupElement>& generate_weyl() {
  static const std::vector<GroupElement> group = [] {
    std::vector<GroupElement> gens;
    for (const auto& r : simple_roots_e6()) gens.push_back(GroupElement::reflection(r));
    return closure(gens);
  }();
  return group;
}

std::vector<LatticeVector> orbit(const LatticeVector& seed, std::span<const GroupElement> generators) {
  auto tuples = orbit_of_tuple({seed}, generators);
  std::vector<LatticeVector> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.push_back(t.front());
  return out;
}

std::vector<std::vector<LatticeVector>> orbit_of_tuple(const std::vector<LatticeVector>& seed,
                                                       std::span<const GroupElement> generators) {
  std::vector<std::vector<LatticeVector>> found{seed};
  std::set<std::vector<LatticeVector>> seen{seed};
  for (std::size_t next = 0; next < found.size(); ++next)
    for (const auto& g : generators) {
      std::vector<LatticeVector> image;
      image.reserve(found[next].size());
      for (const auto& v : found[next]) image.push_back(g.apply(v));
      if (seen.insert(image).second) found.push_back(std::move(image));
    }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::size_t>> root_orbits(std::span<const std::size_t> reflection_roots) {
  const auto& table = reflection_table();
  std::vector<std::size_t> parent(kRootCount);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (auto a : reflection_roots)
    for (std::size_t r = 0; r < kRootCount; ++r) {
      const auto x = find_root(parent, r);
      const auto y = find_root(parent, table[a][r]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::ptrdiff_t> slot(kRootCount, -1);
  for (std::size_t r = 0; r < kRootCount; ++r) {
    const auto rep = find_root(parent, r);
    if (slot[rep] < 0) {
      slot[rep] = static_cast<std::ptrdiff_t>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[rep])].push_back(r);
  }
  return orbits;
}

std::vector<std::size_t> SubsystemEmbedding::all_simple_roots() const {
  std::vector<std::size_t> out;
  for (const auto& s : simple_roots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

RootSet SubsystemEmbedding::root_set() const {
  const auto simple = all_simple_roots();
  return reflection_closure(simple);
}

RootSet SubsystemEmbedding::summand_root_set(std::size_t summand) const {
  return reflection_closure(simple_roots.at(summand));
}

SubsystemEmbedding SubsystemEmbedding::conjugated(const GroupElement& g) const {
  SubsystemEmbedding out = *this;
  for (auto& s : out.simple_roots)
    for (auto& r : s) r = g.apply_root(r);
  return out;
}

std::vector<GroupElement> SubsystemEmbedding::reflections() const {
  std::vector<GroupElement> out;
  const auto& roots = enumerate_roots();
  for (auto r : all_simple_roots()) out.push_back(GroupElement::reflection(roots[r]));
  return out;
}

namespace {

struct DiagramSlots {
  std::vector<std::size_t> summand_of;
  std::vector<std::vector<int>> required;  // required pairings between slots
};

DiagramSlots build_slots(std::span<const AdeSummand> config) {
  DiagramSlots d;
  std::size_t offset = 0;
  std::size_t total = 0;
  for (const auto& s : config) total += static_cast<std::size_t>(s.rank);
  d.required.assign(total, std::vector<int>(total, 0));
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (int k = 0; k < config[i].rank; ++k) d.summand_of.push_back(i);
    for (auto [a, b] : config[i].dynkin_edges()) {
      d.required[offset + static_cast<std::size_t>(a)][offset + static_cast<std::size_t>(b)] = 1;
      d.required[offset + static_cast<std::size_t>(b)][offset + static_cast<std::size_t>(a)] = 1;
    }
    for (int k = 0; k < config[i].rank; ++k) d.required[offset + static_cast<std::size_t>(k)][offset + static_cast<std::size_t>(k)] = -2;
    offset += static_cast<std::size_t>(config[i].rank);
  }
  return d;
}

SubsystemEmbedding to_embedding(std::span<const AdeSummand> config, const std::vector<std::size_t>& chosen) {
  SubsystemEmbedding e;
  e.config.assign(config.begin(), config.end());
  std::size_t offset = 0;
  for (const auto& s : config) {
    e.simple_roots.emplace_back(chosen.begin() + static_cast<std::ptrdiff_t>(offset),
                                chosen.begin() + static_cast<std::ptrdiff_t>(offset + static_cast<std::size_t>(s.rank)));
    offset += static_cast<std::size_t>(s.rank);
  }
  return e;
}

}  // namespace

bool realizes_config(const SubsystemEmbedding& e) {
  const auto d = build_slots(e.config);
  const auto simple = e.all_simple_roots();
  if (simple.size() != d.required.size() || e.simple_roots.size() != e.config.size()) return false;
  for (std::size_t i = 0; i < e.config.size(); ++i)
    if (e.simple_roots[i].size() != static_cast<std::size_t>(e.config[i].rank)) return false;
  const auto& roots = enumerate_roots();
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j)
      if (pairing(roots[simple[i]].vector(), roots[simple[j]].vector()) != d.required[i][j]) return false;
  return true;
}

std::vector<EmbeddingClass> embed_subsystems(std::span<const AdeSummand> config) {
  std::size_t total_rank = 0;
  for (const auto& s : config) total_rank += static_cast<std::size_t>(s.rank);
  if (total_rank > 6) throw InputError("configuration not embeddable in E6");
  if (config.empty()) return {EmbeddingClass{SubsystemEmbedding{}, 1, kRootCount}};

  const auto& roots = enumerate_roots();
  const auto& group = generate_weyl();
  const auto d = build_slots(config);
  const std::size_t anchor = *root_index({{2, -1, -1, -1, -1, -1, -1}});

  std::vector<EmbeddingClass> classes;
  std::unordered_map<RootSet, std::size_t> class_of;  // every R_e met so far, by class
  std::vector<std::size_t> chosen;

  auto visit_leaf = [&] {
    const SubsystemEmbedding e = to_embedding(config, chosen);
    const RootSet re = e.root_set();
    if (class_of.contains(re)) return;
    const std::size_t id = classes.size();
    std::unordered_set<RootSet> conjugates;
    for (const auto& g : group) conjugates.insert(g.apply(re));
    for (const auto& s : conjugates) class_of.emplace(s, id);
    const auto simple = e.all_simple_roots();
    classes.push_back({e, conjugates.size(), root_orbits(simple).size()});
  };

  auto extend = [&](auto&& self) -> void {
    const std::size_t slot = chosen.size();
    if (slot == total_rank) {
      visit_leaf();
      return;
    }
    for (std::size_t r = 0; r < kRootCount; ++r) {
      if (slot == 0 && r != anchor) continue;
      bool ok = true;
      for (std::size_t j = 0; j < slot && ok; ++j)
        ok = pairing(roots[r].vector(), roots[chosen[j]].vector()) == d.required[slot][j];
      if (!ok) continue;
      chosen.push_back(r);
      self(self);
      chosen.pop_back();
    }
  };
  extend(extend);

  if (classes.empty()) throw InputError("configuration not embeddable in E6");
  return classes;
}

std::vector<int> simple_root_coordinates(const SubsystemEmbedding& e, std::size_t summand, std::size_t root) {
  const auto& simple = e.simple_roots.at(summand);
  const auto& roots = enumerate_roots();
  const std::size_t n = simple.size();
  QMatrix gram(n, n);
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = pairing(roots[simple[i]].vector(), roots[simple[j]].vector());
    rhs[i] = pairing(roots[simple[i]].vector(), roots[root].vector());
  }
  const auto inv = gram.inverse();
  if (!inv) throw InvariantViolation("simple roots are linearly dependent");
  const auto coeffs = *inv * rhs;
  std::vector<int> out(n);
  LatticeVector rebuilt;
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i].get_den() != 1) throw InputError("root is not an integral combination of the simple roots");
    out[i] = static_cast<int>(coeffs[i].get_num().get_si());
    rebuilt += out[i] * roots[simple[i]].vector();
  }
  if (rebuilt != roots[root].vector()) throw InputError("root is not in the span of the summand");
  return out;
}

std::vector<std::size_t> positive_roots(const SubsystemEmbedding& e, std::size_t summand) {
  const RootSet rs = e.summand_root_set(summand);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < kRootCount; ++r) {
    if (!rs.test(r)) continue;
    const auto c = simple_root_coordinates(e, summand, r);
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) out.push_back(r);
  }
  return out;
}

std::size_t maximal_root(const SubsystemEmbedding& e, std::size_t summand) {
  const auto pos = positive_roots(e, summand);
  std::vector<std::vector<int>> coords;
  for (auto r : pos) coords.push_back(simple_root_coordinates(e, summand, r));
  for (std::size_t i = 0; i < pos.size(); ++i) {
    bool dominates = true;
    for (std::size_t j = 0; j < pos.size() && dominates; ++j)
      for (std::size_t k = 0; k < coords[i].size(); ++k)
        if (coords[i][k] < coords[j][k]) {
          dominates = false;
          break;
        }
    if (dominates) return pos[i];
  }
  throw InvariantViolation("summand has no maximal root");
}

OrbitDecomposition orbit_decomposition(const SubsystemEmbedding& e) {
  OrbitDecomposition d;
  const auto simple = e.all_simple_roots();
  const auto gens = e.reflections();
  d.subgroup_order = subgroup_order(gens);
  std::vector<RootSet> summand_sets;
  for (std::size_t i = 0; i < e.simple_roots.size(); ++i) summand_sets.push_back(e.summand_root_set(i));
  for (auto& members : root_orbits(simple)) {
    RootOrbit o;
    o.roots = std::move(members);
    for (std::size_t i = 0; i < summand_sets.size(); ++i)
      if (summand_sets[i].test(o.roots.front())) {
        o.contained_in_re = std::all_of(o.roots.begin(), o.roots.end(),
                                        [&](std::size_t r) { return summand_sets[i].test(r); });
        if (!o.contained_in_re) throw InvariantViolation("orbit meets a summand without being contained in it");
        o.summand = i;
        o.maximal_root = maximal_root(e, i);
      }
    d.orbits.push_back(std::move(o));
  }
  return d;
}

}  // namespace cubic
