#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cubic/ade.hpp"
#include "cubic/lattice.hpp"

namespace cubic {

using LatticeMatrix = std::array<std::array<int, kLatticeRank>, kLatticeRank>;
using RootPerm = std::array<std::uint8_t, kRootCount>;
using RootSet = std::bitset<kRootCount>;

// Pairing-preserving automorphism of I(1,6) fixing h, carried both as an
// integer matrix and as the permutation it induces on the canonical root list.
// Equality and hashing go through the permutation; since the roots span h^perp
// and h is fixed, the permutation determines the matrix.
class GroupElement {
public:
  static GroupElement identity();
  static GroupElement reflection(const Root& alpha);
  // Throws InputError unless m preserves the pairing and fixes h.
  static GroupElement from_matrix(const LatticeMatrix& m);

  const LatticeMatrix& matrix() const { return matrix_; }
  const RootPerm& root_perm() const { return perm_; }

  LatticeVector apply(const LatticeVector& v) const;
  std::size_t apply_root(std::size_t root) const { return perm_[root]; }
  RootSet apply(const RootSet& s) const;

  // (*this) after rhs: (a * b)(v) = a(b(v)).
  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;

  bool operator==(const GroupElement& rhs) const { return perm_ == rhs.perm_; }

private:
  GroupElement() = default;
  LatticeMatrix matrix_{};
  RootPerm perm_{};
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

// e1-e2, e2-e3, e3-e4, e4-e5, e5-e6, e0-e1-e2-e3: a chain of five with the
// last root attached to the middle node.
std::vector<Root> simple_roots_e6();

// All elements of the group generated by `generators`, breadth first from the
// identity. Order of the result is deterministic given the generator order.
std::vector<GroupElement> closure(std::span<const GroupElement> generators);

std::size_t subgroup_order(std::span<const GroupElement> generators);

// W(E6), generated once from the simple reflections and cached.
const std::vector<GroupElement>& generate_weyl();

// Smallest generator-stable set containing the seed, sorted.
std::vector<LatticeVector> orbit(const LatticeVector& seed, std::span<const GroupElement> generators);

// Orbit of a tuple under the diagonal action.
std::vector<std::vector<LatticeVector>> orbit_of_tuple(const std::vector<LatticeVector>& seed,
                                                       std::span<const GroupElement> generators);

// Root partition into orbits of the subgroup generated by the reflections in
// `reflection_roots` (root indices). Orbits are sorted internally and ordered
// by their smallest member.
std::vector<std::vector<std::size_t>> root_orbits(std::span<const std::size_t> reflection_roots);

// Simple roots (as root indices) realizing an ADE configuration, one inner
// list per summand. Within a summand adjacent nodes pair to 1, others to 0;
// across summands everything pairs to 0.
struct SubsystemEmbedding {
  std::vector<AdeSummand> config;
  std::vector<std::vector<std::size_t>> simple_roots;

  std::vector<std::size_t> all_simple_roots() const;
  // R_e: closure of the simple roots under their reflections.
  RootSet root_set() const;
  // Roots of one summand.
  RootSet summand_root_set(std::size_t summand) const;
  SubsystemEmbedding conjugated(const GroupElement& g) const;
  std::vector<GroupElement> reflections() const;
};

// Checks the Dynkin pattern of the pairings; used both by the search and as
// a standalone validator.
bool realizes_config(const SubsystemEmbedding& e);

struct EmbeddingClass {
  SubsystemEmbedding representative;
  // Number of distinct root subsystems R_e in this W(E6)-class.
  std::size_t subsystem_count = 0;
  // Number of W(R_e)-orbits on the 72 roots.
  std::size_t orbit_count = 0;
};

// Every W(E6)-conjugacy class of root subsystems of the given type, in order
// of discovery by a backtracking search over root indices whose first simple
// root is pinned to 2e0-e1-...-e6 (W(E6) is transitive on roots, so every
// class has such a member). An empty config yields one class with no roots.
// Throws InputError "configuration not embeddable in E6" when none exist.
std::vector<EmbeddingClass> embed_subsystems(std::span<const AdeSummand> config);

struct RootOrbit {
  std::vector<std::size_t> roots;
  bool contained_in_re = false;
  // Summand index and its maximal (fundamental cycle) root, for orbits in R_e.
  std::optional<std::size_t> summand;
  std::optional<std::size_t> maximal_root;
};

struct OrbitDecomposition {
  std::vector<RootOrbit> orbits;
  std::size_t subgroup_order = 0;
};

// Coefficients of a root of summand i in its simple roots; throws if the root
// is not in the span.
std::vector<int> simple_root_coordinates(const SubsystemEmbedding& e, std::size_t summand,
                                         std::size_t root);

// Roots of the summand with non-negative simple-root coordinates, sorted.
std::vector<std::size_t> positive_roots(const SubsystemEmbedding& e, std::size_t summand);

// The positive root dominating every other positive root of the summand.
std::size_t maximal_root(const SubsystemEmbedding& e, std::size_t summand);

OrbitDecomposition orbit_decomposition(const SubsystemEmbedding& e);

}  // namespace cubic
