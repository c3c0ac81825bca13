#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cubic/error.hpp"
#include "cubic/singular_surface.hpp"
#include "cubic/weyl.hpp"

using namespace cubic;

namespace {

LatticeVector e(std::size_t i) { return LatticeVector::basis(i); }
LatticeVector delta() { return 2 * e(0) - e(1) - e(2) - e(3) - e(4) - e(5) - e(6); }

std::vector<GroupElement> simple_reflections() {
  std::vector<GroupElement> gens;
  for (const auto& r : simple_roots_e6()) gens.push_back(GroupElement::reflection(r));
  return gens;
}

std::set<RootPerm> perm_set(const std::vector<GroupElement>& g) {
  std::set<RootPerm> s;
  for (const auto& x : g) s.insert(x.root_perm());
  return s;
}

const GroupElement& random_element(std::mt19937& rng) {
  const auto& w = generate_weyl();
  return w[std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng)];
}

int gram(const LatticeMatrix& m, std::size_t a, std::size_t b) {
  LatticeVector u, v;
  for (std::size_t i = 0; i < 7; ++i) {
    u.c[i] = m[i][a];
    v.c[i] = m[i][b];
  }
  return pairing(u, v);
}

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("simple roots realize the E6 diagram") {
    const auto s = simple_roots_e6();
    REQUIRE(s.size() == 6);
    const std::vector<LatticeVector> expected{e(1) - e(2), e(2) - e(3), e(3) - e(4),
                                              e(4) - e(5), e(5) - e(6), e(0) - e(1) - e(2) - e(3)};
    int edges = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(s[i].vector() == expected[i]);
      CHECK(root_index(s[i].vector()));
      CHECK(pairing(s[i].vector(), s[i].vector()) == -2);
      for (std::size_t j = i + 1; j < 6; ++j) {
        const int p = pairing(s[i].vector(), s[j].vector());
        CHECK((p == 0 || p == 1));
        edges += p;
      }
    }
    CHECK(edges == 5);
    // Branch node: the last root meets node 2 only.
    for (std::size_t j = 0; j < 5; ++j) CHECK(pairing(s[5].vector(), s[j].vector()) == (j == 2 ? 1 : 0));
  }

  TEST_CASE("group order, transitivity and stabilizers") {
    const auto& w = generate_weyl();
    CHECK(w.size() == 51840);
    CHECK(perm_set(w).size() == 51840);

    std::set<std::size_t> images;
    std::size_t root_stabilizer = 0;
    const std::size_t d = *root_index(delta());
    for (const auto& g : w) {
      images.insert(g.apply_root(d));
      root_stabilizer += g.apply_root(d) == d;
    }
    CHECK(images.size() == 72);
    CHECK(root_stabilizer == 720);
    CHECK(images.size() * root_stabilizer == w.size());

    std::set<LatticeVector> sextuple;
    for (std::size_t i = 1; i <= 6; ++i) sextuple.insert(e(i));
    std::size_t sextuple_stabilizer = 0;
    for (const auto& g : w) {
      std::set<LatticeVector> image;
      for (const auto& v : sextuple) image.insert(g.apply(v));
      sextuple_stabilizer += image == sextuple;
    }
    CHECK(sextuple_stabilizer == 720);
  }

  TEST_CASE("matrix and permutation representations agree") {
    std::mt19937 rng(31337);
    const auto& roots = enumerate_roots();
    const auto h = LatticeVector::hyperplane();
    for (int trial = 0; trial < 50; ++trial) {
      const auto& a = random_element(rng);
      const auto& b = random_element(rng);
      const auto ab = a * b;
      for (std::size_t r = 0; r < roots.size(); ++r) {
        CHECK(roots[ab.apply_root(r)].vector() == ab.apply(roots[r].vector()));
        CHECK(ab.apply(roots[r].vector()) == a.apply(b.apply(roots[r].vector())));
      }
      CHECK(GroupElement::from_matrix(ab.matrix()) == ab);
      CHECK(a * a.inverse() == GroupElement::identity());
      CHECK(ab.apply(h) == h);
      for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) CHECK(gram(ab.matrix(), i, j) == pairing(e(i), e(j)));
    }
  }

  TEST_CASE("from_matrix validation") {
    LatticeMatrix m{};
    for (std::size_t i = 0; i < 7; ++i) m[i][i] = 1;
    CHECK(GroupElement::from_matrix(m) == GroupElement::identity());
    m[0][0] = -1;  // -e0 breaks h
    CHECK_THROWS_AS(GroupElement::from_matrix(m), InputError);
    m[0][0] = 2;
    CHECK_THROWS_AS(GroupElement::from_matrix(m), InputError);
  }

  TEST_CASE("closure does not depend on generator order") {
    auto gens = simple_reflections();
    const auto reference = perm_set(closure(gens));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 2; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(perm_set(closure(gens)) == reference);
    }
  }

  TEST_CASE("orbit examples") {
    const Root r12(e(1) - e(2));
    const std::vector<GroupElement> single{GroupElement::reflection(r12)};
    const auto o = orbit(e(1) - e(2), single);
    CHECK(o == std::vector<LatticeVector>{e(2) - e(1), e(1) - e(2)});
    const auto gens = simple_reflections();
    CHECK(orbit(delta(), gens).size() == 72);
    CHECK(orbit(e(1), gens).size() == 27);
    CHECK(orbit_of_tuple({e(1), e(2)}, gens).size() == 432);
  }

  TEST_CASE("subgroup orders") {
    const auto refl = [](const LatticeVector& v) { return GroupElement::reflection(Root(v)); };
    CHECK(subgroup_order(std::vector{refl(delta())}) == 2);
    CHECK(subgroup_order(std::vector{refl(e(1) - e(2)), refl(e(3) - e(4))}) == 4);
    CHECK(subgroup_order(std::vector{refl(e(1) - e(2)), refl(e(2) - e(3))}) == 6);
  }

  TEST_CASE("embedding examples") {
    const std::vector<AdeSummand> a1{make_summand('A', 1)};
    const auto c1 = embed_subsystems(a1);
    REQUIRE(c1.size() == 1);
    CHECK(enumerate_roots()[c1[0].representative.simple_roots[0][0]].vector() == delta());

    const std::vector<AdeSummand> e6{make_summand('E', 6)};
    const auto ce = embed_subsystems(e6);
    REQUIRE(ce.size() == 1);
    CHECK(ce[0].representative.root_set().count() == 72);

    const std::vector<AdeSummand> three_a2(3, make_summand('A', 2));
    CHECK_FALSE(embed_subsystems(three_a2).empty());

    const std::vector<AdeSummand> too_big{make_summand('A', 7)};
    CHECK_THROWS_WITH_AS(embed_subsystems(too_big), "configuration not embeddable in E6", InputError);
    const std::vector<AdeSummand> d5a1{make_summand('D', 5), make_summand('A', 1)};
    CHECK_THROWS_WITH_AS(embed_subsystems(d5a1), "configuration not embeddable in E6", InputError);

    CHECK(embed_subsystems(std::vector<AdeSummand>{}).size() == 1);
  }

  TEST_CASE("every table config embeds in exactly one class") {
    for (const auto& row : table1_rows()) {
      CAPTURE(row.config.label());
      const auto classes = embed_subsystems(row.config.summands());
      CHECK(classes.size() == 1);
      CHECK(realizes_config(classes[0].representative));
    }
  }

  TEST_CASE("orbit count is invariant under conjugation") {
    std::mt19937 rng(424242);
    for (const auto& row : table1_rows()) {
      if (row.config.smooth()) continue;
      CAPTURE(row.config.label());
      const auto rep = embed_subsystems(row.config.summands())[0].representative;
      const auto count = orbit_decomposition(rep).orbits.size();
      for (int trial = 0; trial < 100; ++trial) {
        const auto conj = rep.conjugated(random_element(rng));
        CHECK(realizes_config(conj));
        CHECK(root_orbits(conj.all_simple_roots()).size() == count);
      }
    }
  }

  TEST_CASE("orbit decompositions partition the roots") {
    for (const auto& row : table1_rows()) {
      CAPTURE(row.config.label());
      const auto rep = embed_subsystems(row.config.summands())[0].representative;
      const auto dec = orbit_decomposition(rep);
      std::size_t total = 0, inside = 0;
      const auto re = rep.root_set();
      for (const auto& o : dec.orbits) {
        total += o.roots.size();
        CHECK(dec.subgroup_order % o.roots.size() == 0);
        const bool all_in = std::all_of(o.roots.begin(), o.roots.end(), [&](std::size_t r) { return re.test(r); });
        const bool none_in = std::none_of(o.roots.begin(), o.roots.end(), [&](std::size_t r) { return re.test(r); });
        CHECK((all_in || none_in));
        CHECK(o.contained_in_re == all_in);
        inside += all_in;
      }
      CHECK(total == 72);
      CHECK(inside == row.config.summands().size());
    }
  }

  TEST_CASE("maximal roots dominate their summand") {
    for (const auto& row : table1_rows()) {
      const auto rep = embed_subsystems(row.config.summands())[0].representative;
      for (std::size_t s = 0; s < rep.config.size(); ++s) {
        const auto top = simple_root_coordinates(rep, s, maximal_root(rep, s));
        std::size_t dominators = 0;
        for (auto r : positive_roots(rep, s)) {
          const auto c = simple_root_coordinates(rep, s, r);
          bool below = true;
          for (std::size_t i = 0; i < c.size(); ++i) below = below && c[i] <= top[i];
          CHECK(below);
          bool above_all = true;
          for (auto r2 : positive_roots(rep, s)) {
            const auto c2 = simple_root_coordinates(rep, s, r2);
            for (std::size_t i = 0; i < c.size(); ++i) above_all = above_all && c2[i] <= c[i];
          }
          dominators += above_all;
        }
        CHECK(dominators == 1);
      }
    }
  }
}
