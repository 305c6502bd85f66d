#include <doctest.h>

#include <random>

#include "regmap/errors.hpp"
#include "regmap/families.hpp"
#include "regmap/group_algorithms.hpp"
#include "regmap/search.hpp"

using namespace regmap;

namespace {

std::vector<Element> elements_of_order(const FiniteGroup& g, std::uint64_t k) {
  std::vector<Element> out;
  for (const auto& e : all_elements(g))
    if (element_order(g, e) == k) out.push_back(e);
  return out;
}

std::uint64_t subgroup_order(const FiniteGroup& g, std::span<const Element> seeds) {
  return closure(g, seeds).elements.size();
}

}  // namespace

TEST_CASE("element serialization") {
  const std::int32_t words[] = {1, 3};
  const Element e(Family::Dihedral, words);
  const std::string expected{1, 2, 2, 1, 0, 0, 0, 3, 0, 0, 0};
  CHECK(e.bytes() == expected);
  CHECK(ElementHash{}(e) == ElementHash{}(Element(Family::Dihedral, words)));
  const std::int32_t other[] = {1, 4};
  CHECK(e != Element(Family::Dihedral, other));
  CHECK(e != Element(Family::Cyclic, words));
}

TEST_CASE("dihedral arithmetic") {
  const FiniteGroup d = build_dihedral(7);
  CHECK(d.order() == 14);
  CHECK(d.multiply(d.make({0, 3}), d.make({0, 5})) == d.make({0, 1}));
  const Element s = d.make({1, 2});
  CHECK(d.multiply(s, s) == d.identity());
  CHECK(d.conjugate(d.make({0, 1}), s) == d.make({0, 6}));
  CHECK_THROWS_AS(d.make({0, 7}), InvalidArgument);
  CHECK_THROWS_AS(d.generator("z"), InvalidArgument);
}

TEST_CASE("projective arithmetic") {
  const FiniteGroup pgl = build_pgl2(7);
  CHECK(pgl.order() == 336);
  for (const auto& g : pgl.generator_elements()) CHECK(pgl.multiply(g, pgl.invert(g)) == pgl.identity());
  CHECK(pgl.in_psl(pgl.generator("x")));
  CHECK(pgl.in_psl(pgl.generator("y")));
  CHECK_FALSE(pgl.in_psl(pgl.generator("z")));
  CHECK(build_psl2(7).order() == 168);
  const FiniteGroup g1 = build_g1(3, 5);
  CHECK_THROWS_AS(pgl.multiply(pgl.identity(), g1.identity()), FamilyMismatch);
}

TEST_CASE("semidirect arithmetic in G2(0,4,7)") {
  const FiniteGroup g = build_g2(0, 4, 7);
  CHECK(g.order() == 392);
  const Element a = g.generator("a"), b = g.generator("b"), c = g.generator("c"), d = g.generator("d");
  CHECK(g.conjugate(a, c) == g.invert(a));
  CHECK(g.conjugate(a, d) == b);
  CHECK(g.conjugate(b, d) == a);
  CHECK(g.commutator(a, b) == g.identity());
  CHECK(element_order(g, g.multiply(c, d)) == 4);
}

TEST_CASE("element orders") {
  const FiniteGroup g1 = build_g1(7, 7);
  CHECK(element_order(g1, g1.identity()) == 1);
  CHECK(element_order(g1, g1.multiply(g1.generator("a"), g1.generator("b"))) == 7);
  CHECK(g1.commutator(g1.generator("a"), g1.generator("c")) == g1.identity());
  CHECK_FALSE(elements_of_order(build_psl2(11), 6).empty());
  CHECK(elements_of_order(build_psl2(11), 4).empty());
}

TEST_CASE("closure") {
  const FiniteGroup g = build_g1(3, 5);
  CHECK(g.order() == 60);
  const Element id[] = {g.identity()};
  CHECK(closure(g, id).elements.size() == 1);
  const Element ab[] = {g.generator("a"), g.generator("b")};
  CHECK(subgroup_order(g, ab) == 6);
  const auto sub = closure(g, ab).elements;
  CHECK(is_subgroup(g, sub));
  CHECK(is_normal_subgroup(g, sub));

  const FiniteGroup psl = build_psl2(11);
  SearchOptions o;
  o.chi = -55;
  o.type = MapType{6, 6};
  const auto found = search_maps(psl, o);
  REQUIRE_FALSE(found.maps.empty());
  const Triple& t = found.maps.front().triple;
  const Element seeds[] = {t.r, t.t, t.l};
  CHECK(closure(psl, seeds, 56).cap_exceeded);
  CHECK(closure(psl, seeds).elements.size() == 660);
}

TEST_CASE("closure results are subgroups") {
  std::mt19937 rng(7);
  for (const FiniteGroup& g : {build_psl2(7), build_g2(1, 6, 5), build_g1(3, 7)}) {
    const auto all = all_elements(g);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const Element seeds[] = {all[pick(rng)], all[pick(rng)]};
      const auto sub = closure(g, seeds).elements;
      CHECK(sub.front() == g.identity());
      CHECK(g.order() % sub.size() == 0);
      CHECK(is_subgroup(g, sub));
      for (const auto& s : seeds) CHECK(std::find(sub.begin(), sub.end(), s) != sub.end());
    }
  }
}

TEST_CASE("generation") {
  const FiniteGroup g3 = build_g3(39);
  const Element id[] = {g3.identity()};
  CHECK_FALSE(generates(g3, id));
  const Element c = g3.generator("c"), d = g3.generator("d"), a = g3.generator("a");
  const Element seeds[] = {c, d, g3.multiply(a, d)};
  CHECK(generates(g3, seeds));
  CHECK(subgroup_order(g3, seeds) == 312);

  const FiniteGroup pgl = build_pgl2(7);
  SearchOptions o;
  o.chi = -35;
  o.type = MapType{6, 8};
  const auto found = search_maps(pgl, o);
  REQUIRE_FALSE(found.maps.empty());
  const Triple& t = found.maps.front().triple;
  const Element triple[] = {t.r, t.t, t.l};
  CHECK(generates(pgl, triple));
  CHECK_FALSE(closure(pgl, triple, 337).cap_exceeded);
}

TEST_CASE("Dickson-capped generation agrees with full closure") {
  std::mt19937 rng(2024);
  std::size_t samples = 0, generating = 0;
  for (std::int64_t f : {5, 7, 11, 13}) {
    for (const bool special : {true, false}) {
      const FiniteGroup g = special ? build_psl2(f) : build_pgl2(f);
      const auto all = all_elements(g);
      const auto inv = involutions(g);
      std::uniform_int_distribution<std::size_t> any(0, all.size() - 1), some_inv(0, inv.size() - 1);
      for (int trial = 0; trial < 1300; ++trial) {
        std::vector<Element> seeds;
        if (trial % 2 == 0)
          seeds = {inv[some_inv(rng)], inv[some_inv(rng)], inv[some_inv(rng)]};
        else
          seeds = {all[any(rng)], all[any(rng)]};
        const bool full = closure(g, seeds).elements.size() == g.order();
        CHECK(generates(g, seeds, true) == full);
        CHECK(generates(g, seeds, false) == full);
        generating += full;
        ++samples;
      }
    }
  }
  CHECK(samples >= 10000);
  CHECK(generating > 1000);
}

TEST_CASE("involutions") {
  CHECK(involutions(build_cyclic(15)).empty());
  CHECK(involutions(build_dihedral(7)).size() == 7);
  CHECK(involutions(build_psl2(11)).size() == 55);
  const auto inv = involutions(build_psl2(11));
  CHECK(std::is_sorted(inv.begin(), inv.end()));
}

TEST_CASE("almost Sylow-cyclic") {
  for (std::int64_t n : {4, 6, 8, 12}) CHECK(is_almost_sylow_cyclic(build_dihedral(n)));
  CHECK_FALSE(is_almost_sylow_cyclic(build_g2(0, 4, 7)));
  CHECK(is_almost_sylow_cyclic(build_psl2(7)));
}

TEST_CASE("conjugacy classes and normal closures") {
  const FiniteGroup d = build_dihedral(5);
  CHECK(conjugacy_class(d, d.make({1, 0})).size() == 5);
  CHECK(conjugacy_class(d, d.make({0, 1})).size() == 2);
  const Element rot[] = {d.make({0, 1})};
  const auto n = normal_closure(d, rot);
  CHECK(n.size() == 5);
  CHECK(is_normal_subgroup(d, n));
  const std::vector<Element> not_normal{d.identity(), d.make({1, 0})};
  CHECK(is_subgroup(d, not_normal));
  CHECK_FALSE(is_normal_subgroup(d, not_normal));
}

TEST_CASE("triple isomorphism") {
  const AlgebraicMap m = build_m2(0, 4, 7);
  const FiniteGroup& g = m.group();
  CHECK(triple_isomorphic(g, m.triple(), g, m.triple()));
  std::mt19937 rng(11);
  const auto all = all_elements(g);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const Element& h = all[pick(rng)];
    const Triple conj{g.conjugate(m.r(), h), g.conjugate(m.t(), h), g.conjugate(m.l(), h)};
    CHECK(triple_isomorphic(g, m.triple(), g, conj));
  }
  const AlgebraicMap m1 = build_m1(3, 19);
  const AlgebraicMap d1 = dual(m1);
  CHECK_FALSE(triple_isomorphic(m1.group(), m1.triple(), d1.group(), d1.triple()));
  CHECK_FALSE(triple_isomorphic(m1.group(), m1.triple(), g, m.triple()));
}

TEST_CASE("enumeration limit") {
  const FiniteGroup g = build_psl2(13, 100);
  CHECK_THROWS_AS(all_elements(g), OrderLimitExceeded);
  CHECK(all_elements(g.with_enumeration_limit(2000)).size() == 1092);
}
