#include <doctest.h>

#include <functional>

#include "regmap/errors.hpp"
#include "regmap/families.hpp"
#include "regmap/fields.hpp"
#include "regmap/group_algorithms.hpp"
#include "regmap/search.hpp"

using namespace regmap;

namespace {

std::vector<AlgebraicMap> corpus() {
  std::vector<AlgebraicMap> maps;
  for (std::int64_t j = 3; j <= 11; j += 2)
    for (std::int64_t k = j; k <= 11; k += 2) maps.push_back(build_m1(j, k));
  for (std::int64_t p : {5, 7})
    for (std::int64_t n = 4; n <= 12; n += 2)
      for (auto x : companion_trace_set(static_cast<std::uint64_t>(n), static_cast<std::uint32_t>(p)).members)
        maps.push_back(build_m2(x, n, p));
  for (std::int64_t u = 9; u <= 45; u += 6) maps.push_back(build_m3(u));
  for (const FiniteGroup& g : {build_psl2(7), build_pgl2(7), build_psl2(11)}) {
    SearchOptions o;
    o.dedupe_duals = false;
    for (const auto& found : search_maps(g, o).maps) maps.push_back(AlgebraicMap::validate(g, found.triple));
  }
  return maps;
}

ValidationError::Reason validation_reason(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.reason();
  }
  FAIL("no ValidationError");
  return ValidationError::Reason::NotInGroup;
}

}  // namespace

TEST_CASE("validation") {
  const FiniteGroup g1 = build_g1(7, 7);
  const Element bc = g1.multiply(g1.generator("b"), g1.generator("c"));
  const auto m = AlgebraicMap::validate(g1, {bc, g1.generator("a"), g1.generator("d")});
  CHECK(m.warnings().empty());
  CHECK(m.type() == MapType{14, 14});

  using R = ValidationError::Reason;
  CHECK(validation_reason([&] { AlgebraicMap::validate(g1, {g1.generator("a"), bc, g1.generator("d")}); }) ==
        R::NotCommuting);
  CHECK(validation_reason([&] {
          AlgebraicMap::validate(g1, {g1.multiply(g1.generator("a"), g1.generator("b")), g1.generator("a"),
                                      g1.generator("d")});
        }) == R::NotInvolution);

  const FiniteGroup d8 = build_dihedral(4);
  const Element s = d8.make({1, 0});
  CHECK(validation_reason([&] { AlgebraicMap::validate(d8, {s, s, d8.make({1, 2})}); }) == R::NotGenerating);

  const auto degenerate = AlgebraicMap::validate(d8, {d8.make({1, 0}), d8.make({1, 1}), d8.make({1, 1})});
  CHECK_FALSE(degenerate.warnings().empty());

  const FiniteGroup psl7 = build_psl2(7);
  CHECK(validation_reason([&] { AlgebraicMap::validate(psl7, {s, s, s}); }) == R::NotInGroup);
}

TEST_CASE("types and Euler characteristics of the family maps") {
  const auto m1 = build_m1(7, 7);
  const auto m2 = build_m2(0, 4, 7);
  const auto m3 = build_m3(39);
  CHECK(map_type(m1) == MapType{14, 14});
  CHECK(map_type(m2) == MapType{14, 4});
  CHECK(map_type(m3) == MapType{39, 4});
  for (const auto* m : {&m1, &m2, &m3}) {
    CHECK(euler_characteristic(*m) == -35);
    CHECK(euler_characteristic_by_orbits(*m) == -35);
    CHECK_FALSE(orientability(*m));
  }
  CHECK(euler_characteristic(m1.group(), MapType{14, 14}) == -35);
  const auto m25 = build_m2(1, 6, 5);
  CHECK(euler_characteristic_by_orbits(m25) == euler_characteristic(m25));
  CHECK(euler_characteristic(m25) == -35);
}

TEST_CASE("dihedral map of type {2,4}") {
  const FiniteGroup d8 = build_dihedral(4);
  SearchOptions o;
  o.type = MapType{2, 4};
  const auto found = search_maps(d8, o);
  REQUIRE_FALSE(found.maps.empty());
  const auto m = AlgebraicMap::validate(d8, found.maps.front().triple);
  CHECK(euler_characteristic(m) == 1);
  const auto orbits = orbit_counts(m);
  CHECK(orbits.chi() == 1);
  CHECK(orbits.edges == 2);
  CHECK(orbits.vertices + orbits.faces == 3);
}

TEST_CASE("duality") {
  const auto m2 = build_m2(0, 4, 7);
  CHECK(dual(m2).type() == MapType{4, 14});
  CHECK(dual(build_m1(3, 19)).chi() == -35);
  const auto back = dual(dual(m2));
  CHECK(back.triple() == m2.triple());
}

TEST_CASE("quotients and covers") {
  const auto m = build_m2(1, 6, 5);
  const FiniteGroup& g = m.group();
  const Element ab[] = {g.generator("a"), g.generator("b")};
  const auto normal = normal_closure(g, ab);
  REQUIRE(normal.size() == 25);
  const auto q = quotient(m, normal);
  CHECK(q.group().order() == 12);
  CHECK(q.type().same_set(MapType{2, 6}));

  const auto trivial = quotient(m, {g.identity()});
  CHECK(triple_isomorphic(g, m.triple(), trivial.group(), trivial.triple()));

  using R = ValidationError::Reason;
  CHECK(validation_reason([&] { quotient(m, all_elements(g)); }) == R::DegenerateQuotient);
  CHECK(validation_reason([&] { quotient(m, {g.identity(), g.generator("c")}); }) == R::NotNormal);

  const auto self = is_regular_cover(m, m);
  REQUIRE(self);
  CHECK(self->normal_order == 1);
  const auto cover = is_regular_cover(m, q);
  REQUIRE(cover);
  CHECK(cover->normal_order == 25);
  CHECK_FALSE(is_regular_cover(build_m1(7, 7), build_m2(0, 4, 7)));
}

TEST_CASE("genus") {
  CHECK(genus(-35, false) == 37);
  CHECK(genus(-34, true) == 18);
  CHECK(genus(2, true) == 0);
  CHECK_THROWS_AS(genus(-35, true), InvalidArgument);
  CHECK(genus(build_m3(39)) == 37);
}

TEST_CASE("properties over a corpus of maps") {
  const auto maps = corpus();
  REQUIRE(maps.size() >= 50);
  for (std::size_t i = 0; i < 50; ++i) {
    const AlgebraicMap& m = maps[i];
    CAPTURE(m.group().family());
    const AlgebraicMap d = dual(m);
    CHECK(dual(d).triple() == m.triple());
    CHECK(d.type() == m.type().reversed());
    CHECK(d.chi() == m.chi());
    CHECK(euler_characteristic_by_orbits(m) == m.chi());
    CHECK(euler_characteristic_by_orbits(d) == d.chi());
    const auto index = even_word_index(m);
    CHECK((index == 1 || index == 2));
    CHECK(orientability(m) == (index == 2));
    CHECK(orientability(d) == orientability(m));
    if (m.chi() % 2 != 0) CHECK_FALSE(orientability(m));
    if (m.t() != m.l()) CHECK(orbit_counts(m).edges == m.group().order() / 4);
    const bool orientable = orientability(m);
    const auto g = genus(m.chi(), orientable);
    CHECK(static_cast<std::int64_t>(orientable ? 2 * g : g) == 2 - m.chi());
  }
}
