#include <doctest.h>

#include "regmap/errors.hpp"
#include "regmap/families.hpp"
#include "regmap/group_algorithms.hpp"
#include "regmap/search.hpp"

using namespace regmap;

namespace {

std::vector<Triple> triples(const SearchResult& r) {
  std::vector<Triple> out;
  for (const auto& m : r.maps) out.push_back(m.triple);
  return out;
}

}  // namespace

TEST_CASE("existence searches") {
  SearchOptions o;
  o.chi = -35;
  o.type = MapType{6, 8};
  const auto pgl7 = search_maps(build_pgl2(7), o);
  CHECK(pgl7.maps.size() == 2);
  for (const auto& m : pgl7.maps) {
    CHECK(m.type.same_set(MapType{6, 8}));
    CHECK(m.chi == -35);
    CHECK(m.orientable == false);
    CHECK(m.genus == 37);
  }

  o.chi = -55;
  o.type = MapType{6, 6};
  CHECK_FALSE(search_maps(build_psl2(11), o).maps.empty());

  SearchOptions any;
  any.chi = -35;
  CHECK(search_maps(build_psl2(5), any).maps.empty());
}

TEST_CASE("output does not depend on workers, reduction or Dickson caps") {
  for (const FiniteGroup& g : {build_pgl2(7), build_psl2(11), build_g2(1, 6, 5)}) {
    SearchOptions base;
    base.compute_orientability = false;
    const auto reference = triples(search_maps(g, base));
    REQUIRE_FALSE(reference.empty());
    for (unsigned workers : {2u, 4u}) {
      SearchOptions o = base;
      o.workers = workers;
      CHECK(triples(search_maps(g, o)) == reference);
    }
    SearchOptions no_reduction = base;
    no_reduction.conjugacy_reduction = false;
    CHECK(triples(search_maps(g, no_reduction)) == reference);
    SearchOptions no_dickson = base;
    no_dickson.dickson_cap = false;
    CHECK(triples(search_maps(g, no_dickson)) == reference);
  }
}

TEST_CASE("results are canonical and pairwise non-isomorphic") {
  const FiniteGroup g = build_pgl2(7);
  SearchOptions o;
  o.dedupe_duals = false;
  o.compute_orientability = false;
  const auto found = search_maps(g, o);
  REQUIRE(found.maps.size() >= 2);
  for (std::size_t i = 0; i < found.maps.size(); ++i) {
    const auto& a = found.maps[i];
    CHECK(canonical_triple(g, a.triple) == a.triple);
    CHECK(AlgebraicMap::validate(g, a.triple).type() == a.type);
    if (i > 0) {
      const auto& prev = found.maps[i - 1];
      CHECK(std::tie(prev.type, prev.triple) < std::tie(a.type, a.triple));
    }
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(triple_isomorphic(g, found.maps[j].triple, g, a.triple));
    const Triple dual{a.triple.r, a.triple.l, a.triple.t};
    CHECK(a.self_dual == triple_isomorphic(g, a.triple, g, dual));
  }

  SearchOptions with_duals = o;
  with_duals.dedupe_duals = true;
  const auto fewer = search_maps(g, with_duals);
  CHECK(fewer.maps.size() < found.maps.size());
  for (std::size_t i = 0; i < fewer.maps.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Triple& b = fewer.maps[i].triple;
      CHECK_FALSE(triple_isomorphic(g, fewer.maps[j].triple, g, Triple{b.r, b.l, b.t}));
    }
}

TEST_CASE("conjugating a found triple gives the same canonical triple") {
  const FiniteGroup g = build_psl2(11);
  SearchOptions o;
  o.chi = -55;
  const auto found = search_maps(g, o);
  REQUIRE_FALSE(found.maps.empty());
  const Triple& t = found.maps.front().triple;
  for (const auto& h : g.generator_elements()) {
    const Triple conj{g.conjugate(t.r, h), g.conjugate(t.t, h), g.conjugate(t.l, h)};
    CHECK(canonical_triple(g, conj) == t);
  }
}

TEST_CASE("filters") {
  const FiniteGroup g = build_pgl2(7);
  SearchOptions o;
  o.ordered_type = MapType{8, 6};
  o.dedupe_duals = false;
  const auto ordered = search_maps(g, o);
  REQUIRE_FALSE(ordered.maps.empty());
  for (const auto& m : ordered.maps) CHECK(m.type == MapType{8, 6});

  SearchOptions in_psl;
  in_psl.predicate = [](const FiniteGroup& grp, const Triple& t) {
    return grp.in_psl(t.r) && grp.in_psl(t.t) && grp.in_psl(t.l);
  };
  CHECK(search_maps(g, in_psl).maps.empty());

  SearchOptions bad;
  bad.workers = 0;
  CHECK_THROWS_AS(search_maps(g, bad), InvalidArgument);
}

TEST_CASE("statistics") {
  SearchOptions o;
  const auto r = search_maps(build_psl2(7), o);
  CHECK(r.stats.involutions == 21);
  CHECK(r.stats.pairs_visited <= r.stats.pairs);
  CHECK(r.stats.triples_tested == r.stats.pairs_visited * r.stats.involutions);
  CHECK(r.stats.raw_hits >= r.maps.size());
}
