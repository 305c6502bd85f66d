#include <doctest.h>

#include <algorithm>

#include "regmap/classify.hpp"
#include "regmap/errors.hpp"
#include "regmap/fields.hpp"
#include "regmap/group_algorithms.hpp"

using namespace regmap;

namespace {

const MapDescriptor* find(const ClassifyReport& r, std::string_view tag, std::string_view params) {
  for (const auto& d : r.descriptors)
    if (d.case_tag == tag && d.params == params) return &d;
  return nullptr;
}

std::size_t count_tag(const ClassifyReport& r, std::string_view tag) {
  return static_cast<std::size_t>(
      std::count_if(r.descriptors.begin(), r.descriptors.end(), [&](const MapDescriptor& d) { return d.case_tag == tag; }));
}

void check_report_invariants(const ClassifyReport& r) {
  const std::int64_t chi = -r.p * r.q;
  for (std::size_t i = 0; i < r.descriptors.size(); ++i) {
    const auto& d = r.descriptors[i];
    CAPTURE(d.params);
    CHECK(d.chi == chi);
    CHECK(static_cast<std::int64_t>(d.group_order) <= 84 * r.p * r.q);
    if (d.map) {
      const auto again = AlgebraicMap::validate(d.map->group(), d.map->triple());
      CHECK(again.chi() == chi);
      CHECK(again.type() == d.type);
      REQUIRE(d.dual_of);
      const auto& partner = r.descriptors.at(*d.dual_of);
      CHECK(partner.dual_of == i);
      CHECK(partner.type == d.type.reversed());
      CHECK(d.self_dual == (*d.dual_of == i));
      for (std::size_t j = 0; j < i; ++j) {
        const auto& e = r.descriptors[j];
        if (e.map && e.group_order == d.group_order && e.type == d.type)
          CHECK_FALSE(triple_isomorphic(e.map->group(), e.map->triple(), d.map->group(), d.map->triple()));
      }
    }
  }
}

}  // namespace

TEST_CASE("k values") {
  CHECK(k_value(3, 7) == Rational{21, 1});
  CHECK(k_value(8, 8) == Rational{2, 1});
  CHECK_FALSE(k_value(4, 4));
  CHECK(k_value(3, 10) == Rational{15, 2});
  CHECK(k_value(2, 5) == Rational{-5, 2});
}

TEST_CASE("table of integral k") {
  const std::vector<KRow> golden{
      {{3, 7}, 21}, {{3, 8}, 12}, {{3, 9}, 9},  {{3, 12}, 6}, {{3, 15}, 5}, {{3, 24}, 4}, {{4, 5}, 10}, {{4, 6}, 6},
      {{4, 8}, 4},  {{4, 12}, 3}, {{5, 5}, 5},  {{5, 20}, 2}, {{6, 6}, 3},  {{6, 12}, 2}, {{8, 8}, 2},
  };
  CHECK(table1() == golden);
  CHECK(table1_bruteforce(500) == golden);
}

TEST_CASE("group order table") {
  const auto rows = table2(5, 7);
  auto has = [&](MapType t) {
    return std::find_if(rows.begin(), rows.end(), [&](const OrderRow& r) { return r.type == t; });
  };
  for (MapType gone : {MapType{3, 15}, MapType{3, 24}, MapType{6, 12}}) CHECK(has(gone) == rows.end());
  REQUIRE(has({3, 7}) != rows.end());
  CHECK(has({3, 7})->order == 84 * 35);
  CHECK(has({3, 7})->label == "84pq");
  REQUIRE(has({5, 20}) != rows.end());
  CHECK(has({5, 20})->label == "40q");
  CHECK(has({8, 8})->label == "8pq");
  for (const auto& r : rows) {
    CHECK(r.order == static_cast<std::uint64_t>(4 * r.k * 35));
    CHECK(r.order % r.type.x == 0);
    CHECK(r.order % r.type.y == 0);
  }
  const auto other = table2(7, 11);
  CHECK(std::none_of(other.begin(), other.end(), [](const OrderRow& r) { return r.label == "40q"; }));
}

TEST_CASE("sporadic table arithmetic") {
  for (const auto& r : sporadic_psl_rows()) {
    const auto k = k_value(static_cast<std::int64_t>(r.type.x), static_cast<std::int64_t>(r.type.y));
    REQUIRE(k);
    CHECK(r.q * r.q - 1 == 8 * k->num * r.p);
  }
  for (const auto& r : sporadic_pgl_rows()) {
    const auto k = k_value(static_cast<std::int64_t>(r.type.x), static_cast<std::int64_t>(r.type.y));
    CHECK(r.q * r.q - 1 == 4 * k->num * r.p);
  }
  const auto& psl = sporadic_psl_rows();
  CHECK(std::none_of(psl.begin(), psl.end(),
                     [](const SporadicRow& r) { return r.type == MapType{4, 12} && r.p == 7 && r.q == 13; }));
}

TEST_CASE("sporadic rows searched within scale") {
  ClassifyOptions o;
  o.search_scale = 5000;
  const auto checks = verify_sporadic_tables(o);
  CHECK(checks.size() == 15);
  for (const auto& c : checks) {
    CAPTURE(c.row.q);
    CHECK(c.arithmetic_ok);
    const auto order = static_cast<std::uint64_t>(c.row.q * (c.row.q * c.row.q - 1)) / (c.table == "pgl" ? 1 : 2);
    CHECK(c.maps_found.has_value() == (order <= 5000));
  }
  auto found = [&](std::string_view table, std::int64_t q, MapType t) {
    for (const auto& c : checks)
      if (c.table == table && c.row.q == q && c.row.type == t) return c.maps_found;
    return std::optional<std::size_t>{};
  };
  CHECK(found("psl", 11, {6, 6}) == 1);
  CHECK(found("psl", 13, {6, 6}) == 0);
  CHECK(found("pgl", 13, {3, 12}) == 2);
  CHECK(found("pgl", 13, {4, 6}) == 1);
  CHECK(found("eliminated", 13, {4, 12}) == 0);
  CHECK(found("eliminated", 11, {4, 12}) == 0);
  CHECK(found("eliminated", 19, {3, 9}) == 2);
}

TEST_CASE("classification for the twin primes 5, 7") {
  const auto r = enumerate_cases(5, 7);
  check_report_invariants(r);

  const auto* m77 = find(r, "i", "m1:j=7,k=7");
  REQUIRE(m77);
  CHECK(m77->status == Status::Constructed);
  CHECK(m77->type == MapType{14, 14});
  CHECK(m77->self_dual);
  CHECK(m77->orientable == false);
  CHECK(m77->chi_by_orbits == -35);
  REQUIRE(find(r, "i", "m1:j=3,k=19"));
  CHECK(find(r, "i", "m1:j=3,k=19;dual"));
  REQUIRE(find(r, "ii", "m2:x=0,n=4,p=7"));
  CHECK(find(r, "ii", "m2:x=0,n=4,p=7")->type == MapType{14, 4});
  REQUIRE(find(r, "iii", "m2:x=1,n=6,p=5"));
  CHECK(find(r, "iii", "m2:x=1,n=6,p=5")->type == MapType{10, 6});
  REQUIRE(find(r, "iv", "m3:u=39"));
  CHECK(find(r, "iv", "m3:u=39")->type == MapType{39, 4});

  CHECK(count_tag(r, "vi3") == 4);
  for (const auto& d : r.descriptors)
    if (d.case_tag == "vi3") {
      CHECK(d.status == Status::SearchConfirmed);
      CHECK(d.type.same_set(MapType{6, 8}));
    }
  const auto* lift = find(r, "vi1", "lift:d=5,f=5,m=4,n=3");
  REQUIRE(lift);
  CHECK(lift->status == Status::SearchRefuted);
  CHECK(lift->type == MapType{20, 3});
  CHECK(lift->group_order == 600);
  CHECK_FALSE(lift->map);
  CHECK(count_tag(r, "v1") + count_tag(r, "v2") + count_tag(r, "v3") == 0);
  CHECK(r.descriptors.size() == 14);
  for (const auto& d : r.descriptors)
    if (d.map) CHECK(d.orientable == false);
}

TEST_CASE("classification for further pairs") {
  SUBCASE("5, 11: Table 3 row and PGL(2,11) maps outside the static tables") {
    const auto r = enumerate_cases(5, 11);
    check_report_invariants(r);
    const auto* psl = find(r, "v4", "psl:f=11;type=6,6");
    REQUIRE(psl);
    CHECK(psl->status == Status::SearchConfirmed);
    CHECK(psl->self_dual);
    CHECK(count_tag(r, "vi4x") == 6);
  }
  SUBCASE("7, 13: refuted PSL row, confirmed PGL rows") {
    const auto r = enumerate_cases(7, 13);
    check_report_invariants(r);
    const auto* psl = find(r, "v4", "psl:f=13;type=6,6");
    REQUIRE(psl);
    CHECK(psl->status == Status::SearchRefuted);
    CHECK(count_tag(r, "vi4") == 6);
  }
  SUBCASE("5, 19: a row listed as eliminated has maps") {
    const auto r = enumerate_cases(5, 19);
    check_report_invariants(r);
    CHECK(count_tag(r, "v4x") == 4);
    CHECK(find(r, "iii", "m2:x=0,n=12,p=5"));
  }
  SUBCASE("5, 23: conditional cover") {
    const auto r = enumerate_cases(5, 23);
    check_report_invariants(r);
    const auto* cover = find(r, "iii", "cover:k=2,x=0,n=4,p=5");
    REQUIRE(cover);
    CHECK(cover->status == Status::Conditional);
    CHECK(cover->type == MapType{50, 4});
    CHECK(cover->group_order == 1000);
    REQUIRE(cover->dual_of);
    CHECK(r.descriptors[*cover->dual_of].type == MapType{4, 50});
  }
  SUBCASE("7, 37: explicit lift") {
    const auto r = enumerate_cases(7, 37);
    check_report_invariants(r);
    const auto* lift = find(r, "vi1", "lift:d=5,f=7,m=3,n=8");
    REQUIRE(lift);
    CHECK(lift->status == Status::Constructed);
    CHECK(lift->type == MapType{15, 8});
    CHECK(lift->group_order == 1680);
  }
  SUBCASE("11, 13: PGL(2,11) itself when d = 1") {
    const auto r = enumerate_cases(11, 13);
    check_report_invariants(r);
    CHECK(count_tag(r, "vi1") == 8);
  }
  SUBCASE("5, 29: Hurwitz-type PSL row") {
    const auto r = enumerate_cases(5, 29);
    check_report_invariants(r);
    const auto* psl = find(r, "v4", "psl:f=29;type=3,7");
    REQUIRE(psl);
    CHECK(psl->status == Status::SearchConfirmed);
  }
  SUBCASE("groups past the search scale stay conditional") {
    ClassifyOptions o;
    o.search_scale = 1000;
    const auto r = enumerate_cases(5, 29, o);
    const auto* psl = find(r, "v4", "psl:f=29;type=3,7");
    REQUIRE(psl);
    CHECK(psl->status == Status::Conditional);
    CHECK_FALSE(psl->map);
  }
}

TEST_CASE("input checks") {
  CHECK_THROWS_AS(enumerate_cases(3, 7), InvalidArgument);
  CHECK_THROWS_AS(enumerate_cases(7, 5), InvalidArgument);
  CHECK_THROWS_AS(enumerate_cases(5, 9), InvalidArgument);
  CHECK_THROWS_AS(enumerate_cases(5, 5), InvalidArgument);
}

TEST_CASE("search toggles do not change the classification") {
  ClassifyOptions plain;
  ClassifyOptions toggled;
  toggled.conjugacy_reduction = false;
  toggled.dickson_cap = false;
  toggled.workers = 3;
  for (auto [p, q] : {std::pair{5, 7}, std::pair{7, 13}}) {
    const auto a = enumerate_cases(p, q, plain);
    const auto b = enumerate_cases(p, q, toggled);
    REQUIRE(a.descriptors.size() == b.descriptors.size());
    for (std::size_t i = 0; i < a.descriptors.size(); ++i) {
      CHECK(a.descriptors[i].params == b.descriptors[i].params);
      CHECK(a.descriptors[i].status == b.descriptors[i].status);
      CHECK(a.descriptors[i].map.has_value() == b.descriptors[i].map.has_value());
      if (a.descriptors[i].map) CHECK(a.descriptors[i].map->triple() == b.descriptors[i].map->triple());
    }
  }
}

TEST_CASE("oracle containment for pq <= 200") {
  ClassifyOptions wide;
  wide.search_scale = 60000;
  wide.workers = 4;
  std::size_t pairs = 0;
  for (std::int64_t p = 5; p * p < 200; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    for (std::int64_t q = p + 1; p * q <= 200; ++q) {
      if (!is_prime(static_cast<std::uint64_t>(q))) continue;
      ++pairs;
      for (const auto& g : containment_check(p, q, wide)) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(g.family);
        CHECK(g.searched);
        CHECK(g.unmatched == 0);
      }
    }
  }
  CHECK(pairs == 16);
}
