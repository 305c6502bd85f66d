#pragma once

// Classification of regular maps with Euler characteristic -pq, q > p >= 5
// primes: the k(x,y) tables, the candidate list for a given (p, q), and the
// exhaustive-search checks behind it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regmap/families.hpp"
#include "regmap/maps.hpp"
#include "regmap/search.hpp"

namespace regmap {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, lowest terms

  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// xy / (xy - 2x - 2y); empty when the denominator vanishes.
std::optional<Rational> k_value(std::int64_t x, std::int64_t y);

struct KRow {
  MapType type;  // x <= y
  std::int64_t k = 0;
  friend bool operator==(const KRow&, const KRow&) = default;
};

/// Unordered pairs 3 <= x <= y with k(x,y) a positive integer, sorted.
std::vector<KRow> table1();
/// Same rows by plain enumeration of x <= y <= limit.
std::vector<KRow> table1_bruteforce(std::int64_t limit);

struct OrderRow {
  MapType type;
  std::int64_t k = 0;
  std::uint64_t order = 0;  // 4 k pq
  std::string label;        // e.g. "84pq", "40q"
};

/// Rows of table1 with |G| = 4k pq divisible by both x and y.
std::vector<OrderRow> table2(std::int64_t p, std::int64_t q);

struct SporadicRow {
  MapType type;
  std::int64_t p = 0;
  std::int64_t q = 0;
};

/// PSL(2,q) candidates with q^2 - 1 = 8 k p.
const std::vector<SporadicRow>& sporadic_psl_rows();
/// PGL(2,q) candidates with q^2 - 1 = 4 k p.
const std::vector<SporadicRow>& sporadic_pgl_rows();
/// Type and {p, q} combinations ruled out for PSL(2,q).
const std::vector<SporadicRow>& eliminated_psl_rows();

enum class Status { Constructed, Conditional, SearchConfirmed, SearchRefuted };
std::string_view status_name(Status s);

struct MapDescriptor {
  std::string case_tag;  // i, ii, iii, iv, v1..v4, vi1..vi4, v4x, vi4x
  std::string params;    // canonical parameter text
  MapType type;          // ordered (|rt|, |rl|)
  std::string group_family;
  std::uint64_t group_order = 0;
  std::int64_t chi = 0;
  std::optional<bool> orientable;
  Status status = Status::Conditional;
  std::optional<std::size_t> dual_of;
  bool self_dual = false;
  std::string note;
  std::optional<AlgebraicMap> map;
  std::optional<std::int64_t> chi_by_orbits;
};

struct ClassifyOptions {
  /// Groups up to this order are searched; larger ones stay conditional.
  std::uint64_t search_scale = 30'000;
  unsigned workers = 1;
  bool conjugacy_reduction = true;
  bool dickson_cap = true;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
};

struct ClassifyReport {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<MapDescriptor> descriptors;
};

/// Every candidate of the classification for (p, q), verified where the
/// group is within scale. Throws InvalidArgument unless q > p >= 5 primes.
ClassifyReport enumerate_cases(std::int64_t p, std::int64_t q, const ClassifyOptions& options = {});

/// Maps (x, y, z) on PGL(2,f) of ordered type (m, n) with x, y outside
/// PSL(2,f) and z inside; the bases that lift_map accepts. Type and predicate
/// fields of `options` are overwritten.
SearchResult lift_bases(std::int64_t f, std::int64_t m, std::int64_t n, SearchOptions options = {},
                        std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// The lift of the first base (in search order), or empty when none exists.
/// Throws InvalidArgument when gcd(d, m) != 1.
std::optional<AlgebraicMap> construct_lift(const LiftParams& params, const SearchOptions& options = {},
                                           std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

struct SporadicCheck {
  std::string table;  // "psl", "pgl" or "eliminated"
  SporadicRow row;
  std::int64_t k = 0;
  bool arithmetic_ok = false;
  /// Empty when skipped for scale.
  std::optional<std::size_t> maps_found;
};

std::vector<SporadicCheck> verify_sporadic_tables(const ClassifyOptions& options = {});

struct ContainmentGroup {
  std::string family;
  std::uint64_t order = 0;
  bool searched = false;
  std::size_t maps_found = 0;
  std::size_t unmatched = 0;
};

/// Searches every group named by a descriptor of (p, q) (and every candidate
/// group of the search-based cases) for all maps with chi = -pq, and checks
/// each against the descriptor list.
std::vector<ContainmentGroup> containment_check(std::int64_t p, std::int64_t q, const ClassifyOptions& options = {});

}  // namespace regmap
