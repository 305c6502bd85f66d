#pragma once

// Algebraic regular maps M(G; r, t, l): G generated by three involutions
// with t and l commuting. Flags are the elements of G.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regmap/group.hpp"

namespace regmap {

/// Ordered type (|rt|, |rl|).
struct MapType {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  MapType reversed() const { return {y, x}; }
  /// Equality as unordered pairs.
  bool same_set(const MapType& o) const { return (x == o.x && y == o.y) || (x == o.y && y == o.x); }
  friend bool operator==(const MapType&, const MapType&) = default;
  friend auto operator<=>(const MapType&, const MapType&) = default;
};

class AlgebraicMap {
 public:
  /// Checks membership, involutions, [t,l] = 1 and generation. Throws
  /// ValidationError; degenerate but legal inputs only produce warnings.
  static AlgebraicMap validate(const FiniteGroup& group, const Triple& triple, bool use_dickson = true);

  const FiniteGroup& group() const { return group_; }
  const Triple& triple() const { return triple_; }
  const Element& r() const { return triple_.r; }
  const Element& t() const { return triple_.t; }
  const Element& l() const { return triple_.l; }
  MapType type() const { return type_; }
  std::int64_t chi() const { return chi_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  AlgebraicMap(FiniteGroup group, Triple triple) : group_(std::move(group)), triple_(std::move(triple)) {}

  FiniteGroup group_;
  Triple triple_;
  MapType type_;
  std::int64_t chi_ = 0;
  std::vector<std::string> warnings_;
};

MapType map_type(const AlgebraicMap& m);

/// -|G|(xy - 2x - 2y) / (4xy); InternalError when not an integer.
std::int64_t euler_characteristic(const FiniteGroup& g, const MapType& type);
std::int64_t euler_characteristic(const AlgebraicMap& m);

struct OrbitCounts {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t faces = 0;

  std::int64_t chi() const {
    return static_cast<std::int64_t>(vertices) + static_cast<std::int64_t>(faces) - static_cast<std::int64_t>(edges);
  }
};

/// V, E, F as indices of <r,t>, <t,l> and <r,l>.
OrbitCounts orbit_counts(const AlgebraicMap& m);
std::int64_t euler_characteristic_by_orbits(const AlgebraicMap& m);

/// Index of the even-word subgroup <tr, rl>.
std::uint64_t even_word_index(const AlgebraicMap& m);
/// True iff orientable; InternalError for an index other than 1 or 2.
bool orientability(const AlgebraicMap& m);
std::uint64_t genus(std::int64_t chi, bool orientable);
std::uint64_t genus(const AlgebraicMap& m);

AlgebraicMap dual(const AlgebraicMap& m);

/// Map induced on G/N. `normal` lists the elements of N.
AlgebraicMap quotient(const AlgebraicMap& m, const std::vector<Element>& normal);

struct CoverWitness {
  Element generator;  // N is the normal closure of this element
  std::uint64_t normal_order = 0;
};

/// Searches normal closures of single elements (one per conjugacy class) for
/// an N with M/N isomorphic to `base`.
std::optional<CoverWitness> is_regular_cover(const AlgebraicMap& m, const AlgebraicMap& base);

}  // namespace regmap
