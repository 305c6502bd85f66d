#pragma once

// Exhaustive search for regular maps in a finite group: every generating
// triple of involutions (r, t, l) with [t, l] = 1, up to isomorphism.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "regmap/group.hpp"
#include "regmap/maps.hpp"

namespace regmap {

struct SearchOptions {
  std::optional<std::int64_t> chi;
  /// Type compared as an unordered pair.
  std::optional<MapType> type;
  /// Type compared as (|rt|, |rl|).
  std::optional<MapType> ordered_type;
  /// Also identify a map with its dual.
  bool dedupe_duals = true;
  /// Extra filter; must be invariant under simultaneous conjugation.
  std::function<bool(const FiniteGroup&, const Triple&)> predicate;
  unsigned workers = 1;
  /// Visit one (t, l) pair per conjugacy orbit of ordered pairs.
  bool conjugacy_reduction = true;
  bool dickson_cap = true;
  bool compute_orientability = true;
};

struct FoundMap {
  Triple triple;
  MapType type;
  std::int64_t chi = 0;
  OrbitCounts orbits;
  std::optional<bool> orientable;
  std::optional<std::uint64_t> genus;
  /// Isomorphic to its own dual.
  bool self_dual = false;
};

struct SearchStats {
  std::uint64_t involutions = 0;
  std::uint64_t pairs = 0;
  std::uint64_t pairs_visited = 0;
  std::uint64_t triples_tested = 0;
  std::uint64_t generation_checks = 0;
  std::uint64_t raw_hits = 0;
};

struct SearchResult {
  std::vector<FoundMap> maps;
  SearchStats stats;
};

/// Results are sorted by (ordered type, canonical triple); each triple is the
/// minimum of its conjugacy orbit, so the output does not depend on worker
/// count or on the reduction pass. Throws OrderLimitExceeded for groups past
/// the enumeration limit.
SearchResult search_maps(const FiniteGroup& g, const SearchOptions& options = {});

/// Minimum of the orbit of `triple` under simultaneous conjugation.
Triple canonical_triple(const FiniteGroup& g, const Triple& triple);

}  // namespace regmap
