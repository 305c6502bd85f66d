#pragma once

// Algorithms on FiniteGroup: orders, closures, generation tests, involutions,
// conjugacy orbits and generator-respecting isomorphism tests.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "regmap/group.hpp"

namespace regmap {

/// Least e >= 1 with g^e = 1.
std::uint64_t element_order(const FiniteGroup& g, const Element& x);

struct ClosureResult {
  bool cap_exceeded = false;
  /// Breadth-first order, identity first. Partial when cap_exceeded.
  std::vector<Element> elements;
};

/// Subgroup generated by `seeds`. With a cap, stops as soon as more than
/// `cap` elements have been found.
ClosureResult closure(const FiniteGroup& g, std::span<const Element> seeds,
                      std::optional<std::uint64_t> cap = std::nullopt);

/// Every element of g. Throws OrderLimitExceeded past the enumeration limit.
std::vector<Element> all_elements(const FiniteGroup& g);

/// Upper bound on the order of a proper subgroup of PSL(2,f).
std::uint64_t dickson_bound(std::uint32_t f);

/// Whether `seeds` generate g. Projective groups use the subgroup-order bound
/// as an early-exit cap when `use_dickson` is set; other groups stop once the
/// closure passes |G|/2.
bool generates(const FiniteGroup& g, std::span<const Element> seeds, bool use_dickson = true);

/// All elements of order exactly 2.
std::vector<Element> involutions(const FiniteGroup& g);

/// Odd Sylow subgroups cyclic and the Sylow 2-subgroup of order <= 2 or with
/// a cyclic subgroup of index 2, decided from element orders.
bool is_almost_sylow_cyclic(const FiniteGroup& g);

/// Whether x_i -> y_i extends to a homomorphism from <xs> onto <ys>; returns
/// the graph size on success. Decided by closing the pairs (x, y) together.
std::optional<std::uint64_t> extends_to_homomorphism(const FiniteGroup& g, std::span<const Element> xs,
                                                     const FiniteGroup& h, std::span<const Element> ys);

/// Whether (r,t,l) -> (r',t',l') extends to an isomorphism G -> H. Both
/// triples must generate their groups.
bool triple_isomorphic(const FiniteGroup& g, const Triple& a, const FiniteGroup& h, const Triple& b);

/// Conjugacy class of x, as an orbit under conjugation by the generators.
std::vector<Element> conjugacy_class(const FiniteGroup& g, const Element& x);

/// Smallest normal subgroup containing `seeds`.
std::vector<Element> normal_closure(const FiniteGroup& g, std::span<const Element> seeds);

/// `subset` is closed under products and stable under conjugation by the
/// generators of g.
bool is_subgroup(const FiniteGroup& g, std::span<const Element> subset);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const Element> subset);

}  // namespace regmap
