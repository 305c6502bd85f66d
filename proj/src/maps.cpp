#include "regmap/maps.hpp"

#include <algorithm>
#include <set>

#include "regmap/errors.hpp"
#include "regmap/group_algorithms.hpp"

namespace regmap {

using Reason = ValidationError::Reason;

AlgebraicMap AlgebraicMap::validate(const FiniteGroup& group, const Triple& triple, bool use_dickson) {
  const Element one = group.identity();
  const std::pair<const char*, const Element*> named[] = {{"r", &triple.r}, {"t", &triple.t}, {"l", &triple.l}};
  for (auto [name, x] : named) {
    if (!group.contains(*x)) throw ValidationError(Reason::NotInGroup, std::string(name) + " is not in " + group.describe());
    if (*x == one || group.multiply(*x, *x) != one)
      throw ValidationError(Reason::NotInvolution, std::string(name) + " = " + group.format(*x) + " is not an involution");
  }
  if (group.multiply(triple.t, triple.l) != group.multiply(triple.l, triple.t))
    throw ValidationError(Reason::NotCommuting, "t and l do not commute");
  const std::vector<Element> seeds{triple.r, triple.t, triple.l};
  if (!generates(group, seeds, use_dickson))
    throw ValidationError(Reason::NotGenerating, "the triple does not generate " + group.describe());

  AlgebraicMap m(group, triple);
  m.type_ = {element_order(group, group.multiply(triple.r, triple.t)),
             element_order(group, group.multiply(triple.r, triple.l))};
  m.chi_ = euler_characteristic(group, m.type_);
  if (triple.t == triple.l) m.warnings_.push_back("t = l: edge orbits are degenerate");
  if (m.type_.x < 3 || m.type_.y < 3)
    m.warnings_.push_back("degenerate type (" + std::to_string(m.type_.x) + "," + std::to_string(m.type_.y) + ")");
  return m;
}

MapType map_type(const AlgebraicMap& m) { return m.type(); }

std::int64_t euler_characteristic(const FiniteGroup& g, const MapType& type) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto x = static_cast<std::int64_t>(type.x);
  const auto y = static_cast<std::int64_t>(type.y);
  const std::int64_t num = -n * (x * y - 2 * x - 2 * y);
  const std::int64_t den = 4 * x * y;
  if (den == 0 || num % den != 0)
    throw InternalError("Euler characteristic is not an integer for |G| = " + std::to_string(n) + ", type (" +
                        std::to_string(x) + "," + std::to_string(y) + ")");
  return num / den;
}

std::int64_t euler_characteristic(const AlgebraicMap& m) { return m.chi(); }

namespace {

std::uint64_t index_of(const FiniteGroup& g, std::vector<Element> seeds) {
  const auto size = closure(g, seeds).elements.size();
  if (g.order() % size != 0) throw InternalError("subgroup order does not divide |G|");
  return g.order() / size;
}

}  // namespace

OrbitCounts orbit_counts(const AlgebraicMap& m) {
  const FiniteGroup& g = m.group();
  g.require_enumerable("orbit counts");
  return {index_of(g, {m.r(), m.t()}), index_of(g, {m.t(), m.l()}), index_of(g, {m.r(), m.l()})};
}

std::int64_t euler_characteristic_by_orbits(const AlgebraicMap& m) { return orbit_counts(m).chi(); }

std::uint64_t even_word_index(const AlgebraicMap& m) {
  const FiniteGroup& g = m.group();
  g.require_enumerable("even-word subgroup");
  return index_of(g, {g.multiply(m.t(), m.r()), g.multiply(m.r(), m.l())});
}

bool orientability(const AlgebraicMap& m) {
  const auto index = even_word_index(m);
  if (index != 1 && index != 2)
    throw InternalError("even-word subgroup has index " + std::to_string(index));
  const bool orientable = index == 2;
  if (orientable && m.chi() % 2 != 0) throw InternalError("orientable map with odd Euler characteristic");
  return orientable;
}

std::uint64_t genus(std::int64_t chi, bool orientable) {
  if ((orientable && (chi > 2 || chi % 2 != 0)) || (!orientable && chi > 1))
    throw InvalidArgument("no closed surface with Euler characteristic " + std::to_string(chi));
  return orientable ? static_cast<std::uint64_t>((2 - chi) / 2) : static_cast<std::uint64_t>(2 - chi);
}

std::uint64_t genus(const AlgebraicMap& m) { return genus(m.chi(), orientability(m)); }

AlgebraicMap dual(const AlgebraicMap& m) {
  return AlgebraicMap::validate(m.group(), {m.r(), m.l(), m.t()});
}

AlgebraicMap quotient(const AlgebraicMap& m, const std::vector<Element>& normal) {
  const FiniteGroup& g = m.group();
  if (!is_subgroup(g, normal)) throw ValidationError(Reason::NotSubgroup, "N is not a subgroup");
  if (!is_normal_subgroup(g, normal)) throw ValidationError(Reason::NotNormal, "N is not normal");
  ElementSet members(normal.begin(), normal.end());
  for (const Element* x : {&m.r(), &m.t(), &m.l()})
    if (members.contains(*x))
      throw ValidationError(Reason::DegenerateQuotient, g.format(*x) + " lies in N, so its image is trivial");

  auto model = std::make_shared<QuotientModel>(g, all_elements(g), normal);
  auto image = [&](const Element& x) {
    const std::int32_t w = static_cast<std::int32_t>(model->index_of(x));
    return Element(Family::Quotient, Words(&w, 1));
  };
  std::vector<NamedElement> gens{{"rN", image(m.r())}, {"tN", image(m.t())}, {"lN", image(m.l())}};
  FiniteGroup q(model, g.family() + "/N" + std::to_string(normal.size()), gens, g.enumeration_limit());
  return AlgebraicMap::validate(q, {gens[0].element, gens[1].element, gens[2].element});
}

std::optional<CoverWitness> is_regular_cover(const AlgebraicMap& m, const AlgebraicMap& base) {
  const FiniteGroup& g = m.group();
  const FiniteGroup& h = base.group();
  if (g.order() % h.order() != 0) return std::nullopt;
  if (g.order() == h.order()) {
    if (triple_isomorphic(g, m.triple(), h, base.triple())) return CoverWitness{g.identity(), 1};
    return std::nullopt;
  }
  const std::uint64_t wanted = g.order() / h.order();
  const auto elements = all_elements(g);
  ElementSet classified;
  std::set<std::vector<Element>> tried;
  for (const auto& x : elements) {
    if (classified.contains(x)) continue;
    const auto cls = conjugacy_class(g, x);
    classified.insert(cls.begin(), cls.end());
    if (element_order(g, x) > wanted || wanted % element_order(g, x) != 0) continue;
    const Element seed[] = {x};
    auto normal = normal_closure(g, seed);
    if (normal.size() != wanted || !tried.insert(normal).second) continue;
    try {
      auto q = quotient(m, normal);
      if (triple_isomorphic(q.group(), q.triple(), h, base.triple())) return CoverWitness{x, wanted};
    } catch (const ValidationError&) {
    }
  }
  return std::nullopt;
}

}  // namespace regmap
