#include "regmap/group_algorithms.hpp"

#include <algorithm>
#include <deque>

#include "regmap/errors.hpp"
#include "regmap/fields.hpp"

namespace regmap {

std::uint64_t element_order(const FiniteGroup& g, const Element& x) {
  const Element one = g.identity();
  Element power = x;
  for (std::uint64_t e = 1; e <= g.order(); ++e) {
    if (power == one) return e;
    power = g.multiply(power, x);
  }
  throw InternalError("element order exceeds |G| in " + g.describe());
}

ClosureResult closure(const FiniteGroup& g, std::span<const Element> seeds, std::optional<std::uint64_t> cap) {
  ClosureResult out;
  ElementSet seen;
  std::vector<Element> gens;
  const Element one = g.identity();
  for (const auto& s : seeds)
    if (s != one && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);

  out.elements.push_back(one);
  seen.insert(one);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    const Element x = out.elements[head];
    for (const auto& s : gens) {
      Element y = g.multiply(x, s);
      if (!seen.insert(y).second) continue;
      out.elements.push_back(y);
      if (cap && out.elements.size() > *cap) {
        out.cap_exceeded = true;
        return out;
      }
    }
  }
  return out;
}

std::vector<Element> all_elements(const FiniteGroup& g) {
  g.require_enumerable("enumerate elements");
  auto gens = g.generator_elements();
  auto result = closure(g, gens);
  if (result.elements.size() != g.order())
    throw InternalError("generators of " + g.describe() + " produce " + std::to_string(result.elements.size()) +
                        " elements, expected " + std::to_string(g.order()));
  return std::move(result.elements);
}

std::uint64_t dickson_bound(std::uint32_t f) {
  const std::uint64_t ff = f;
  return std::max({ff * (ff - 1) / 2, 2 * (ff + 1), std::uint64_t{120}, std::uint64_t{48}});
}

bool generates(const FiniteGroup& g, std::span<const Element> seeds, bool use_dickson) {
  const std::uint64_t n = g.order();
  if (n == 1) return true;
  std::uint64_t cap = n / 2;
  if (use_dickson) {
    if (auto f = g.projective_field()) {
      const std::uint64_t bound = dickson_bound(*f);
      if (g.projective_special()) {
        cap = std::min(cap, bound);
      } else {
        // PSL(2,f) itself has index 2, so a generating set needs an element outside it.
        if (std::all_of(seeds.begin(), seeds.end(), [&](const Element& s) { return g.in_psl(s); })) return false;
        cap = std::min(cap, 2 * bound);
      }
    }
  }
  auto result = closure(g, seeds, cap);
  return result.cap_exceeded || result.elements.size() == n;
}

std::vector<Element> involutions(const FiniteGroup& g) {
  std::vector<Element> out;
  const Element one = g.identity();
  for (const auto& x : all_elements(g))
    if (x != one && g.multiply(x, x) == one) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_almost_sylow_cyclic(const FiniteGroup& g) {
  const auto elements = all_elements(g);
  std::vector<std::uint64_t> orders;
  orders.reserve(elements.size());
  for (const auto& x : elements) orders.push_back(element_order(g, x));
  auto has_order = [&](std::uint64_t k) { return std::find(orders.begin(), orders.end(), k) != orders.end(); };
  for (std::uint64_t s : prime_divisors(g.order())) {
    const std::uint64_t part = prime_power_part(g.order(), s);
    if (s == 2) {
      if (part > 2 && !has_order(part) && !has_order(part / 2)) return false;
    } else if (!has_order(part)) {
      return false;
    }
  }
  return true;
}

std::optional<std::uint64_t> extends_to_homomorphism(const FiniteGroup& g, std::span<const Element> xs,
                                                     const FiniteGroup& h, std::span<const Element> ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("generator and image lists differ in length");
  ElementMap<Element> image;
  std::vector<Element> queue;
  const Element one = g.identity();
  image.emplace(one, h.identity());
  queue.push_back(one);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    const Element y = image.at(x);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Element gx = g.multiply(x, xs[i]);
      Element hy = h.multiply(y, ys[i]);
      auto [it, fresh] = image.emplace(gx, hy);
      if (!fresh) {
        if (it->second != hy) return std::nullopt;
        continue;
      }
      queue.push_back(gx);
      if (queue.size() > g.enumeration_limit())
        throw OrderLimitExceeded("parallel closure exceeds the enumeration limit");
    }
  }
  return queue.size();
}

bool triple_isomorphic(const FiniteGroup& g, const Triple& a, const FiniteGroup& h, const Triple& b) {
  if (g.order() != h.order()) return false;
  auto order_of = [](const FiniteGroup& grp, const Element& x, const Element& y) {
    return element_order(grp, grp.multiply(x, y));
  };
  if (order_of(g, a.r, a.t) != order_of(h, b.r, b.t)) return false;
  if (order_of(g, a.r, a.l) != order_of(h, b.r, b.l)) return false;
  if (order_of(g, a.t, a.l) != order_of(h, b.t, b.l)) return false;
  const std::vector<Element> xs{a.r, a.t, a.l};
  const std::vector<Element> ys{b.r, b.t, b.l};
  auto size = extends_to_homomorphism(g, xs, h, ys);
  return size && *size == g.order();
}

std::vector<Element> conjugacy_class(const FiniteGroup& g, const Element& x) {
  const auto gens = g.generator_elements();
  ElementSet seen{x};
  std::vector<Element> out{x};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Element y = out[head];
    for (const auto& s : gens) {
      Element z = g.conjugate(y, s);
      if (seen.insert(z).second) out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> normal_closure(const FiniteGroup& g, std::span<const Element> seeds) {
  std::vector<Element> generators;
  ElementSet seen;
  for (const auto& s : seeds)
    for (auto& c : conjugacy_class(g, s))
      if (seen.insert(c).second) generators.push_back(c);
  auto result = closure(g, generators);
  std::sort(result.elements.begin(), result.elements.end());
  return std::move(result.elements);
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> subset) {
  ElementSet members(subset.begin(), subset.end());
  if (members.empty() || !members.contains(g.identity())) return false;
  for (const auto& x : members) {
    if (!g.contains(x)) return false;
    for (const auto& y : members)
      if (!members.contains(g.multiply(x, y))) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Element> subset) {
  if (!is_subgroup(g, subset)) return false;
  ElementSet members(subset.begin(), subset.end());
  for (const auto& s : g.generator_elements())
    for (const auto& x : subset)
      if (!members.contains(g.conjugate(x, s))) return false;
  return true;
}

}  // namespace regmap
