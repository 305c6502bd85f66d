#include "regmap/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "regmap/errors.hpp"
#include "regmap/group_algorithms.hpp"

namespace regmap {

namespace {

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept {
    ElementHash h;
    std::size_t v = h(t.r);
    v = v * 1000003u ^ h(t.t);
    v = v * 1000003u ^ h(t.l);
    return v;
  }
};

using TripleSet = std::unordered_set<Triple, TripleHash>;

struct Pair {
  std::uint32_t t, l;
};

// All elements of the orbit of `seed` under conjugation by the generators.
std::vector<Triple> triple_orbit(const FiniteGroup& g, const Triple& seed) {
  const auto gens = g.generator_elements();
  TripleSet seen{seed};
  std::vector<Triple> out{seed};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Triple cur = out[head];
    for (const auto& s : gens) {
      Triple next{g.conjugate(cur.r, s), g.conjugate(cur.t, s), g.conjugate(cur.l, s)};
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  return out;
}

std::vector<Pair> commuting_pairs(const FiniteGroup& g, const std::vector<Element>& inv, bool reduce,
                                  SearchStats& stats) {
  ElementMap<std::uint32_t> index;
  for (std::uint32_t i = 0; i < inv.size(); ++i) index.emplace(inv[i], i);
  std::vector<Pair> all;
  for (std::uint32_t i = 0; i < inv.size(); ++i)
    for (std::uint32_t j = 0; j < inv.size(); ++j)
      if (i != j && g.multiply(inv[i], inv[j]) == g.multiply(inv[j], inv[i])) all.push_back({i, j});
  stats.pairs = all.size();
  if (!reduce) return all;

  const auto gens = g.generator_elements();
  const std::uint64_t n = inv.size();
  std::vector<bool> visited(n * n, false);
  std::vector<Pair> reps;
  for (const Pair& p : all) {
    if (visited[p.t * n + p.l]) continue;
    reps.push_back(p);
    std::vector<Pair> queue{p};
    visited[p.t * n + p.l] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Pair cur = queue[head];
      for (const auto& s : gens) {
        const std::uint32_t a = index.at(g.conjugate(inv[cur.t], s));
        const std::uint32_t b = index.at(g.conjugate(inv[cur.l], s));
        if (!visited[a * n + b]) {
          visited[a * n + b] = true;
          queue.push_back({a, b});
        }
      }
    }
  }
  return reps;
}

bool type_matches(const SearchOptions& o, const MapType& type) {
  if (o.ordered_type && !(*o.ordered_type == type)) return false;
  if (o.type && !o.type->same_set(type)) return false;
  return true;
}

// chi by formula, or nullopt when it is not an integer (then no map exists).
std::optional<std::int64_t> formula_chi(std::uint64_t order, const MapType& type) {
  const auto n = static_cast<std::int64_t>(order);
  const auto x = static_cast<std::int64_t>(type.x);
  const auto y = static_cast<std::int64_t>(type.y);
  const std::int64_t num = -n * (x * y - 2 * x - 2 * y);
  const std::int64_t den = 4 * x * y;
  if (num % den != 0) return std::nullopt;
  return num / den;
}

}  // namespace

Triple canonical_triple(const FiniteGroup& g, const Triple& triple) {
  const auto orbit = triple_orbit(g, triple);
  return *std::min_element(orbit.begin(), orbit.end());
}

SearchResult search_maps(const FiniteGroup& g, const SearchOptions& options) {
  if (options.workers == 0) throw InvalidArgument("worker count must be positive");
  SearchResult result;
  const auto inv = involutions(g);
  result.stats.involutions = inv.size();
  const auto pairs = commuting_pairs(g, inv, options.conjugacy_reduction, result.stats);
  result.stats.pairs_visited = pairs.size();

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> tested{0}, checks{0};
  std::mutex merge;
  std::vector<Triple> hits;

  auto worker = [&] {
    std::vector<Triple> local;
    std::uint64_t local_tested = 0, local_checks = 0;
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const Element& t = inv[pairs[i].t];
      const Element& l = inv[pairs[i].l];
      for (const Element& r : inv) {
        ++local_tested;
        const MapType type{element_order(g, g.multiply(r, t)), element_order(g, g.multiply(r, l))};
        if (!type_matches(options, type)) continue;
        const auto chi = formula_chi(g.order(), type);
        if (!chi || (options.chi && *chi != *options.chi)) continue;
        const Triple triple{r, t, l};
        if (options.predicate && !options.predicate(g, triple)) continue;
        ++local_checks;
        const std::vector<Element> seeds{r, t, l};
        if (generates(g, seeds, options.dickson_cap)) local.push_back(triple);
      }
    }
    std::lock_guard lock(merge);
    hits.insert(hits.end(), local.begin(), local.end());
    tested += local_tested;
    checks += local_checks;
  };

  {
    std::vector<std::jthread> threads;
    for (unsigned w = 1; w < options.workers; ++w) threads.emplace_back(worker);
    worker();
  }
  result.stats.triples_tested = tested;
  result.stats.generation_checks = checks;
  result.stats.raw_hits = hits.size();

  // Reduce hits to orbit minima; every orbit member is marked so repeats cost one lookup.
  std::sort(hits.begin(), hits.end());
  TripleSet seen;
  std::set<Triple> canonical;
  for (const Triple& h : hits) {
    if (seen.contains(h)) continue;
    const auto orbit = triple_orbit(g, h);
    seen.insert(orbit.begin(), orbit.end());
    canonical.insert(*std::min_element(orbit.begin(), orbit.end()));
  }

  struct Candidate {
    MapType type;
    Triple triple;
  };
  std::vector<Candidate> sorted;
  for (const Triple& c : canonical)
    sorted.push_back({{element_order(g, g.multiply(c.r, c.t)), element_order(g, g.multiply(c.r, c.l))}, c});
  std::sort(sorted.begin(), sorted.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.type, a.triple) < std::tie(b.type, b.triple);
  });

  for (const Candidate& cand : sorted) {
    const Triple dual_triple{cand.triple.r, cand.triple.l, cand.triple.t};
    bool duplicate = false;
    for (const FoundMap& kept : result.maps) {
      if (triple_isomorphic(g, kept.triple, g, cand.triple) ||
          (options.dedupe_duals && triple_isomorphic(g, kept.triple, g, dual_triple))) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    FoundMap found;
    found.triple = cand.triple;
    found.type = cand.type;
    found.chi = *formula_chi(g.order(), cand.type);
    found.orbits = {g.order() / (2 * cand.type.x), g.order() / 4, g.order() / (2 * cand.type.y)};
    found.self_dual = triple_isomorphic(g, cand.triple, g, dual_triple);
    if (options.compute_orientability) {
      auto m = AlgebraicMap::validate(g, cand.triple, options.dickson_cap);
      found.orientable = orientability(m);
      found.genus = genus(found.chi, *found.orientable);
    }
    result.maps.push_back(found);
  }
  return result;
}

}  // namespace regmap
