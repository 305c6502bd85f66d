#include "regmap/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "regmap/errors.hpp"
#include "regmap/families.hpp"
#include "regmap/fields.hpp"
#include "regmap/group_algorithms.hpp"

namespace regmap {

// ------------------------------------------------------------------ tables

std::optional<Rational> k_value(std::int64_t x, std::int64_t y) {
  std::int64_t num = x * y;
  std::int64_t den = x * y - 2 * x - 2 * y;
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

namespace {

bool positive_integer_k(std::int64_t x, std::int64_t y, std::int64_t& k) {
  auto v = k_value(x, y);
  if (!v || !v->is_integer() || v->num <= 0) return false;
  k = v->num;
  return true;
}

}  // namespace

std::vector<KRow> table1() {
  // xy - 2x - 2y must divide 2x + 2y. For x = 3 that is y - 6 | 18 (y <= 24),
  // for x = 4 it is 2y - 8 | 16, and for x >= 5 it forces (x - 4) y <= 4x, so x <= 8.
  std::vector<KRow> rows;
  for (std::int64_t x = 3; x <= 8; ++x)
    for (std::int64_t y = x; y <= 24; ++y) {
      std::int64_t k = 0;
      if (positive_integer_k(x, y, k)) rows.push_back({{static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y)}, k});
    }
  return rows;
}

std::vector<KRow> table1_bruteforce(std::int64_t limit) {
  std::vector<KRow> rows;
  for (std::int64_t x = 3; x <= limit; ++x)
    for (std::int64_t y = x; y <= limit; ++y) {
      std::int64_t k = 0;
      if (positive_integer_k(x, y, k)) rows.push_back({{static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y)}, k});
    }
  return rows;
}

std::vector<OrderRow> table2(std::int64_t p, std::int64_t q) {
  std::vector<OrderRow> rows;
  for (const KRow& row : table1()) {
    const auto x = static_cast<std::int64_t>(row.type.x);
    const auto y = static_cast<std::int64_t>(row.type.y);
    const std::int64_t c = 4 * row.k;
    const std::int64_t a = c * p * q;
    if (a % x != 0 || a % y != 0) continue;
    std::string label;
    if (c % x == 0 && c % y == 0)
      label = std::to_string(c) + "pq";
    else if ((c * p) % x == 0 && (c * p) % y == 0)
      label = std::to_string(c * p) + "q";
    else if ((c * q) % x == 0 && (c * q) % y == 0)
      label = std::to_string(c * q) + "p";
    else
      label = std::to_string(a);
    rows.push_back({row.type, row.k, static_cast<std::uint64_t>(a), label});
  }
  return rows;
}

const std::vector<SporadicRow>& sporadic_psl_rows() {
  static const std::vector<SporadicRow> rows{
      {{3, 7}, 41, 83}, {{3, 7}, 5, 29}, {{3, 9}, 19, 37}, {{3, 12}, 11, 23}, {{6, 6}, 7, 13}, {{6, 6}, 5, 11},
  };
  return rows;
}

const std::vector<SporadicRow>& sporadic_pgl_rows() {
  static const std::vector<SporadicRow> rows{{{3, 8}, 11, 23}, {{3, 12}, 7, 13}, {{4, 6}, 7, 13}};
  return rows;
}

const std::vector<SporadicRow>& eliminated_psl_rows() {
  static const std::vector<SporadicRow> rows{
      {{4, 12}, 7, 13}, {{4, 12}, 5, 11}, {{3, 7}, 11, 43}, {{3, 8}, 23, 47}, {{3, 9}, 5, 19}, {{4, 6}, 11, 23},
  };
  return rows;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Constructed: return "constructed";
    case Status::Conditional: return "conditional";
    case Status::SearchConfirmed: return "search-confirmed";
    case Status::SearchRefuted: return "search-refuted";
  }
  return "unknown";
}

// ---------------------------------------------------------------- classify

namespace {

std::uint64_t u64(std::int64_t v) { return static_cast<std::uint64_t>(v); }

std::uint64_t projective_order(std::int64_t f, bool special) {
  const std::uint64_t full = u64(f) * (u64(f) * u64(f) - 1);
  return special ? full / 2 : full;
}

std::optional<std::int64_t> divide(std::int64_t num, std::int64_t den) {
  if (num <= 0 || num % den != 0) return std::nullopt;
  return num / den;
}

std::string type_text(const MapType& t) { return std::to_string(t.x) + "," + std::to_string(t.y); }

// A candidate settled by searching a projective group.
struct SearchCase {
  std::string tag;
  GroupSpec group;
  std::uint64_t order = 0;
  MapType type;  // declared; ordered for lifts
  bool ordered = false;
  // lift data; d = 0 when not a lift
  std::int64_t d = 0, f = 0;
  std::string params;
  bool report_only_hits = false;
  std::string hit_note;
};

class Classifier {
 public:
  Classifier(std::int64_t p, std::int64_t q, const ClassifyOptions& options) : p_(p), q_(q), options_(options) {
    report_.p = p;
    report_.q = q;
  }

  ClassifyReport run() {
    case_i();
    case_ii();
    case_iii();
    case_iv();
    case_v();
    case_vi();
    projective_rows();
    for (auto& c : searches_) settle(c);
    dedupe();
    close_under_duality();
    verify();
    return std::move(report_);
  }

  const std::vector<SearchCase>& searches() const { return searches_; }

 private:
  std::int64_t pq() const { return p_ * q_; }

  SearchOptions search_options() const {
    SearchOptions o;
    o.workers = options_.workers;
    o.conjugacy_reduction = options_.conjugacy_reduction;
    o.dickson_cap = options_.dickson_cap;
    o.compute_orientability = false;
    return o;
  }

  void add_map(const std::string& tag, const std::string& params, AlgebraicMap m, Status status,
               std::string note = {}) {
    MapDescriptor d;
    d.case_tag = tag;
    d.params = params;
    d.type = m.type();
    d.group_family = m.group().family();
    d.group_order = m.group().order();
    d.chi = m.chi();
    d.status = status;
    d.note = std::move(note);
    d.map = std::move(m);
    report_.descriptors.push_back(std::move(d));
  }

  void add_candidate(const std::string& tag, const std::string& params, MapType type, std::string family,
                     std::uint64_t order, Status status, std::string note) {
    MapDescriptor d;
    d.case_tag = tag;
    d.params = params;
    d.type = type;
    d.group_family = std::move(family);
    d.group_order = order;
    d.chi = -static_cast<std::int64_t>(order) *
            static_cast<std::int64_t>(type.x * type.y - 2 * type.x - 2 * type.y) /
            static_cast<std::int64_t>(4 * type.x * type.y);
    d.status = status;
    d.note = std::move(note);
    report_.descriptors.push_back(std::move(d));
  }

  // (j-1)(k-1) = pq + 1 with j <= k odd.
  void case_i() {
    const std::int64_t target = pq() + 1;
    for (std::int64_t a = 2; a * a <= target; a += 2) {
      if (target % a != 0 || (target / a) % 2 != 0) continue;
      const std::int64_t j = a + 1, k = target / a + 1;
      add_map("i", to_text(MapSpec{M1Params{j, k}}), build_m1(j, k, options_.enumeration_limit), Status::Constructed);
    }
  }

  void case_ii() {
    if (q_ - p_ != 2) return;
    add_map("ii", to_text(MapSpec{M2Params{0, 4, q_}}), build_m2(0, 4, q_, options_.enumeration_limit),
            Status::Constructed);
  }

  // p^k n - 2p^k - n = 2q, so n = 2(q + p^k) / (p^k - 1); n >= 4 needs p^k <= q + 2.
  void case_iii() {
    std::int64_t pk = p_;
    for (std::int64_t k = 1; pk <= q_ + 2; ++k, pk *= p_) {
      const std::int64_t num = 2 * (q_ + pk);
      if (num % (pk - 1) != 0) continue;
      const std::int64_t n = num / (pk - 1);
      if (n < 4 || n % 2 != 0) continue;
      for (std::uint32_t x : companion_trace_set(u64(n), static_cast<std::uint32_t>(p_)).members) {
        const std::int64_t xi = x;
        if (k == 1) {
          add_map("iii", to_text(MapSpec{M2Params{xi, n, p_}}), build_m2(xi, n, p_, options_.enumeration_limit),
                  Status::Constructed);
          continue;
        }
        const std::string base = to_text(MapSpec{M2Params{xi, n, p_}});
        const std::uint64_t cover = u64(pk / p_);
        add_candidate("iii", "cover:k=" + std::to_string(k) + ",x=" + std::to_string(x) + ",n=" + std::to_string(n) +
                                 ",p=" + std::to_string(p_),
                      {u64(2 * pk), u64(n)}, "cover of " + base + " by Z_" + std::to_string(cover),
                      u64(2 * n * p_ * p_) * cover, Status::Conditional,
                      "regular cover of " + base + " with cyclic transformation group of order " +
                          std::to_string(cover) + "; no construction is attempted");
      }
    }
  }

  void case_iv() {
    const std::int64_t u = pq() + 4;
    if (u % 6 != 3) return;
    add_map("iv", to_text(MapSpec{M3Params{u}}), build_m3(u, options_.enumeration_limit), Status::Constructed);
  }

  void case_v() {
    struct Sub {
      const char* tag;
      std::int64_t a_den, b_den, rhs_mult;  // A = (f-1)/a_den, B = (f+1)/b_den, mn-2m-2n = rhs_mult*q
    };
    const Sub subs[] = {{"v1", 2, 2, 2}, {"v2", 4, 2, 1}, {"v3", 2, 4, 1}};
    for (const Sub& s : subs) {
      // p = f, p = (f-1)/a_den or p = (f+1)/b_den
      const std::int64_t fields[] = {p_, s.a_den * p_ + 1, s.b_den * p_ - 1};
      std::set<std::int64_t> seen;
      for (std::int64_t f : fields) {
        if (f < 5 || !is_prime(u64(f)) || !seen.insert(f).second) continue;
        auto a = divide(f - 1, s.a_den);
        auto b = divide(f + 1, s.b_den);
        if (!a || !b) continue;
        std::vector<std::int64_t> slots{f, *a, *b};
        auto it = std::find(slots.begin(), slots.end(), p_);
        if (it == slots.end()) continue;
        slots.erase(it);
        const std::int64_t m = std::min(slots[0], slots[1]), n = std::max(slots[0], slots[1]);
        if (m * n - 2 * m - 2 * n != s.rhs_mult * q_) continue;
        add_search(s.tag, PslParams{f}, projective_order(f, true), {u64(m), u64(n)}, false, 0, f);
      }
    }
    for (const auto& row : sporadic_psl_rows())
      if (row.p == p_ && row.q == q_)
        add_search("v4", PslParams{q_}, projective_order(q_, true), row.type, false, 0, q_);
  }

  // Every PSL(2,f) or PGL(2,f), f in {p, q}, whose order is 4k pq for some k
  // of the k(x,y) table, searched for the matching types. This covers the
  // static rows and also catches rows they leave out; only hits are reported.
  void projective_rows() {
    auto listed = [&](const std::vector<SporadicRow>& rows, const MapType& type) {
      return std::any_of(rows.begin(), rows.end(),
                         [&](const SporadicRow& r) { return r.p == p_ && r.q == q_ && r.type == type; });
    };
    for (const bool special : {true, false})
      for (const std::int64_t f : {p_, q_}) {
        const std::uint64_t order = projective_order(f, special);
        if (order % u64(4 * pq()) != 0) continue;
        const auto k = static_cast<std::int64_t>(order / u64(4 * pq()));
        for (const KRow& row : table1()) {
          if (row.k != k) continue;
          const auto& rows = special ? sporadic_psl_rows() : sporadic_pgl_rows();
          if (f == q_ && listed(rows, row.type)) continue;
          const GroupSpec group = special ? GroupSpec{PslParams{f}} : GroupSpec{PglParams{f}};
          add_search(special ? "v4x" : "vi4x", group, order, row.type, false, 0, f);
          searches_.back().report_only_hits = true;
          searches_.back().hit_note = special && f == q_ && listed(eliminated_psl_rows(), row.type)
                                          ? "type and (p, q) listed as eliminated, yet the search finds this map"
                                          : "order 4k pq with k = k(x,y); row absent from the static tables";
        }
      }
  }

  void case_vi() {
    // (1) {p, m, n} = {f, f+1, (f-1)/2} or {f, f-1, (f+1)/2}; only f and the halves can equal an odd p.
    std::set<std::int64_t> fields;
    for (std::int64_t f : {p_, 2 * p_ + 1, 2 * p_ - 1})
      if (f >= 5 && is_prime(u64(f))) fields.insert(f);
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> done;
    for (std::int64_t f : fields) {
      const std::vector<std::vector<std::int64_t>> sets{{f, f + 1, (f - 1) / 2}, {f, f - 1, (f + 1) / 2}};
      for (auto slots : sets) {
        auto it = std::find(slots.begin(), slots.end(), p_);
        if (it == slots.end()) continue;
        slots.erase(it);
        for (int order = 0; order < 2; ++order) {
          const std::int64_t m = order ? slots[1] : slots[0];
          const std::int64_t n = order ? slots[0] : slots[1];
          if (m % p_ == 0 || m < 2 || n < 2) continue;
          const std::int64_t den = m * n - 2 * m;
          if (den <= 0 || (2 * q_ + 2 * n) % den != 0) continue;
          const std::int64_t d = (2 * q_ + 2 * n) / den;
          const std::uint64_t g = gcd(u64(d), u64(f) * (u64(f) * u64(f) - 1));
          if (g != 1 && g != u64(p_)) continue;
          if (gcd(u64(d), u64(m)) != 1) continue;
          if (d == 1) {
            // The group is PGL(2,f) itself; any map of the type qualifies.
            if (!done.insert({f, std::min(m, n), std::max(m, n)}).second) continue;
            add_search("vi1", PglParams{f}, projective_order(f, false), {u64(std::min(m, n)), u64(std::max(m, n))},
                       false, 0, f);
            continue;
          }
          if (!done.insert({f, m, n}).second) continue;
          add_search("vi1", ZdPglParams{d, f}, u64(d) * projective_order(f, false), {u64(d * m), u64(n)}, true, d, f);
          searches_.back().params = to_text(LiftParams{d, f, m, n});
          searches_.back().type = {u64(m), u64(n)};  // base type; the lift multiplies m by d
        }
      }
    }
    // (2) p^2 - 4p - 1 = 4q
    if (p_ * p_ - 4 * p_ - 1 == 4 * q_)
      add_search("vi2", PglParams{p_}, projective_order(p_, false), {u64(p_ - 1), u64(p_ + 1)}, false, 0, p_);
    // (3)
    if (p_ == 5 && q_ == 7) add_search("vi3", PglParams{7}, projective_order(7, false), {6, 8}, false, 0, 7);
    // (4)
    for (const auto& row : sporadic_pgl_rows())
      if (row.p == p_ && row.q == q_)
        add_search("vi4", PglParams{q_}, projective_order(q_, false), row.type, false, 0, q_);
  }

  void add_search(const std::string& tag, GroupSpec group, std::uint64_t order, MapType type, bool ordered,
                  std::int64_t d, std::int64_t f) {
    SearchCase c;
    c.tag = tag;
    c.group = group;
    c.order = order;
    c.type = type;
    c.ordered = ordered;
    c.d = d;
    c.f = f;
    c.params = to_text(group) + ";type=" + type_text(type);
    searches_.push_back(std::move(c));
  }

  void settle(const SearchCase& c) {
    if (c.d > 0) {
      settle_lift(c);
      return;
    }
    const MapType declared = c.type;
    if (c.order > options_.search_scale) {
      add_candidate(c.tag, c.params, declared, to_text(c.group), c.order, Status::Conditional,
                    "search skipped at this scale (|G| = " + std::to_string(c.order) + ")");
      return;
    }
    FiniteGroup g = build_group(c.group, options_.enumeration_limit);
    SearchOptions o = search_options();
    o.chi = -pq();
    o.type = declared;
    auto found = search_maps(g, o);
    if (found.maps.empty()) {
      if (c.report_only_hits) return;
      add_candidate(c.tag, c.params, declared, to_text(c.group), c.order, Status::SearchRefuted,
                    "exhaustive search found no map of this type");
      return;
    }
    for (const auto& fm : found.maps)
      add_map(c.tag, c.params, AlgebraicMap::validate(g, fm.triple, options_.dickson_cap), Status::SearchConfirmed,
              c.hit_note);
  }

  void settle_lift(const SearchCase& c) {
    const MapType base_type = c.type;
    const MapType lifted{u64(c.d) * base_type.x, base_type.y};
    const std::uint64_t base_order = projective_order(c.f, false);
    const std::string family = to_text(c.d == 1 ? GroupSpec{PglParams{c.f}} : GroupSpec{ZdPglParams{c.d, c.f}});
    if (base_order > options_.search_scale) {
      add_candidate(c.tag, c.params, lifted, family, c.order, Status::Conditional,
                    "base search skipped at this scale (|PGL(2,f)| = " + std::to_string(base_order) + ")");
      return;
    }
    FiniteGroup pgl = build_pgl2(c.f, options_.enumeration_limit);
    auto bases = lift_bases(c.f, static_cast<std::int64_t>(base_type.x), static_cast<std::int64_t>(base_type.y),
                            search_options(), options_.enumeration_limit);
    if (bases.maps.empty()) {
      add_candidate(c.tag, c.params, lifted, family, c.order, Status::SearchRefuted,
                    "PGL(2," + std::to_string(c.f) + ") has no base map of type (" + type_text(base_type) +
                        ") with r, t outside PSL and l inside");
      return;
    }
    const bool p_case = gcd(u64(c.d), base_order) == u64(p_);
    for (const auto& b : bases.maps) {
      AlgebraicMap base = AlgebraicMap::validate(pgl, b.triple, options_.dickson_cap);
      if (c.d == 1) {
        add_map(c.tag, c.params, std::move(base), Status::SearchConfirmed);
        continue;
      }
      std::string note = "lift of a base map on PGL(2," + std::to_string(c.f) + ")";
      if (p_case) note += "; gcd(d, |PGL(2,f)|) = p, existence shown by the explicit lift";
      add_map(c.tag, c.params, lift_map(c.d, base), Status::Constructed, note);
    }
  }

  static bool isomorphic(const AlgebraicMap& a, const AlgebraicMap& b) {
    return triple_isomorphic(a.group(), a.triple(), b.group(), b.triple());
  }

  static bool isomorphic_to_dual(const AlgebraicMap& a, const AlgebraicMap& b) {
    const Triple dual{b.r(), b.l(), b.t()};
    return triple_isomorphic(a.group(), a.triple(), b.group(), dual);
  }

  void dedupe() {
    std::vector<MapDescriptor> kept;
    for (auto& d : report_.descriptors) {
      bool duplicate = false;
      if (d.map) {
        for (auto& k : kept) {
          if (!k.map || k.group_order != d.group_order || !k.type.same_set(d.type)) continue;
          if (isomorphic(*k.map, *d.map) || isomorphic_to_dual(*k.map, *d.map)) {
            duplicate = true;
            if (!k.note.empty()) k.note += "; ";
            k.note += "also arises as case " + d.case_tag + " (" + d.params + ")";
            break;
          }
        }
      }
      if (!duplicate) kept.push_back(std::move(d));
    }
    report_.descriptors = std::move(kept);
  }

  void close_under_duality() {
    const std::size_t primary = report_.descriptors.size();
    for (std::size_t i = 0; i < primary; ++i) {
      MapDescriptor& d = report_.descriptors[i];
      if (d.map) {
        AlgebraicMap dual_map = dual(*d.map);
        if (isomorphic(*d.map, dual_map)) {
          d.self_dual = true;
          d.dual_of = i;
          continue;
        }
        MapDescriptor e = d;
        e.params = d.params + ";dual";
        e.type = dual_map.type();
        e.map = std::move(dual_map);
        e.dual_of = i;
        e.note.clear();
        report_.descriptors[i].dual_of = report_.descriptors.size();
        report_.descriptors.push_back(std::move(e));
      } else if (d.status == Status::Conditional && d.case_tag == "iii") {
        MapDescriptor e = d;
        e.params = d.params + ";dual";
        e.type = d.type.reversed();
        e.dual_of = i;
        report_.descriptors[i].dual_of = report_.descriptors.size();
        report_.descriptors.push_back(std::move(e));
      }
    }
  }

  void verify() {
    const std::int64_t hurwitz = 84 * pq();
    for (auto& d : report_.descriptors) {
      if (d.chi != -pq())
        throw InternalError("descriptor " + d.case_tag + " (" + d.params + ") has chi " + std::to_string(d.chi));
      if (static_cast<std::int64_t>(d.group_order) > hurwitz)
        throw InternalError("descriptor " + d.case_tag + " exceeds the Hurwitz bound");
      if (!d.map) continue;
      if (d.map->chi() != -pq()) throw InternalError("constructed map has chi " + std::to_string(d.map->chi()));
      if (d.group_order <= options_.enumeration_limit) {
        d.orientable = orientability(*d.map);
        d.chi_by_orbits = euler_characteristic_by_orbits(*d.map);
        if (*d.chi_by_orbits != d.chi) throw InternalError("orbit count disagrees with the formula");
        const bool family_case = d.case_tag == "i" || d.case_tag == "ii" || d.case_tag == "iii" || d.case_tag == "iv";
        if (family_case && *d.orientable) throw InternalError("family map " + d.params + " is orientable");
      }
    }
  }

  std::int64_t p_, q_;
  ClassifyOptions options_;
  ClassifyReport report_;
  std::vector<SearchCase> searches_;
};

void require_pq(std::int64_t p, std::int64_t q) {
  if (p < 5 || q <= p) throw InvalidArgument("need primes q > p >= 5, got p = " + std::to_string(p) + ", q = " + std::to_string(q));
  if (!is_prime(u64(p))) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (!is_prime(u64(q))) throw InvalidArgument("q = " + std::to_string(q) + " is not prime");
}

}  // namespace

SearchResult lift_bases(std::int64_t f, std::int64_t m, std::int64_t n, SearchOptions options,
                        std::uint64_t enumeration_limit) {
  if (m < 2 || n < 2) throw InvalidArgument("lift base type entries must be at least 2");
  FiniteGroup pgl = build_pgl2(f, enumeration_limit);
  options.type.reset();
  options.ordered_type = MapType{u64(m), u64(n)};
  options.dedupe_duals = false;
  options.predicate = [](const FiniteGroup& g, const Triple& t) {
    return !g.in_psl(t.r) && !g.in_psl(t.t) && g.in_psl(t.l);
  };
  return search_maps(pgl, options);
}

std::optional<AlgebraicMap> construct_lift(const LiftParams& params, const SearchOptions& options,
                                           std::uint64_t enumeration_limit) {
  if (params.d < 1) throw InvalidArgument("d must be positive");
  if (gcd(u64(params.d), u64(params.m)) != 1) throw InvalidArgument("gcd(d, m) must be 1");
  SearchOptions o = options;
  o.compute_orientability = false;
  auto bases = lift_bases(params.f, params.m, params.n, o, enumeration_limit);
  if (bases.maps.empty()) return std::nullopt;
  FiniteGroup pgl = build_pgl2(params.f, enumeration_limit);
  AlgebraicMap base = AlgebraicMap::validate(pgl, bases.maps.front().triple, options.dickson_cap);
  if (params.d == 1) return base;
  return lift_map(params.d, base);
}

ClassifyReport enumerate_cases(std::int64_t p, std::int64_t q, const ClassifyOptions& options) {
  require_pq(p, q);
  return Classifier(p, q, options).run();
}

std::vector<SporadicCheck> verify_sporadic_tables(const ClassifyOptions& options) {
  std::vector<SporadicCheck> out;
  auto check = [&](const char* table, const SporadicRow& row, std::int64_t factor, bool special) {
    SporadicCheck c;
    c.table = table;
    c.row = row;
    c.k = k_value(static_cast<std::int64_t>(row.type.x), static_cast<std::int64_t>(row.type.y))->num;
    c.arithmetic_ok = row.q * row.q - 1 == factor * c.k * row.p;
    if (projective_order(row.q, special) <= options.search_scale) {
      FiniteGroup g = special ? build_psl2(row.q, options.enumeration_limit) : build_pgl2(row.q, options.enumeration_limit);
      SearchOptions o;
      o.chi = -row.p * row.q;
      o.type = row.type;
      o.workers = options.workers;
      o.conjugacy_reduction = options.conjugacy_reduction;
      o.dickson_cap = options.dickson_cap;
      o.compute_orientability = false;
      c.maps_found = search_maps(g, o).maps.size();
    }
    out.push_back(c);
  };
  for (const auto& row : sporadic_psl_rows()) check("psl", row, 8, true);
  for (const auto& row : sporadic_pgl_rows()) check("pgl", row, 4, false);
  for (const auto& row : eliminated_psl_rows()) check("eliminated", row, 8, true);
  return out;
}

std::vector<ContainmentGroup> containment_check(std::int64_t p, std::int64_t q, const ClassifyOptions& options) {
  const ClassifyReport report = enumerate_cases(p, q, options);
  std::map<std::string, std::pair<std::optional<FiniteGroup>, std::uint64_t>> groups;
  for (const auto& d : report.descriptors) {
    if (d.map) {
      groups.try_emplace(d.map->group().family(), d.map->group(), d.group_order);
    } else if (d.status != Status::Conditional || d.case_tag != "iii") {
      // search-based candidates name their group by its spec
      groups.try_emplace(d.group_family, std::nullopt, d.group_order);
    }
  }

  // PSL(2,f) and PGL(2,f) for f in {p, q} are searched even when no case names them.
  for (std::int64_t f : {p, q}) {
    groups.try_emplace(to_text(GroupSpec{PslParams{f}}), std::nullopt, projective_order(f, true));
    groups.try_emplace(to_text(GroupSpec{PglParams{f}}), std::nullopt, projective_order(f, false));
  }

  std::vector<ContainmentGroup> out;
  for (auto& [family, entry] : groups) {
    ContainmentGroup cg;
    cg.family = family;
    cg.order = entry.second;
    if (cg.order > options.search_scale) {
      out.push_back(cg);
      continue;
    }
    FiniteGroup g = entry.first ? *entry.first : build_group(parse_group_spec(family), options.enumeration_limit);
    SearchOptions o;
    o.chi = -p * q;
    o.dedupe_duals = false;
    o.workers = options.workers;
    o.conjugacy_reduction = options.conjugacy_reduction;
    o.dickson_cap = options.dickson_cap;
    o.compute_orientability = false;
    const auto found = search_maps(g, o);
    cg.searched = true;
    cg.maps_found = found.maps.size();
    for (const auto& fm : found.maps) {
      const bool matched = std::any_of(report.descriptors.begin(), report.descriptors.end(), [&](const MapDescriptor& d) {
        return d.map && d.group_order == g.order() && d.type == fm.type &&
               triple_isomorphic(d.map->group(), d.map->triple(), g, fm.triple);
      });
      if (!matched) ++cg.unmatched;
    }
    out.push_back(cg);
  }
  return out;
}

}  // namespace regmap
