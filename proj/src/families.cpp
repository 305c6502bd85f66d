#include "regmap/families.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "regmap/errors.hpp"
#include "regmap/fields.hpp"
#include "regmap/group_algorithms.hpp"

namespace regmap {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string str(std::int64_t v) { return std::to_string(v); }

void require_odd_at_least(std::int64_t v, std::int64_t lo, const char* name) {
  if (v < lo || v % 2 == 0) throw InvalidArgument(std::string(name) + " must be odd and >= " + str(lo) + ", got " + str(v));
}

void require_range(std::int64_t v, std::int64_t lo, const char* name) {
  if (v < lo || v > (1ll << 30)) throw InvalidArgument(std::string(name) + " out of range: " + str(v));
}

std::uint32_t u32(std::int64_t v) { return static_cast<std::uint32_t>(v); }

ModMatrix mod_matrix(std::uint32_t m, std::array<std::int64_t, 4> e) {
  ModMatrix out{2, m, {}};
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = ((e[i] % m) + m) % m;
  return out;
}

// ------------------------------------------------------------- spec parser

struct Item {
  std::string_view key;  // empty when positional
  std::int64_t value = 0;
  std::size_t column = 0;
  std::size_t length = 0;
};

struct RawSpec {
  std::string_view tag;
  std::vector<Item> items;
  std::size_t params_column = 0;
};

std::int64_t parse_int(std::string_view s, std::size_t column) {
  std::int64_t v = 0;
  if (s.empty()) throw ParseError("expected an integer", column, 1);
  const char* begin = s.data();
  if (*begin == '+') throw ParseError("unexpected '+'", column, 1);
  auto [ptr, ec] = std::from_chars(begin, begin + s.size(), v);
  if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", column, s.size());
  if (ec != std::errc() || ptr != begin + s.size())
    throw ParseError("invalid integer '" + std::string(s) + "'", column, s.size());
  return v;
}

std::vector<Item> parse_items(std::string_view params, std::size_t offset) {
  std::vector<Item> items;
  if (params.empty()) throw ParseError("missing parameters", offset, 1);
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(params.find(',', pos), params.size());
    const std::string_view token = params.substr(pos, end - pos);
    const std::size_t column = offset + pos;
    if (token.empty()) throw ParseError("empty parameter", column, 1);
    Item item;
    item.column = column;
    item.length = token.size();
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      item.value = parse_int(token, column);
    } else {
      item.key = token.substr(0, eq);
      if (item.key.empty()) throw ParseError("missing parameter name", column, 1);
      for (std::size_t i = 0; i < item.key.size(); ++i)
        if (!(item.key[i] >= 'a' && item.key[i] <= 'z')) throw ParseError("invalid parameter name", column + i, 1);
      item.value = parse_int(token.substr(eq + 1), column + eq + 1);
    }
    items.push_back(item);
    if (end == params.size()) break;
    pos = end + 1;
  }
  return items;
}

RawSpec split_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'family:parameters'", 0, text.size() ? text.size() : 1);
  if (colon == 0) throw ParseError("missing family name", 0, 1);
  return {text.substr(0, colon), parse_items(text.substr(colon + 1), colon + 1), colon + 1};
}

// Values in the order of `keys`; all keys positional or all named, each once.
std::vector<std::int64_t> bind(const std::vector<Item>& items, std::initializer_list<std::string_view> keys,
                               std::string_view tag, std::size_t params_column) {
  const std::vector<std::string_view> names(keys);
  std::vector<std::int64_t> values(names.size());
  std::vector<bool> set(names.size(), false);
  const bool positional = !items.empty() && items.front().key.empty();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    if (it.key.empty() != positional)
      throw ParseError("cannot mix named and positional parameters", it.column, it.length);
    std::size_t slot = i;
    if (positional) {
      if (i >= names.size())
        throw ParseError(std::string(tag) + " takes " + str(static_cast<std::int64_t>(names.size())) + " parameters",
                         it.column, it.length);
    } else {
      auto found = std::find(names.begin(), names.end(), it.key);
      if (found == names.end())
        throw ParseError("unknown parameter '" + std::string(it.key) + "' for " + std::string(tag), it.column,
                         it.key.size());
      slot = static_cast<std::size_t>(found - names.begin());
      if (set[slot]) throw ParseError("duplicate parameter '" + std::string(it.key) + "'", it.column, it.key.size());
    }
    values[slot] = it.value;
    set[slot] = true;
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!set[i]) {
      const std::size_t end = items.empty() ? params_column : items.back().column + items.back().length;
      throw ParseError("missing parameter '" + std::string(names[i]) + "' for " + std::string(tag), end, 1);
    }
  return values;
}

GroupSpec group_from(std::string_view tag, const std::vector<Item>& items, std::size_t column) {
  if (tag == "g1") {
    auto v = bind(items, {"j", "k"}, tag, column);
    return G1Params{v[0], v[1]};
  }
  if (tag == "g2") {
    auto v = bind(items, {"x", "n", "p"}, tag, column);
    return G2Params{v[0], v[1], v[2]};
  }
  if (tag == "g3") return G3Params{bind(items, {"u"}, tag, column)[0]};
  if (tag == "psl") return PslParams{bind(items, {"f"}, tag, column)[0]};
  if (tag == "pgl") return PglParams{bind(items, {"f"}, tag, column)[0]};
  if (tag == "zdpgl") {
    auto v = bind(items, {"d", "f"}, tag, column);
    return ZdPglParams{v[0], v[1]};
  }
  if (tag == "dihedral") return DihedralParams{bind(items, {"n"}, tag, column)[0]};
  if (tag == "cyclic") return CyclicParams{bind(items, {"n"}, tag, column)[0]};
  throw ParseError("unknown group family '" + std::string(tag) + "'", 0, tag.size());
}

MapSpec map_from(std::string_view tag, const std::vector<Item>& items, std::size_t column, std::size_t tag_column) {
  if (tag == "m1") {
    auto v = bind(items, {"j", "k"}, tag, column);
    return M1Params{v[0], v[1]};
  }
  if (tag == "m2") {
    auto v = bind(items, {"x", "n", "p"}, tag, column);
    return M2Params{v[0], v[1], v[2]};
  }
  if (tag == "m3") return M3Params{bind(items, {"u"}, tag, column)[0]};
  throw ParseError("unknown map family '" + std::string(tag) + "'", tag_column, tag.size());
}

}  // namespace

// ------------------------------------------------------------ text forms

GroupSpec parse_group_spec(std::string_view text) {
  auto raw = split_spec(text);
  return group_from(raw.tag, raw.items, raw.params_column);
}

MapSpec parse_map_spec(std::string_view text) {
  auto raw = split_spec(text);
  return map_from(raw.tag, raw.items, raw.params_column, 0);
}

MapSpec parse_map_params(std::string_view tag, std::string_view params) {
  return map_from(tag, parse_items(params, 0), 0, 0);
}

LiftParams parse_lift_params(std::string_view params) {
  auto v = bind(parse_items(params, 0), {"d", "f", "m", "n"}, "lift", 0);
  return {v[0], v[1], v[2], v[3]};
}

std::string to_text(const LiftParams& spec) {
  return "lift:d=" + str(spec.d) + ",f=" + str(spec.f) + ",m=" + str(spec.m) + ",n=" + str(spec.n);
}

std::string to_text(const GroupSpec& spec) {
  return std::visit(Overloaded{
                        [](const G1Params& g) { return "g1:j=" + str(g.j) + ",k=" + str(g.k); },
                        [](const G2Params& g) { return "g2:x=" + str(g.x) + ",n=" + str(g.n) + ",p=" + str(g.p); },
                        [](const G3Params& g) { return "g3:u=" + str(g.u); },
                        [](const PslParams& g) { return "psl:f=" + str(g.f); },
                        [](const PglParams& g) { return "pgl:f=" + str(g.f); },
                        [](const ZdPglParams& g) { return "zdpgl:d=" + str(g.d) + ",f=" + str(g.f); },
                        [](const DihedralParams& g) { return "dihedral:n=" + str(g.n); },
                        [](const CyclicParams& g) { return "cyclic:n=" + str(g.n); },
                    },
                    spec);
}

std::string to_text(const MapSpec& spec) {
  return std::visit(Overloaded{
                        [](const M1Params& m) { return "m1:j=" + str(m.j) + ",k=" + str(m.k); },
                        [](const M2Params& m) { return "m2:x=" + str(m.x) + ",n=" + str(m.n) + ",p=" + str(m.p); },
                        [](const M3Params& m) { return "m3:u=" + str(m.u); },
                    },
                    spec);
}

FiniteGroup build_group(const GroupSpec& spec, std::uint64_t limit) {
  return std::visit(Overloaded{
                        [&](const G1Params& g) { return build_g1(g.j, g.k, limit); },
                        [&](const G2Params& g) { return build_g2(g.x, g.n, g.p, limit); },
                        [&](const G3Params& g) { return build_g3(g.u, limit); },
                        [&](const PslParams& g) { return build_psl2(g.f, limit); },
                        [&](const PglParams& g) { return build_pgl2(g.f, limit); },
                        [&](const ZdPglParams& g) { return build_zd_pgl2(g.d, g.f, limit); },
                        [&](const DihedralParams& g) { return build_dihedral(g.n, limit); },
                        [&](const CyclicParams& g) { return build_cyclic(g.n, limit); },
                    },
                    spec);
}

AlgebraicMap build_map(const MapSpec& spec, std::uint64_t limit) {
  return std::visit(Overloaded{
                        [&](const M1Params& m) { return build_m1(m.j, m.k, limit); },
                        [&](const M2Params& m) { return build_m2(m.x, m.n, m.p, limit); },
                        [&](const M3Params& m) { return build_m3(m.u, limit); },
                    },
                    spec);
}

// -------------------------------------------------------------------- G1

FiniteGroup build_g1(std::int64_t j, std::int64_t k, std::uint64_t limit) {
  require_odd_at_least(j, 3, "j");
  require_odd_at_least(k, 3, "k");
  require_range(j, 3, "j");
  require_range(k, 3, "k");
  auto model = std::make_shared<ProductModel>(std::make_shared<DihedralModel>(u32(j)),
                                              std::make_shared<DihedralModel>(u32(k)));
  const std::int32_t jj = static_cast<std::int32_t>(j), kk = static_cast<std::int32_t>(k);
  std::vector<NamedElement> gens{
      {"a", Element(Family::Product, std::array<std::int32_t, 4>{1, 0, 0, 0})},
      {"b", Element(Family::Product, std::array<std::int32_t, 4>{1, jj - 1, 0, 0})},
      {"c", Element(Family::Product, std::array<std::int32_t, 4>{0, 0, 1, 0})},
      {"d", Element(Family::Product, std::array<std::int32_t, 4>{0, 0, 1, kk - 1})},
  };
  return FiniteGroup(model, to_text(G1Params{j, k}), std::move(gens), limit);
}

AlgebraicMap build_m1(std::int64_t j, std::int64_t k, std::uint64_t limit) {
  FiniteGroup g = build_g1(j, k, limit);
  const Element& a = g.generator("a");
  const Element& b = g.generator("b");
  const Element& c = g.generator("c");
  const Element& d = g.generator("d");
  return AlgebraicMap::validate(g, {g.multiply(b, c), a, d});
}

// -------------------------------------------------------------------- G2

FiniteGroup build_g2(std::int64_t x, std::int64_t n, std::int64_t p, std::uint64_t limit) {
  require_odd_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0)), "p");
  if (n < 4 || n % 2 != 0) throw InvalidArgument("n must be even and >= 4, got " + str(n));
  require_range(n, 4, "n");
  if (x < 0 || x >= p) throw InvalidArgument("x must be a residue modulo p, got " + str(x));
  if (!companion_trace_set(static_cast<std::uint64_t>(n), u32(p)).contains(u32(x)))
    throw InvalidArgument("x = " + str(x) + " is not in S(" + str(n) + "," + str(p) + ")");
  const std::uint32_t m = u32(p);
  // Columns are the images of a and b; conjugation by cd acts as M(x) up to similarity.
  auto action = std::make_shared<DihedralLinearAction>("phi_x=" + str(x), u32(n), mod_matrix(m, {-1, x, 0, 1}),
                                                       mod_matrix(m, {0, 1, 1, 0}));
  auto model = std::make_shared<SemidirectModel>(std::make_shared<DihedralModel>(u32(n)), action);
  const std::int32_t nn = static_cast<std::int32_t>(n);
  std::vector<NamedElement> gens{
      {"a", Element(Family::Semidirect, std::array<std::int32_t, 4>{1, 0, 0, 0})},
      {"b", Element(Family::Semidirect, std::array<std::int32_t, 4>{0, 1, 0, 0})},
      {"c", Element(Family::Semidirect, std::array<std::int32_t, 4>{0, 0, 1, 0})},
      {"d", Element(Family::Semidirect, std::array<std::int32_t, 4>{0, 0, 1, nn - 1})},
  };
  return FiniteGroup(model, to_text(G2Params{x, n, p}), std::move(gens), limit);
}

AlgebraicMap build_m2(std::int64_t x, std::int64_t n, std::int64_t p, std::uint64_t limit) {
  FiniteGroup g = build_g2(x, n, p, limit);
  const Element& a = g.generator("a");
  const Element& b = g.generator("b");
  const Element& c = g.generator("c");
  const Element& d = g.generator("d");
  const Element t = g.multiply(g.multiply(a, b), g.power(g.multiply(c, d), n / 2));
  return AlgebraicMap::validate(g, {c, t, d});
}

// -------------------------------------------------------------------- G3

FiniteGroup build_g3(std::int64_t u, std::uint64_t limit) {
  if (u < 3 || u % 6 != 3) throw InvalidArgument("u must be 3 mod 6, got " + str(u));
  require_range(u, 3, "u");
  auto action = std::make_shared<DihedralLinearAction>("psi", u32(u), mod_matrix(2, {0, 1, 1, 0}),
                                                       mod_matrix(2, {1, 1, 0, 1}));
  auto model = std::make_shared<SemidirectModel>(std::make_shared<DihedralModel>(u32(u)), action);
  const std::int32_t uu = static_cast<std::int32_t>(u);
  std::vector<NamedElement> gens{
      {"a", Element(Family::Semidirect, std::array<std::int32_t, 4>{1, 0, 0, 0})},
      {"b", Element(Family::Semidirect, std::array<std::int32_t, 4>{0, 1, 0, 0})},
      {"c", Element(Family::Semidirect, std::array<std::int32_t, 4>{0, 0, 1, 0})},
      {"d", Element(Family::Semidirect, std::array<std::int32_t, 4>{0, 0, 1, uu - 1})},
  };
  return FiniteGroup(model, to_text(G3Params{u}), std::move(gens), limit);
}

AlgebraicMap build_m3(std::int64_t u, std::uint64_t limit) {
  FiniteGroup g = build_g3(u, limit);
  const Element& a = g.generator("a");
  const Element& c = g.generator("c");
  const Element& d = g.generator("d");
  return AlgebraicMap::validate(g, {c, d, a});
}

// ------------------------------------------------------------ projective

namespace {

void require_field(std::int64_t f) {
  if (f < 5) throw InvalidArgument("f must be an odd prime >= 5, got " + str(f));
  require_range(f, 5, "f");
  require_odd_prime(static_cast<std::uint64_t>(f), "f");
}

std::vector<NamedElement> projective_generators(const ProjectiveModel& model, bool with_outer) {
  auto make = [&](std::array<std::int64_t, 4> m) {
    const auto w = model.normalize(m);
    return Element(Family::Projective, w);
  };
  std::vector<NamedElement> gens{{"x", make({1, 1, 0, 1})}, {"y", make({0, 1, -1, 0})}};
  if (with_outer) gens.push_back({"z", make({smallest_nonresidue(model.field()), 0, 0, 1})});
  return gens;
}

}  // namespace

FiniteGroup build_psl2(std::int64_t f, std::uint64_t limit) {
  require_field(f);
  auto model = std::make_shared<ProjectiveModel>(u32(f), true);
  auto gens = projective_generators(*model, false);
  return FiniteGroup(model, to_text(PslParams{f}), std::move(gens), limit);
}

FiniteGroup build_pgl2(std::int64_t f, std::uint64_t limit) {
  require_field(f);
  auto model = std::make_shared<ProjectiveModel>(u32(f), false);
  auto gens = projective_generators(*model, true);
  return FiniteGroup(model, to_text(PglParams{f}), std::move(gens), limit);
}

FiniteGroup build_zd_pgl2(std::int64_t d, std::int64_t f, std::uint64_t limit) {
  require_field(f);
  require_range(d, 1, "d");
  auto pgl = std::make_shared<ProjectiveModel>(u32(f), false);
  auto model = std::make_shared<SemidirectModel>(pgl, std::make_shared<InvertOutsidePslAction>(u32(d), u32(f)));
  std::vector<NamedElement> gens{{"alpha", Element(Family::Semidirect, std::array<std::int32_t, 5>{1 % static_cast<std::int32_t>(d), 1, 0, 0, 1})}};
  for (auto& g : projective_generators(*pgl, true)) {
    std::array<std::int32_t, 5> w{0, g.element[0], g.element[1], g.element[2], g.element[3]};
    gens.push_back({g.name, Element(Family::Semidirect, w)});
  }
  return FiniteGroup(model, to_text(ZdPglParams{d, f}), std::move(gens), limit);
}

FiniteGroup build_dihedral(std::int64_t n, std::uint64_t limit) {
  require_range(n, 1, "n");
  auto model = std::make_shared<DihedralModel>(u32(n));
  std::vector<NamedElement> gens{{"c", Element(Family::Dihedral, std::array<std::int32_t, 2>{1, 0})},
                                 {"d", Element(Family::Dihedral, std::array<std::int32_t, 2>{1, static_cast<std::int32_t>(n - 1)})}};
  return FiniteGroup(model, to_text(DihedralParams{n}), std::move(gens), limit);
}

FiniteGroup build_cyclic(std::int64_t n, std::uint64_t limit) {
  require_range(n, 1, "n");
  auto model = std::make_shared<CyclicModel>(u32(n));
  std::vector<NamedElement> gens{{"a", Element(Family::Cyclic, std::array<std::int32_t, 1>{1 % static_cast<std::int32_t>(n)})}};
  return FiniteGroup(model, to_text(CyclicParams{n}), std::move(gens), limit);
}

// ------------------------------------------------------------------ lift

Element embed_in_lift(const FiniteGroup& lifted, const Element& x) {
  if (x.family() != Family::Projective) throw FamilyMismatch("expected a PGL(2,f) element");
  return lifted.make({0, x[0], x[1], x[2], x[3]});
}

AlgebraicMap lift_map(std::int64_t d, const AlgebraicMap& base, std::int64_t alpha_power) {
  const FiniteGroup& pgl = base.group();
  const auto f = pgl.projective_field();
  if (!f || pgl.projective_special()) throw InvalidArgument("lift_map needs a map on PGL(2,f)");
  if (d < 1) throw InvalidArgument("d must be positive, got " + str(d));
  const auto [x, y, z] = base.triple();
  if (pgl.in_psl(x) || pgl.in_psl(y) || !pgl.in_psl(z))
    throw InvalidArgument("lift needs r and t outside PSL(2,f) and l inside it");
  const std::uint64_t m = base.type().x;
  if (gcd(static_cast<std::uint64_t>(d), m) != 1)
    throw InvalidArgument("gcd(d, |rt|) = gcd(" + str(d) + ", " + std::to_string(m) + ") must be 1");
  const std::int64_t e = ((alpha_power % d) + d) % d;
  if (gcd(static_cast<std::uint64_t>(e == 0 ? d : e), static_cast<std::uint64_t>(d)) != 1)
    throw InvalidArgument("alpha power must be coprime to d");

  FiniteGroup g = build_zd_pgl2(d, *f, pgl.enumeration_limit());
  const Element alpha_e = g.power(g.generator("alpha"), e);
  const Element r = g.multiply(alpha_e, embed_in_lift(g, x));
  return AlgebraicMap::validate(g, {r, embed_in_lift(g, y), embed_in_lift(g, z)});
}

}  // namespace regmap
