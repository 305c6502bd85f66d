#include "regmap/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "regmap/classify.hpp"
#include "regmap/errors.hpp"
#include "regmap/families.hpp"
#include "regmap/fields.hpp"
#include "regmap/group_algorithms.hpp"
#include "regmap/report.hpp"

namespace regmap::cli {

namespace {

using report::Json;

struct Config {
  std::uint64_t max_order = kDefaultEnumerationLimit;
  unsigned workers = 1;
  std::string format = "text";
  bool no_reduction = false;
  bool no_dickson = false;
};

unsigned default_workers() {
  if (const char* env = std::getenv("REGMAP_WORKERS")) {
    unsigned v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
      throw InvalidArgument("REGMAP_WORKERS must be a positive integer, got '" + std::string(s) + "'");
    return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// The text being parsed when a ParseError escapes, for the caret display.
struct ParseContext {
  std::string text;
};

template <typename F>
auto parse_with(ParseContext& ctx, std::string text, F&& parse) {
  ctx.text = std::move(text);
  auto result = parse(std::string_view(ctx.text));
  ctx.text.clear();
  return result;
}

MapType parse_type(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected X,Y", 0, text.empty() ? 1 : text.size());
  auto number = [&](std::string_view s, std::size_t column) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError("invalid type entry '" + std::string(s) + "'", column, s.empty() ? 1 : s.size());
    return v;
  };
  return {number(text.substr(0, comma), 0), number(text.substr(comma + 1), comma + 1)};
}

SearchOptions search_options(const Config& cfg) {
  SearchOptions o;
  o.workers = cfg.workers;
  o.conjugacy_reduction = !cfg.no_reduction;
  o.dickson_cap = !cfg.no_dickson;
  return o;
}

ClassifyOptions classify_options(const Config& cfg, std::uint64_t scale) {
  ClassifyOptions o;
  o.search_scale = scale;
  o.workers = cfg.workers;
  o.conjugacy_reduction = !cfg.no_reduction;
  o.dickson_cap = !cfg.no_dickson;
  o.enumeration_limit = cfg.max_order;
  return o;
}

void emit(std::ostream& out, const Config& cfg, const Json& j, const std::string& text) {
  if (cfg.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

Json verify_record(const AlgebraicMap& m, bool use_dickson) {
  Json v;
  AlgebraicMap checked = AlgebraicMap::validate(m.group(), m.triple(), use_dickson);
  v["validated"] = true;
  v["warnings"] = checked.warnings();
  const auto orbits = orbit_counts(checked);
  v["vertices"] = orbits.vertices;
  v["edges"] = orbits.edges;
  v["faces"] = orbits.faces;
  v["chi_by_orbits"] = orbits.chi();
  if (orbits.chi() != checked.chi()) throw InternalError("orbit count disagrees with the formula");
  v["even_word_index"] = even_word_index(checked);
  const AlgebraicMap d = dual(checked);
  v["dual_type"] = Json::array({d.type().x, d.type().y});
  v["dual_chi"] = d.chi();
  if (d.chi() != checked.chi() || d.type() != checked.type().reversed())
    throw InternalError("dual does not swap the type");
  v["self_dual"] = triple_isomorphic(checked.group(), checked.triple(), d.group(), d.triple());
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular maps with Euler characteristic -pq: construction, search and classification", "regmap"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::optional<unsigned> workers;
  app.add_option("--max-order", cfg.max_order, "Largest group order that may be enumerated")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", workers, "Search threads (default: REGMAP_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-reduction", cfg.no_reduction, "Visit every commuting pair instead of one per orbit");
  app.add_flag("--no-dickson", cfg.no_dickson, "Generation tests by full closure only");

  std::int64_t p = 5, q = 7;
  std::uint64_t scale = ClassifyOptions{}.search_scale;

  auto* tables = app.add_subcommand("tables", "k(x,y) table, group orders, PSL/PGL sporadic rows");
  tables->add_option("--p", p, "p for the group order table");
  tables->add_option("--q", q, "q for the group order table");
  tables->add_option("--scale", scale, "Largest group searched for the sporadic rows");

  auto* classify = app.add_subcommand("classify", "All maps with chi = -pq");
  classify->add_option("--p", p)->required();
  classify->add_option("--q", q)->required();
  classify->add_option("--scale", scale, "Largest group searched; larger cases stay conditional");

  std::string kind, params;
  bool verify = false;
  auto* construct = app.add_subcommand("construct", "Build m1, m2, m3 or a lift from parameters");
  construct->add_option("kind", kind)->required()->check(CLI::IsMember({"m1", "m2", "m3", "lift"}));
  construct->add_option("params", params, "e.g. 3,19 or x=1,n=6,p=5 or d=5,f=7,m=3,n=8")->required();
  construct->add_flag("--verify", verify, "Recheck every invariant");

  std::int64_t n = 0, m = 0;
  auto* snp = app.add_subcommand("snp", "Traces x whose companion matrix has order dividing n but not n/2");
  snp->add_option("--n", n)->required();
  snp->add_option("--p", p)->required();

  auto* admissible = app.add_subcommand("admissible", "p-admissibility of {m, n}");
  admissible->add_option("--m", m)->required();
  admissible->add_option("--n", n)->required();
  admissible->add_option("--p", p)->required();

  std::string group_spec, type_text;
  std::optional<std::int64_t> chi;
  auto* search = app.add_subcommand("search", "Exhaustive map search in one group");
  search->add_option("--group", group_spec, "e.g. psl:f=11, pgl:f=7, g2:x=1,n=6,p=5")->required();
  search->add_option("--chi", chi);
  search->add_option("--type", type_text, "Unordered type X,Y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  ParseContext ctx;
  try {
    cfg.workers = workers ? *workers : default_workers();

    if (tables->parsed()) {
      const auto checks = verify_sporadic_tables(classify_options(cfg, scale));
      const Json j = report::tables_json(p, q, checks);
      emit(out, cfg, j, report::tables_text(j));
    } else if (classify->parsed()) {
      const Json j = report::classify_json(enumerate_cases(p, q, classify_options(cfg, scale)));
      emit(out, cfg, j, report::classify_text(j));
    } else if (construct->parsed()) {
      std::optional<AlgebraicMap> map;
      std::string label;
      if (kind == "lift") {
        const LiftParams lift = parse_with(ctx, params, [](std::string_view s) { return parse_lift_params(s); });
        label = to_text(lift);
        map = construct_lift(lift, search_options(cfg), cfg.max_order);
        if (!map)
          throw InvalidArgument("PGL(2," + std::to_string(lift.f) + ") has no base map of type (" +
                                std::to_string(lift.m) + "," + std::to_string(lift.n) +
                                ") with r, t outside PSL and l inside");
      } else {
        const MapSpec spec = parse_with(ctx, params, [&](std::string_view s) { return parse_map_params(kind, s); });
        label = to_text(spec);
        map = build_map(spec, cfg.max_order);
      }
      Json j = report::map_record(*map, label);
      if (verify) j["verify"] = verify_record(*map, !cfg.no_dickson);
      emit(out, cfg, j, report::map_text(j));
    } else if (snp->parsed()) {
      if (p < 2 || n < 1) throw InvalidArgument("need n >= 1 and a prime p");
      const auto set = companion_trace_set(static_cast<std::uint64_t>(n), static_cast<std::uint32_t>(p));
      const Json j{{"n", n}, {"p", p}, {"members", set.members}};
      std::string text;
      for (std::size_t i = 0; i < set.members.size(); ++i) text += (i ? " " : "") + std::to_string(set.members[i]);
      emit(out, cfg, j, text + "\n");
    } else if (admissible->parsed()) {
      if (m < 1 || n < 1 || p < 2) throw InvalidArgument("need positive m, n and a prime p");
      const bool ok = is_admissible_pair(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n),
                                         static_cast<std::uint32_t>(p));
      const Json j{{"m", m}, {"n", n}, {"p", p}, {"admissible", ok}};
      emit(out, cfg, j, ok ? "true\n" : "false\n");
    } else if (search->parsed()) {
      const GroupSpec spec = parse_with(ctx, group_spec, [](std::string_view s) { return parse_group_spec(s); });
      SearchOptions o = search_options(cfg);
      o.chi = chi;
      if (!type_text.empty()) o.type = parse_with(ctx, type_text, [](std::string_view s) { return parse_type(s); });
      const FiniteGroup g = build_group(spec, cfg.max_order);
      const Json j = report::search_json(g, search_maps(g, o));
      emit(out, cfg, j, report::search_text(j));
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!ctx.text.empty()) {
      err << "  " << ctx.text << "\n  " << std::string(e.column(), ' ') << std::string(std::max<std::size_t>(1, e.length()), '^')
          << "\n";
    }
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace regmap::cli
