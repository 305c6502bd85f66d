#include "regmap/report.hpp"

#include <sstream>

namespace regmap::report {

namespace {

Json optional_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json type_json(const MapType& t) { return Json::array({t.x, t.y}); }

Json triple_json(const Triple& t) { return Json{{"r", hex(t.r)}, {"t", hex(t.t)}, {"l", hex(t.l)}}; }

std::string type_str(const Json& t) { return "(" + t[0].dump() + "," + t[1].dump() + ")"; }

std::string yes_no(const Json& v) {
  if (v.is_null()) return "unknown";
  return v.get<bool>() ? "yes" : "no";
}

}  // namespace

std::string hex(const Element& e) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : e.bytes()) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

Json map_record(const AlgebraicMap& m, std::string_view params) {
  Json j;
  j["family"] = m.group().family();
  j["params"] = std::string(params);
  j["group_order"] = m.group().order();
  j["triple"] = triple_json(m.triple());
  j["type"] = type_json(m.type());
  j["chi"] = m.chi();
  if (m.group().order() <= m.group().enumeration_limit()) {
    const bool orientable = orientability(m);
    j["orientable"] = orientable;
    j["genus"] = genus(m.chi(), orientable);
  } else {
    j["orientable"] = nullptr;
    j["genus"] = nullptr;
  }
  return j;
}

Json classify_json(const ClassifyReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["p"] = report.p;
  j["q"] = report.q;
  Json list = Json::array();
  for (const auto& d : report.descriptors) {
    Json e;
    e["case"] = d.case_tag;
    e["params"] = d.params;
    e["type"] = type_json(d.type);
    e["group"] = Json{{"family", d.group_family}, {"order", d.group_order}};
    e["chi"] = d.chi;
    e["chi_by_orbits"] = d.chi_by_orbits ? Json(*d.chi_by_orbits) : Json(nullptr);
    e["orientable"] = optional_json(d.orientable);
    e["status"] = std::string(status_name(d.status));
    e["dual_of"] = d.dual_of ? Json(*d.dual_of) : Json(nullptr);
    e["self_dual"] = d.self_dual;
    e["note"] = d.note;
    e["triple"] = d.map ? triple_json(d.map->triple()) : Json(nullptr);
    list.push_back(std::move(e));
  }
  j["descriptors"] = std::move(list);
  return j;
}

std::string classify_text(const Json& report) {
  std::ostringstream out;
  out << "chi = -" << report["p"].dump() << "*" << report["q"].dump() << ": " << report["descriptors"].size()
      << " descriptors\n";
  std::size_t index = 0;
  for (const auto& d : report["descriptors"]) {
    out << "[" << index++ << "] " << d["case"].get<std::string>() << "  " << d["params"].get<std::string>() << "\n";
    out << "    type " << type_str(d["type"]) << "  group " << d["group"]["family"].get<std::string>() << " order "
        << d["group"]["order"].dump() << "  chi " << d["chi"].dump();
    if (!d["chi_by_orbits"].is_null()) out << " (orbits " << d["chi_by_orbits"].dump() << ")";
    out << "\n    status " << d["status"].get<std::string>() << "  orientable " << yes_no(d["orientable"]);
    if (d["self_dual"].get<bool>())
      out << "  self-dual";
    else if (!d["dual_of"].is_null())
      out << "  dual [" << d["dual_of"].dump() << "]";
    out << "\n";
    if (!d["note"].get<std::string>().empty()) out << "    " << d["note"].get<std::string>() << "\n";
  }
  return out.str();
}

Json tables_json(std::int64_t p, std::int64_t q, const std::vector<SporadicCheck>& checks) {
  Json j;
  j["schema_version"] = kSchemaVersion;

  const auto rows = table1();
  const bool complete = rows == table1_bruteforce(200);
  Json t1 = Json::array();
  for (const auto& r : rows) t1.push_back(Json{{"type", type_json(r.type)}, {"k", r.k}});
  j["table1"] = Json{{"rows", t1}, {"verified", complete}};

  Json t2 = Json::array();
  for (const auto& r : table2(p, q)) {
    const bool ok = r.order == static_cast<std::uint64_t>(4 * r.k * p * q) && r.order % r.type.x == 0 &&
                    r.order % r.type.y == 0;
    t2.push_back(Json{{"type", type_json(r.type)}, {"k", r.k}, {"order", r.order}, {"label", r.label}, {"verified", ok}});
  }
  j["table2"] = Json{{"p", p}, {"q", q}, {"rows", t2}};

  Json psl = Json::array(), pgl = Json::array(), eliminated = Json::array();
  for (const auto& c : checks) {
    Json row{{"type", type_json(c.row.type)}, {"p", c.row.p}, {"q", c.row.q}, {"k", c.k},
             {"arithmetic", c.arithmetic_ok}};
    row["maps_found"] = c.maps_found ? Json(*c.maps_found) : Json("skipped (scale)");
    if (c.table == "psl")
      psl.push_back(std::move(row));
    else if (c.table == "pgl")
      pgl.push_back(std::move(row));
    else
      eliminated.push_back(std::move(row));
  }
  j["table3"] = std::move(psl);
  j["table4"] = std::move(pgl);
  j["eliminated"] = std::move(eliminated);
  return j;
}

std::string tables_text(const Json& tables) {
  std::ostringstream out;
  out << "k(x,y) integral pairs" << (tables["table1"]["verified"].get<bool>() ? " [verified]" : " [MISMATCH]") << "\n";
  for (const auto& r : tables["table1"]["rows"]) out << "  " << type_str(r["type"]) << "  k=" << r["k"].dump() << "\n";

  out << "group orders for p=" << tables["table2"]["p"].dump() << ", q=" << tables["table2"]["q"].dump() << "\n";
  for (const auto& r : tables["table2"]["rows"])
    out << "  " << type_str(r["type"]) << "  k=" << r["k"].dump() << "  |G|=" << r["order"].dump() << " ("
        << r["label"].get<std::string>() << ")" << (r["verified"].get<bool>() ? "" : " [MISMATCH]") << "\n";

  auto sporadic = [&](const char* title, const Json& rows) {
    out << title << "\n";
    for (const auto& r : rows) {
      out << "  " << type_str(r["type"]) << "  p=" << r["p"].dump() << " q=" << r["q"].dump() << "  k=" << r["k"].dump()
          << "  arithmetic " << (r["arithmetic"].get<bool>() ? "ok" : "FAIL") << "  maps ";
      out << (r["maps_found"].is_string() ? r["maps_found"].get<std::string>() : r["maps_found"].dump()) << "\n";
    }
  };
  sporadic("PSL(2,q) rows, q^2-1 = 8kp", tables["table3"]);
  sporadic("PGL(2,q) rows, q^2-1 = 4kp", tables["table4"]);
  sporadic("eliminated PSL(2,q) rows", tables["eliminated"]);
  return out.str();
}

Json search_json(const FiniteGroup& g, const SearchResult& result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = Json{{"family", g.family()}, {"order", g.order()}};
  Json maps = Json::array();
  for (const auto& m : result.maps) {
    Json e;
    e["triple"] = triple_json(m.triple);
    e["type"] = type_json(m.type);
    e["chi"] = m.chi;
    e["orbits"] = Json{{"vertices", m.orbits.vertices}, {"edges", m.orbits.edges}, {"faces", m.orbits.faces}};
    e["orientable"] = optional_json(m.orientable);
    e["genus"] = m.genus ? Json(*m.genus) : Json(nullptr);
    e["self_dual"] = m.self_dual;
    maps.push_back(std::move(e));
  }
  j["maps"] = std::move(maps);
  return j;
}

std::string search_text(const Json& search) {
  std::ostringstream out;
  out << search["group"]["family"].get<std::string>() << " order " << search["group"]["order"].dump() << ": "
      << search["maps"].size() << " maps\n";
  for (const auto& m : search["maps"]) {
    out << "  type " << type_str(m["type"]) << "  chi " << m["chi"].dump() << "  V/E/F " << m["orbits"]["vertices"].dump()
        << "/" << m["orbits"]["edges"].dump() << "/" << m["orbits"]["faces"].dump() << "  orientable "
        << yes_no(m["orientable"]);
    if (!m["genus"].is_null()) out << "  genus " << m["genus"].dump();
    if (m["self_dual"].get<bool>()) out << "  self-dual";
    out << "\n";
  }
  return out.str();
}

std::string map_text(const Json& record) {
  std::ostringstream out;
  out << record["params"].get<std::string>() << " in " << record["family"].get<std::string>() << " (order "
      << record["group_order"].dump() << ")\n";
  out << "  type " << type_str(record["type"]) << "  chi " << record["chi"].dump() << "  orientable "
      << yes_no(record["orientable"]);
  if (!record["genus"].is_null()) out << "  genus " << record["genus"].dump();
  out << "\n";
  if (record.contains("verify")) {
    const auto& v = record["verify"];
    for (auto it = v.begin(); it != v.end(); ++it) out << "  " << it.key() << ": " << it.value().dump() << "\n";
  }
  return out.str();
}

}  // namespace regmap::report
