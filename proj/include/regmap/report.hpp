#pragma once

// JSON and text renderings of maps, classification reports, tables and
// search results. Text is rendered from the JSON so the two always agree.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "regmap/classify.hpp"
#include "regmap/maps.hpp"
#include "regmap/search.hpp"

namespace regmap::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Lowercase hex of Element::bytes().
std::string hex(const Element& e);

/// family, params, triple, type, chi, orientable, genus.
Json map_record(const AlgebraicMap& m, std::string_view params);

Json classify_json(const ClassifyReport& report);
std::string classify_text(const Json& report);

/// Tables 1-4 plus the eliminated rows, each with its verification flag.
Json tables_json(std::int64_t p, std::int64_t q, const std::vector<SporadicCheck>& checks);
std::string tables_text(const Json& tables);

Json search_json(const FiniteGroup& g, const SearchResult& result);
std::string search_text(const Json& search);

std::string map_text(const Json& record);

}  // namespace regmap::report
