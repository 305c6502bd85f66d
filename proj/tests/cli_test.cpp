#include <doctest.h>

#include <regex>
#include <sstream>

#include <json.hpp>

#include "regmap/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "regmap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = regmap::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

using Json = nlohmann::ordered_json;

}  // namespace

TEST_CASE("construct") {
  const auto r = run({"construct", "m3", "39", "--verify"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("type (39,4)") != std::string::npos);
  CHECK(r.out.find("chi -35") != std::string::npos);
  CHECK(r.out.find("orientable no") != std::string::npos);
  CHECK(r.out.find("chi_by_orbits: -35") != std::string::npos);

  const auto j = run({"construct", "m2", "x=1,n=6,p=5", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = Json::parse(j.out);
  CHECK(doc["params"] == "m2:x=1,n=6,p=5");
  CHECK(doc["chi"] == -35);
  CHECK(doc["genus"] == 37);

  const auto lift = run({"construct", "lift", "d=5,f=7,m=3,n=8", "--format", "json", "--verify"});
  REQUIRE(lift.code == 0);
  const auto lifted = Json::parse(lift.out);
  CHECK(lifted["chi"] == -259);
  CHECK(lifted["type"] == Json::array({15, 8}));
  CHECK(lifted["verify"]["chi_by_orbits"] == -259);

  const auto none = run({"construct", "lift", "5,5,4,3"});
  CHECK(none.code == 1);
  CHECK(none.err.find("no base map") != std::string::npos);
}

TEST_CASE("number theory subcommands") {
  CHECK(run({"snp", "--n", "4", "--p", "7"}).out == "0\n");
  CHECK(run({"snp", "--n", "6", "--p", "5"}).out == "1\n");
  CHECK(run({"admissible", "--m", "6", "--n", "6", "--p", "11"}).out == "true\n");
  CHECK(run({"admissible", "--m", "6", "--n", "6", "--p", "13"}).out == "false\n");
  CHECK(run({"snp", "--n", "5", "--p", "7"}).code == 1);
}

TEST_CASE("classify report") {
  const auto r = run({"classify", "--p", "5", "--q", "7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["p"] == 5);
  CHECK(doc["q"] == 7);
  std::vector<std::string> params;
  for (const auto& d : doc["descriptors"]) {
    params.push_back(d["params"]);
    CHECK(d["chi"] == -35);
  }
  for (const char* want : {"m1:j=7,k=7", "m2:x=0,n=4,p=7", "m3:u=39"})
    CHECK(std::find(params.begin(), params.end(), want) != params.end());

  // parse and re-emit is byte-identical
  CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);

  // text agrees with the JSON on every number
  const auto text = run({"classify", "--p", "5", "--q", "7"});
  REQUIRE(text.code == 0);
  std::istringstream lines(text.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.find(std::to_string(doc["descriptors"].size()) + " descriptors") != std::string::npos);
  std::size_t index = 0;
  for (const auto& d : doc["descriptors"]) {
    const std::string header = "[" + std::to_string(index++) + "] " + d["case"].get<std::string>();
    const auto at = text.out.find(header + "  " + d["params"].get<std::string>() + "\n");
    REQUIRE(at != std::string::npos);
    const auto end = text.out.find("\n[", at + 1);
    const std::string block = text.out.substr(at, end == std::string::npos ? std::string::npos : end - at);
    CHECK(block.find("type (" + d["type"][0].dump() + "," + d["type"][1].dump() + ")") != std::string::npos);
    CHECK(block.find("order " + d["group"]["order"].dump()) != std::string::npos);
    CHECK(block.find("chi " + d["chi"].dump()) != std::string::npos);
    if (!d["dual_of"].is_null() && !d["self_dual"].get<bool>())
      CHECK(block.find("dual [" + d["dual_of"].dump() + "]") != std::string::npos);
  }
}

TEST_CASE("search output ignores performance toggles") {
  const auto base = run({"search", "--group", "pgl:f=7", "--chi", "-35", "--type", "6,8", "--format", "json"});
  REQUIRE(base.code == 0);
  CHECK(Json::parse(base.out)["maps"].size() == 2);
  for (const std::vector<std::string>& extra :
       {std::vector<std::string>{"--workers", "1"}, {"--workers", "3"}, {"--no-reduction"}, {"--no-dickson"}}) {
    std::vector<std::string> args{"search", "--group", "pgl:f=7", "--chi", "-35", "--type", "6,8", "--format", "json"};
    args.insert(args.end(), extra.begin(), extra.end());
    CHECK(run(args).out == base.out);
  }
}

TEST_CASE("tables") {
  const auto r = run({"tables", "--format", "json", "--scale", "2000"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["table1"]["rows"].size() == 15);
  CHECK(doc["table1"]["verified"] == true);
  CHECK(doc["table3"].size() == 6);
  CHECK(doc["table4"].size() == 3);
  for (const auto& row : doc["table3"]) CHECK(row["arithmetic"] == true);
  CHECK(doc["table3"][0]["maps_found"] == "skipped (scale)");
}

TEST_CASE("errors and usage") {
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 1);
  CHECK(run({"classify", "--p", "5"}).code == 1);
  CHECK(run({"classify", "--p", "5", "--q", "9"}).code == 1);
  CHECK(run({"search", "--group", "psl:f=11", "--bogus"}).code == 1);
  CHECK(run({"--format", "xml", "snp", "--n", "4", "--p", "7"}).code == 1);
  CHECK(run({"--help"}).code == 0);

  const auto bad = run({"search", "--group", "psl:f=1x"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("psl:f=1x\n        ^^") != std::string::npos);
  const auto bad_type = run({"search", "--group", "psl:f=11", "--type", "6;6"});
  CHECK(bad_type.code == 1);
  CHECK(run({"construct", "m2", "2,6,5"}).code == 1);
  CHECK(run({"--max-order", "100", "search", "--group", "psl:f=11"}).code == 1);
}
