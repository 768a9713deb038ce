#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "punctri/canon.hpp"
#include "punctri/report.hpp"
#include "punctri/tri_io.hpp"

using namespace punctri;

TEST_CASE("serialize a triangle") {
  CHECK(serialize(fixtures::triangle()) == "triangle 3 0,1,2");
  CHECK(serialize(Triangulation::build(3, {{2, 1, 0}})) == "- 3 0,1,2");
}

TEST_CASE("parse skips comments and blank lines") {
  std::istringstream in("# header\n\n  # indented comment\nt 4 0,1,2;0,1,3;0,2,3;1,2,3\n- 3 2,1,0;\r\n");
  const auto items = read_tri(in);
  REQUIRE(items.size() == 2);
  CHECK(items[0] == fixtures::tetrahedron());
  CHECK(items[0].label() == "t");
  CHECK(items[1].label().empty());
  CHECK(items[1] == fixtures::triangle());
}

TEST_CASE("round trip is a fixpoint") {
  std::vector<Triangulation> items;
  for (const auto& t : {fixtures::k7_torus(), fixtures::mobius5(), fixtures::fan_disk()}) {
    items.push_back(canonical_key(t).to_triangulation(t.label()));
  }
  std::ostringstream first;
  write_tri(first, items);
  std::istringstream in(first.str());
  const auto parsed = read_tri(in);
  std::ostringstream second;
  write_tri(second, parsed);
  CHECK(first.str() == second.str());
  for (std::size_t i = 0; i < items.size(); ++i) CHECK(canonical_key(parsed[i]) == canonical_key(items[i]));
}

TEST_CASE("syntax errors carry the line number") {
  std::istringstream missing("# c\nt 3\n");
  try {
    parse_tri(missing);
    FAIL("expected an exception");
  } catch (const TriParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream bad_int("t x 0,1,2\n");
  CHECK_THROWS_AS(parse_tri(bad_int), TriParseError);
  std::istringstream bad_face("t 3 0,1\n");
  CHECK_THROWS_AS(parse_tri(bad_face), TriParseError);
  std::istringstream extra("t 3 0,1,2 more\n");
  CHECK_THROWS_AS(parse_tri(extra), TriParseError);
}

TEST_CASE("invalid records name the label") {
  std::istringstream in("dup 4 0,1,2;0,1,3;0,2,3;1,2,3;0,1,2\n");
  try {
    read_tri(in);
    FAIL("expected an exception");
  } catch (const InvalidTriangulation& e) {
    CHECK(e.kind() == Violation::DuplicateFace);
    CHECK(std::string(e.what()).rfind("dup (line 1)", 0) == 0);
  }
}

TEST_CASE("report json layout") {
  StageReport r;
  r.surface = "S1";
  r.input_count = 21;
  r.xi.push_back({1, 433, {232, 193, 8}});
  r.stages[0] = {184, 184, 80, 80};
  r.basis_count = 80;
  r.level_cap = 945;
  r.k_effective = 1;
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["surface"] == "S1");
  CHECK(j["xi"][0]["count"] == 433);
  CHECK(j["xi"][0]["pylonic"]["one"] == 193);
  CHECK(j["stages"]["i"]["produced"] == 184);
  CHECK(j["stages"]["i"]["distinct"] == 80);
  CHECK(j["stages"]["v"]["produced"] == 0);
  CHECK(j["basis_count"] == 80);
  CHECK(j["merged_duplicates"] == 0);
  CHECK(j["k_effective"] == 1);
  CHECK(j["level_cap"] == 945);
  CHECK(j["complete"] == true);
}
