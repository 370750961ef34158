#include <sstream>
#include <string>

#include "doctest.h"
#include "inducib/report.hpp"
#include "inducib/suites.hpp"
#include "json.hpp"

using namespace inducib;

TEST_CASE("exact values round-trip through the JSON report") {
  RunReport rep;
  rep.command = "test";
  rep.seed = 9;
  rep.precision = 64;
  CheckRecord c;
  c.name = "demo";
  c.statement = "a value";
  c.params = {{"F", "2,1,1"}};
  const ExactRat big(ExactInt("123456789012345678901234567890"), ExactInt("987654321987654321"));
  c.values = {exact_value("q", big), exact_value("z", ExactInt(-7)), text_value("note", "a,b \"c\"")};
  rep.checks.push_back(c);
  const auto j = nlohmann::json::parse(to_json(rep));
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["tool_version"] == tool_version());
  CHECK(j["seed"] == 9);
  CHECK(j["status"] == "PASS");
  CHECK(j["checks"][0]["params"]["F"] == "2,1,1");
  CHECK(parse_rational(j["checks"][0]["values"][0]["exact"].get<std::string>()) == big);
  CHECK(parse_rational(j["checks"][0]["values"][1]["exact"].get<std::string>()) == -7);
  CHECK(j.contains("wall_time_s"));
  CHECK_FALSE(nlohmann::json::parse(to_json(rep, false)).contains("wall_time_s"));
}

TEST_CASE("every FAIL carries a witness and flips the run status") {
  RunReport rep;
  rep.checks.push_back(record(PatternSpec({9, 1}), edge_budget(PatternSpec({9, 1})), true));
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.checks[0].witness.empty());
  const auto j = nlohmann::json::parse(to_json(rep));
  CHECK(j["status"] == "FAIL");
  CHECK(j["checks"][0]["witness"].is_string());
}

TEST_CASE("CSV projection quotes fields and has one row per value") {
  RunReport rep;
  CheckRecord c;
  c.name = "demo";
  c.params = {{"F", "2,1"}, {"n", "7"}};
  c.values = {exact_value("q", ExactRat(3, 4)), text_value("t", "x\"y")};
  rep.checks.push_back(c);
  const std::string csv = to_csv(rep);
  std::istringstream is(csv);
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 3);
  CHECK(csv.find("\"F=2,1;n=7\"") != std::string::npos);
  CHECK(csv.find("3/4,0.75") != std::string::npos);
  CHECK(csv.find("\"x\"\"y\"") != std::string::npos);
}

TEST_CASE("suite reports are reproducible") {
  SuiteOptions opts;
  opts.seed = 4;
  RunReport a;
  a.checks = run_suite("shift", opts);
  RunReport b;
  b.checks = run_suite("shift", opts);
  CHECK(to_json(a, false) == to_json(b, false));
  opts.threads = 2;
  RunReport c;
  c.checks = run_suite("stability", opts);
  RunReport d;
  opts.threads = 1;
  d.checks = run_suite("stability", opts);
  CHECK(to_json(c, false) == to_json(d, false));
  CHECK_THROWS(run_suite("nope"));
}

TEST_CASE("every suite passes") {
  for (const auto& name : suite_names()) {
    INFO(name);
    const auto checks = run_suite(name);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
      INFO(c.name, " ", c.witness);
      CHECK(c.pass);
    }
  }
}
