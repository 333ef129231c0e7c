#include <doctest.h>

#include <cmath>
#include <sstream>

#include "kcl/report.hpp"
#include "kcl/verify.hpp"

using namespace kcl;

TEST_CASE("check passes iff the value is finite and within tolerance") {
  CHECK(report::make_check("a", "", 1.0, 1.0 + 1e-9, 1e-8).pass);
  CHECK_FALSE(report::make_check("b", "", 1.0, 1.1, 1e-8).pass);
  CHECK_FALSE(report::make_check("c", "", std::nan(""), 0.0, 1e30).pass);
}

TEST_CASE("suite pass flag is the conjunction of its checks") {
  report::Suite suite;
  suite.name = "demo";
  suite.checks.push_back(report::make_check("ok", "", 0.0, 0.0, 1e-12));
  CHECK(suite.passed());
  suite.checks.push_back(report::make_check("bad", "", 1.0, 0.0, 1e-12));
  CHECK_FALSE(suite.passed());
  CHECK_FALSE(report::all_passed({suite}));
}

TEST_CASE("JSON reports are byte-identical across repeated runs") {
  const auto suites1 = verify::run_suites("maxwellian");
  const auto suites2 = verify::run_suites("maxwellian");
  std::ostringstream a, b;
  // runtime varies between runs; zero it so the comparison is meaningful
  auto scrub = [](std::vector<report::Suite> s) {
    for (auto& suite : s) suite.runtime_seconds = 0.0;
    return s;
  };
  report::write_json(a, scrub(suites1), 1.0);
  report::write_json(b, scrub(suites2), 1.0);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("every named suite runs and passes at default tolerances") {
  for (const auto& name : verify::suite_names()) {
    const auto suites = verify::run_suites(name);
    REQUIRE(suites.size() == 1);
    CHECK(suites.front().passed());
  }
  CHECK(verify::run_suites("all").size() == verify::suite_names().size());
  CHECK_THROWS_AS(verify::run_suites("bogus"), std::invalid_argument);
}
