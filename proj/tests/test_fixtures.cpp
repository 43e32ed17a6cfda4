#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitop/fixtures.hpp"

using namespace digitop;

// Every fixture's expected outcomes are asserted here, one subcase per
// fixture so a mismatch names its source.
TEST_CASE("all fixture expectations hold") {
  for (const std::string& name : fixture_names()) {
    SUBCASE(name.c_str()) {
      FixtureReport report = run_fixture(name);
      CHECK(!report.checks.empty());
      for (const FixtureCheck& check : report.checks) {
        INFO(report.fixture, ": ", check.name);
        CHECK(check.actual == check.expected);
      }
    }
  }
}

TEST_CASE("unknown fixtures are rejected") {
  CHECK_THROWS_AS(run_fixture("no-such-fixture"), error);
}

TEST_CASE("run_all covers the whole registry") {
  CHECK(run_all_fixtures().size() == fixture_names().size());
}
