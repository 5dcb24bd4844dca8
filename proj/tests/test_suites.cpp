#include <doctest.h>

#include "wittforge/errors.hpp"
#include "wittforge/suites.hpp"

using namespace wittforge;

TEST_CASE("suite registry") {
  const auto& ids = suite_ids();
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(ids.size() == 14);
  const Json cov = coverage_map();
  for (const auto& id : ids) CHECK(cov.contains(id));
  CHECK_THROWS_AS(suite_run("no-such-suite", 1), ValidationError);
}

TEST_CASE("reports are deterministic without timing") {
  SuiteBudget b;
  b.random_cases = 20;
  const auto a = suite_run("rees", 5, b);
  const auto c = suite_run("rees", 5, b);
  CHECK(a.passed());
  CHECK(report_to_json(a, false).dump() == report_to_json(c, false).dump());
  CHECK_FALSE(report_to_json(a, false).contains("wall_seconds"));
}

TEST_CASE("concurrent runs agree with sequential ones") {
  SuiteBudget b;
  b.random_cases = 10;
  b.operator_cases = 5;
  const auto all = suite_run_all({"v-nonfree", "cone", "ring-core"}, 9, b);
  REQUIRE(all.size() == 3);
  CHECK(all[0].name == "cone");
  for (const auto& r : all) {
    CHECK(r.passed());
    CHECK(report_to_json(r, false).dump() == report_to_json(suite_run(r.name, 9, b), false).dump());
  }
}
