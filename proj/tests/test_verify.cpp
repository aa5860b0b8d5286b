#include <doctest.h>

#include <algorithm>

#include "switchquest/generators.hpp"
#include "switchquest/verify.hpp"

using namespace switchquest;

namespace {

bool has_check(const SuiteReport& r, const std::string& needle) {
  return std::any_of(r.checks.begin(), r.checks.end(),
                     [&](const CheckResult& c) { return c.name.find(needle) != std::string::npos; });
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("budget names") {
  CHECK(parse_budget("small") == Budget::kSmall);
  CHECK(parse_budget("full") == Budget::kFull);
  CHECK(std::string(to_string(Budget::kFull)) == "full");
  CHECK_THROWS(parse_budget("huge"));
}

TEST_CASE("every suite passes at the small budget") {
  for (const auto& name : suite_names()) {
    INFO(name);
    const SuiteReport r = run_suite(name, kDefaultSeed, Budget::kSmall);
    CHECK(r.suite == name);
    CHECK(r.complete);
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks)
      if (!c.report_only) CHECK_MESSAGE(c.pass, c.name << ": expected " << c.expected << ", got " << c.actual);
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(run_suite("nope", 1, Budget::kSmall), std::invalid_argument);
}

TEST_CASE("reports are deterministic for a seed") {
  for (const char* name : {"thm3", "thm4", "cor_reductions", "ratios"}) {
    const Json a = report_to_json(run_suite(name, 77, Budget::kSmall));
    const Json b = report_to_json(run_suite(name, 77, Budget::kSmall));
    CHECK(a == b);
    CHECK(a["seed"] == 77);
    CHECK(a["budget"] == "small");
  }
  const Json c = report_to_json(run_suite("thm3", 78, Budget::kSmall));
  const Json d = report_to_json(run_suite("thm3", 77, Budget::kSmall));
  CHECK(c["checks"] != d["checks"]);
}

TEST_CASE("suite contents") {
  const SuiteReport p = run_suite("pyramid", kDefaultSeed, Budget::kSmall);
  CHECK(has_check(p, "Py(4) k=2 path"));
  const SuiteReport r = run_suite("ratios", kDefaultSeed, Budget::kSmall);
  CHECK(has_check(r, "single_vertex"));
  const SuiteReport t = run_suite("remark_tree", kDefaultSeed, Budget::kSmall);
  CHECK(has_check(t, "TreeRemark"));
}

TEST_CASE("value cache") {
  ValueCache cache;
  CHECK(cache.value(gen_pyramid(2), 1, Goal::kSink) == 2);
  CHECK(cache.value(gen_pyramid(2), 1, Goal::kSink) == 2);
  CHECK(cache.value(gen_pyramid(2), 2, Goal::kPath) == 2);
  CHECK(cache.size() == 1);
  const auto inst = cache.instances();
  REQUIRE(inst.size() == 1);
  CHECK(inst[0].values.size() == 2);
  const auto props = check_ratio_properties(cache);
  CHECK_FALSE(props.empty());
  for (const auto& c : props) CHECK(c.pass);
}

TEST_CASE("failing checks make the report fail") {
  SuiteReport r;
  r.checks.push_back({"a", "1", "1", true, false});
  r.checks.push_back({"b", "1", "2", false, true});
  CHECK(r.passed());
  r.checks.push_back({"c", "1", "2", false, false});
  CHECK_FALSE(r.passed());
  const Json doc = report_to_json(r);
  CHECK(doc["passed"] == false);
  CHECK(doc["checks"].size() == 3);
}

}  // TEST_SUITE
