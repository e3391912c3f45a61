#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "hemi/harness.hpp"

using namespace hemi;

namespace {

const SuiteReport& report_for(const AggregateReport& a, const std::string& id,
                              const std::string& carrier) {
  for (const auto& r : a.reports)
    if (r.id == id && r.carrier == carrier) return r;
  FAIL("missing report " << id << " on " << carrier);
  return a.reports.front();
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("suite registry") {
  const auto ids = suite_ids();
  for (const auto* id : {"axioms", "closure-product", "hemiregular-fuzzy", "prime-characterization",
                         "normalization", "maximal-completely-normal"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  CHECK_THROWS_AS(run_suite("no-such-suite", builtins::zmod(2)), PreconditionError);
}

TEST_CASE("closure-product on example21 covers all 225 pairs") {
  const auto r = run_suite("closure-product", builtins::example21());
  CHECK(r.status() == "Holds");
  CHECK(r.params == "pairs=225");
}

TEST_CASE("closure-product fails on rings for sets without 0") {
  const auto r = run_suite("closure-product", builtins::zmod(4));
  REQUIRE(r.failed());
  CHECK_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().description.rfind("A={1} B={1}", 0) == 0);
  // Every mismatch involves a set without 0.
  CHECK(std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
    return n.find("of which both sets contain 0: 0") != std::string::npos;
  }));
}

TEST_CASE("hemiregularity suites exercise both directions") {
  for (const auto* name : {"chain(3)", "zmod(6)"}) {
    CHECK(run_suite("hemiregular-ideals", builtin(name)).status() == "Holds");
    CHECK(run_suite("hemiregular-fuzzy", builtin(name)).status() == "Holds");
  }
  for (const auto* name : {"zmod(4)", "example21"}) {
    const auto crisp = run_suite("hemiregular-ideals", builtin(name));
    CHECK(crisp.status() == "Holds");
    REQUIRE_FALSE(crisp.witnesses.empty());
    CHECK(crisp.witnesses.front().description.find("A cap B") != std::string::npos);
    const auto fuzzy = run_suite("hemiregular-fuzzy", builtin(name));
    CHECK(fuzzy.status() == "Holds");
    REQUIRE_FALSE(fuzzy.witnesses.empty());
    CHECK(fuzzy.witnesses.front().description.find("h-product=") != std::string::npos);
  }
}

TEST_CASE("prime characterization has no disagreements") {
  for (const auto* name : {"zmod(4)", "zmod(6)", "example21"}) {
    CHECK(run_suite("prime-characterization", builtin(name)).status() == "Holds");
  }
}

TEST_CASE("N0 examples") {
  const auto reports = run_counterexamples();
  REQUIRE(reports.size() == counterexample_ids().size());
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.status() == "HoldsUpToBound(60)");
    CHECK(r.carrier == "N0<=60");
  }
}

TEST_CASE("skips are reported with a reason") {
  const auto r = run_suite("ring-primality", builtins::chain(2));
  CHECK(r.skipped);
  CHECK(r.status() == "Skipped");
  CHECK_FALSE(r.skip_reason.empty());
  SuiteParams small;
  small.pair_scan_cap = 2;
  const auto capped = run_suite("closure-product", builtins::zmod(4), small);
  CHECK(capped.skipped);
  CHECK_FALSE(capped.failed());
}

TEST_CASE("reports are identical across thread counts") {
  RunConfig config;
  config.builtins = {"example21", "zmod(4)", "chain(2)"};
  config.params.samples = 100;
  const auto serial = run_all(config);
  config.jobs = 4;
  const auto parallel = run_all(config);
  REQUIRE(serial.reports.size() == parallel.reports.size());
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    const auto& a = serial.reports[i];
    const auto& b = parallel.reports[i];
    CHECK(a.id == b.id);
    CHECK(a.carrier == b.carrier);
    CHECK(a.status() == b.status());
    CHECK(a.params == b.params);
    CHECK(a.notes == b.notes);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t w = 0; w < a.witnesses.size(); ++w) {
      CHECK(a.witnesses[w].to_string() == b.witnesses[w].to_string());
    }
  }
  CHECK(serial.failures() == parallel.failures());
}

TEST_CASE("aggregate formats") {
  RunConfig config;
  config.builtins = {};
  config.include_counterexamples = false;
  const auto empty = run_all(config);
  CHECK(empty.reports.empty());
  CHECK(empty.exit_code() == 0);

  config.builtins = {"zmod(2)"};
  config.suites = {"axioms", "prime-characteristic"};
  config.compare_product_forms = true;
  const auto agg = run_all(config);
  REQUIRE(agg.reports.size() == 2);
  CHECK_FALSE(agg.annotations.empty());
  const auto& r = report_for(agg, "axioms", "zmod(2)");
  const auto line = r.machine_line();
  CHECK(std::count(line.begin(), line.end(), '\t') == 4);
  CHECK(line.rfind("axioms\tzmod(2)\tHolds\t-\t", 0) == 0);
  const auto j = nlohmann::json::parse(r.json());
  CHECK(j["id"] == "axioms");
  CHECK(j["verdict"] == "Holds");
  CHECK(agg.text().find("failures: 0") != std::string::npos);

  config.suites = {"bogus"};
  CHECK_THROWS_AS(run_all(config), PreconditionError);
}

}  // TEST_SUITE
