#include "doctest.h"

#include <nlohmann/json.hpp>

#include "curvepi/error.hpp"
#include "curvepi/verify.hpp"

using namespace curvepi;

TEST_CASE("twelve lemmas, all passing") {
  CHECK(lemma_ids().size() == 12);
  auto const reports = run_suite();
  REQUIRE(reports.size() == 12);
  for (auto const& r : reports) {
    INFO(r.id, ": ", r.detail);
    CHECK(r.status == Status::pass);
    CHECK(!r.title.empty());
  }
  CHECK(all_passed(reports));
  CHECK(to_json(reports).at("passed") == true);
}

TEST_CASE("selected lemmas run in the requested order") {
  SuiteOptions o;
  o.only       = {"V12", "V1"};
  auto const r = run_suite(o);
  REQUIRE(r.size() == 2);
  CHECK(r[0].id == "V12");
  CHECK(r[1].id == "V1");
  o.only = {"V99"};
  CHECK_THROWS_AS(run_suite(o), Error);
}

TEST_CASE("a small coset budget makes V3 inconclusive, not failed") {
  SuiteOptions o;
  o.limits.max_cosets = 10;
  LemmaReport const r = run_lemma("V3", o);
  CHECK(r.status == Status::inconclusive);
  CHECK(r.detail.find("budget") != std::string::npos);
  CHECK_FALSE(all_passed({r}));
}

TEST_CASE("V8 artifacts describe the bipartite commutation graph") {
  LemmaReport const r = run_lemma("V8");
  REQUIRE(r.status == Status::pass);
  CHECK(r.artifacts.dump().find("commut") != std::string::npos);
}

TEST_CASE("reports are deterministic unless timings are requested") {
  SuiteOptions o;
  o.only = {"V1", "V2", "V9", "V10"};
  CHECK(to_json(run_suite(o)).dump() == to_json(run_suite(o)).dump());
  CHECK(to_json(run_suite(o)).dump().find("elapsed") == std::string::npos);
  CHECK(to_json(run_suite(o), true).dump().find("elapsed") != std::string::npos);
  CHECK(format_reports(run_suite(o)).find("V10") != std::string::npos);
}
