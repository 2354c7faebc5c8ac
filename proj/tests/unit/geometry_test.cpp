#include "doctest.h"

#include <nlohmann/json.hpp>

#include "curvepi/error.hpp"
#include "curvepi/fixtures.hpp"
#include "curvepi/geometry.hpp"
#include "support/oracles.hpp"

using namespace curvepi;

namespace {
  CombinatorialType fixture_type(std::string const& name) {
    auto const text = find_fixture("types/" + name + ".json");
    REQUIRE(text.has_value());
    return nlohmann::json::parse(*text).get<CombinatorialType>();
  }

  BlowUpLedger nodal_cubic_with_line() {
    return BlowUpLedger({{"C", 9, 1, 0, false}, {"L", 1, 0, 0, false}},
                        {{"n", PointKind::node, 0, {"C"}, "C", std::nullopt},
                         {"t", PointKind::tangency, 3, {"C", "L"}, std::nullopt, std::nullopt}});
  }
}  // namespace

TEST_CASE("singularity labels") {
  auto const a3 = SingularityKind::parse("A3");
  REQUIRE(a3.has_value());
  CHECK(a3->branch_count() == 2);
  CHECK(a3->intersection(0, 1) == 2);
  CHECK(SingularityKind::parse("A2")->branch_count() == 1);
  CHECK(SingularityKind::parse("D4")->branch_count() == 3);
  CHECK(SingularityKind::parse("X9")->branch_count() == 4);
  CHECK(SingularityKind::parse("A0") == std::nullopt);
  CHECK(SingularityKind::parse("Q7") == std::nullopt);
  REQUIRE(SingularityKind::parse("E7").has_value());
  CHECK(SingularityKind::parse("E7")->label() == "E7");
  CHECK(SingularityKind::parse("E6") == std::nullopt);
}

TEST_CASE("every shipped type validates") {
  for (auto const& f : embedded_fixtures()) {
    std::string const name = f.name;
    if (name.rfind("types/", 0) != 0) {
      continue;
    }
    auto const ct = nlohmann::json::parse(f.json).get<CombinatorialType>();
    INFO(name);
    CHECK(validate_combinatorial_type(ct).ok());
  }
}

TEST_CASE("validation flags Bezout and genus violations") {
  CombinatorialType two_lines;
  two_lines.components = {{"L1", 1, 1}, {"L2", 1, 1}};
  CHECK(validate_combinatorial_type(two_lines).has("bezout"));
  two_lines.points = {{"A1", "p", {"L1", "L2"}}};
  CHECK(validate_combinatorial_type(two_lines).ok());

  CombinatorialType cubic;
  cubic.components = {{"C", 3, 1}};
  cubic.points     = {{"A1", "p", {"C", "C"}}, {"A1", "q", {"C", "C"}}};
  CHECK(validate_combinatorial_type(cubic).has("genus"));

  CombinatorialType sextic;
  sextic.components = {{"C", 6, 1}};
  CHECK(validate_combinatorial_type(sextic).has("degree"));
  sextic.points = {{"Z1", "p", {"C"}}};
  CHECK(validate_combinatorial_type(sextic).has("kind"));
}

TEST_CASE("json round trip of a combinatorial type") {
  CombinatorialType const ct = fixture_type("case_2_2_2");
  nlohmann::json          j  = ct;
  CombinatorialType const back = j.get<CombinatorialType>();
  CHECK(back.degrees() == ct.degrees());
  CHECK(nlohmann::json(back) == j);
}

TEST_CASE("blowing up a node drops self-intersection by four") {
  BlowUpLedger const l  = nodal_cubic_with_line();
  BlowUpLedger const l1 = blow_up(l, {"n", {}});
  CHECK(l1.component("C").self_intersection == 5);
  CHECK(l1.component("C").nodes == 0);
  CHECK(l1.exceptional_divisors() == 1);
  CHECK(l1.component("E1").self_intersection == -1);
  CHECK(l1.pending().size() == 1);
}

TEST_CASE("a tangency of order k resolves after k blow-ups") {
  BlowUpLedger l = nodal_cubic_with_line();
  for (int i = 0; i < 3; ++i) {
    l = blow_up(l, {"t", {}});
  }
  CHECK(l.component("C").self_intersection == 6);
  CHECK(l.component("L").self_intersection == -2);
  CHECK(l.pending().size() == 1);
  CHECK(l.exceptional_divisors() == 3);
}

TEST_CASE("k smooth blow-ups drop self-intersection by k") {
  test::Rng rng(0x5eed08);
  for (int trial = 0; trial < 50; ++trial) {
    long const   start = rng.uniform(-5, 25);
    long const   k     = rng.uniform(0, 10);
    BlowUpLedger l({{"D", start, 0, 0, false}}, {});
    for (long i = 0; i < k; ++i) {
      l = blow_up(l, {std::nullopt, {{"D", 1}}});
    }
    CHECK(l.component("D").self_intersection == start - k);
    CHECK(l.exceptional_divisors() == static_cast<std::size_t>(k));
  }
}

TEST_CASE("nori verdicts are monotone under further blow-ups") {
  test::Rng rng(0x5eed09);
  for (int trial = 0; trial < 50; ++trial) {
    BlowUpLedger l({{"D", rng.uniform(0, 12), static_cast<unsigned>(rng.uniform(0, 2)), 0, false}}, {});
    bool         was_pass = nori_check(l, {"D"}).pass;
    for (int i = 0; i < 6; ++i) {
      l              = blow_up(l, {std::nullopt, {{"D", 1}}});
      bool const now = nori_check(l, {"D"}).pass;
      CHECK((!now || was_pass));
      was_pass = now;
    }
  }
}

TEST_CASE("nori refuses unresolved ledgers and cusps") {
  CHECK_THROWS_AS(nori_check(nodal_cubic_with_line(), {"C"}), Error);
  BlowUpLedger const cuspidal({{"C", 9, 0, 1, false}}, {});
  auto const         r = nori_check(cuspidal, {"C"});
  CHECK_FALSE(r.d_nodal_only);
  CHECK_FALSE(r.pass);
}

TEST_CASE("blow-up steps are checked") {
  BlowUpLedger const l = nodal_cubic_with_line();
  CHECK_THROWS_AS(blow_up(l, {"nowhere", {}}), Error);
  CHECK_THROWS_AS(blow_up(l, {"n", {{"C", 1}}}), Error);
  CHECK_THROWS_AS(blow_up(l, {"n", {{"L", 1}}}), Error);
  CHECK_THROWS_AS(blow_up(l, {std::nullopt, {}}), Error);
}

TEST_CASE("shipped blow-up scripts meet their expectations") {
  for (auto const& f : embedded_fixtures()) {
    std::string const name = f.name;
    if (name.rfind("blowup/", 0) != 0) {
      continue;
    }
    INFO(name);
    BlowUpScript const s   = blow_up_script_from_json(nlohmann::json::parse(f.json));
    ScriptRun const    run = run_script(s);
    if (s.expected_self_intersection) {
      CHECK(run.final.component(s.d_components.front()).self_intersection == *s.expected_self_intersection);
    }
    if (s.expected_nori == "unresolved") {
      CHECK_FALSE(run.nori.has_value());
      CHECK(!run.unresolved.empty());
    } else if (s.expected_nori) {
      REQUIRE(run.nori.has_value());
      CHECK(run.nori->pass == (*s.expected_nori == "pass"));
    }
  }
}
